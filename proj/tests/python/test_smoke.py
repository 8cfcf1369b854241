import json
import os

import pytest

diffgsb = pytest.importorskip("diffgsb")

DUAL = """\
generators: x
commutative: true
weight: 0
order: deglex
relations:
  x*x
"""

LINEAR = """\
generators: x y
commutative: true
weight: 0
order: deglex
relations:
  x + y + 1
"""


def test_version():
    assert diffgsb.__version__


def test_derive_report():
    p = diffgsb.Presentation.from_text(DUAL)
    rep = json.loads(p.derive("x*x", 2))
    assert rep["schema"] == 1
    assert rep["command"] == "derive"
    assert rep["result"] == "2*x^(2)*x^(0) + 2*x^(1)*x^(1)"


def test_check_gs_failure_and_pass():
    dual = diffgsb.Presentation.from_text(DUAL)
    dual.set_bounds(max_order=2, max_degree=6, rounds=8)
    rep = json.loads(dual.check_gs())
    assert not rep["all_trivial"]
    assert rep["failures"][0]["composition"] == "x^(1)*x^(1)*x^(1)"

    linear = diffgsb.Presentation.from_text(LINEAR)
    rep = json.loads(linear.check_gs())
    assert rep["all_trivial"]


def test_normal_form():
    p = diffgsb.Presentation.from_text(DUAL)
    # the ambiguity word itself dies, the composition gap survives
    assert p.normal_form("x^(2)*x^(1)*x^(0)") == "0"
    assert p.normal_form("x^(1)*x^(1)*x^(1)") == "x^(1)*x^(1)*x^(1)"
    assert p.normal_form("x*x*x") == "0"


def test_basis_counts():
    p = diffgsb.Presentation.from_text(LINEAR)
    p.set_bounds(max_order=3, max_degree=1, rounds=8)
    rep = json.loads(p.basis(var_order=1, verify=True))
    assert rep["count"] == 3
    assert rep["oracle"]["exact"]
    assert rep["oracle"]["agrees"]


def test_member_and_complete():
    fixtures = os.environ.get("DIFFGSB_FIXTURES")
    if not fixtures:
        pytest.skip("fixture directory not provided")
    p = diffgsb.Presentation.load(os.path.join(fixtures, "cyclic3_w0.pres"))
    rep = json.loads(p.complete())
    assert rep["completed"]
    assert rep["adjoined"] == [["x^(1)"]]
    rep = json.loads(p.member("x^(1)*x^(0)*x^(0)"))
    assert rep["verdict"] == "member"


def test_bad_presentation_raises():
    with pytest.raises(Exception):
        diffgsb.Presentation.from_text("generators: x\n")

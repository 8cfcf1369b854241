#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diffgsb/expressions.hpp"
#include "diffgsb/reports.hpp"

namespace py = pybind11;
using namespace diffgsb;

namespace {

// Holds a parsed presentation; methods mirror the CLI subcommands and
// return the same JSON report strings.
class PyPresentation {
public:
    static PyPresentation load(const std::string& path) {
        return PyPresentation(load_presentation(path));
    }
    static PyPresentation from_text(const std::string& text) {
        return PyPresentation(parse_presentation(text));
    }

    std::string derive(const std::string& expr, int n) const {
        DiffPoly f = parse_poly(expr, doc_.pres.ctx);
        return render(report_derive(doc_, bounds_, expr, n, derive_n(f, n)));
    }

    std::string reduce(const std::string& expr) const {
        auto rules = lifted();
        DiffPoly f = parse_poly(expr, doc_.pres.ctx);
        return render(report_reduce(doc_, bounds_, expr, f, diffgsb::reduce(f, *rules)));
    }

    std::string member(const std::string& expr) const {
        auto rules = lifted();
        DiffPoly f = parse_poly(expr, doc_.pres.ctx);
        return render(report_member(doc_, bounds_, expr, member_bounded(f, *rules)));
    }

    std::string check_gs() const {
        auto rules = lifted();
        GsbOptions opts{bounds_.max_order, bounds_.max_degree};
        return render(report_check(doc_, bounds_, check_gsb(*rules, opts)));
    }

    std::string complete() const {
        auto rules = lifted();
        GsbOptions opts{bounds_.max_order, bounds_.max_degree};
        return render(report_complete(doc_, bounds_,
                                      diffgsb::complete(*rules, opts, bounds_.rounds)));
    }

    std::string basis(int var_order, bool verify) const {
        auto rules = lifted();
        auto words = diff_irr(*rules, bounds_.max_degree, var_order);
        std::optional<DimensionEstimate> oracle;
        if (verify) oracle = quotient_dim_oracle(*rules, bounds_.max_degree, var_order);
        return render(report_basis(doc_, bounds_, var_order, words, oracle));
    }

    std::string normal_form(const std::string& expr) const {
        auto rules = lifted();
        DiffPoly f = parse_poly(expr, doc_.pres.ctx);
        return print_poly(diffgsb::reduce(f, *rules).normal_form, doc_.order);
    }

    void set_bounds(int max_order, int max_degree, int rounds) {
        bounds_ = Bounds{max_order, max_degree, rounds};
    }

private:
    explicit PyPresentation(PresentationDoc doc) : doc_(std::move(doc)) {}

    std::shared_ptr<RuleSet> lifted() const {
        GsbOptions opts{bounds_.max_order, bounds_.max_degree};
        LiftResult lift = lift_presentation(doc_.pres, doc_.order, bounds_.max_order, opts);
        if (!lift.ok)
            throw std::runtime_error(
                "relations are not a classical Groebner-Shirshov basis");
        return std::make_shared<RuleSet>(std::move(*lift.rules));
    }

    PresentationDoc doc_;
    Bounds bounds_;
};

}  // namespace

PYBIND11_MODULE(_diffgsb, m) {
    m.doc() = "Groebner-Shirshov bases for free differential algebras of weight lambda";
    m.attr("__version__") = "0.1.0";

    py::class_<PyPresentation>(m, "Presentation")
        .def_static("load", &PyPresentation::load, py::arg("path"))
        .def_static("from_text", &PyPresentation::from_text, py::arg("text"))
        .def("set_bounds", &PyPresentation::set_bounds, py::arg("max_order") = 3,
             py::arg("max_degree") = 6, py::arg("rounds") = 8)
        .def("derive", &PyPresentation::derive, py::arg("expr"), py::arg("n") = 1)
        .def("reduce", &PyPresentation::reduce, py::arg("expr"))
        .def("normal_form", &PyPresentation::normal_form, py::arg("expr"))
        .def("member", &PyPresentation::member, py::arg("expr"))
        .def("check_gs", &PyPresentation::check_gs)
        .def("complete", &PyPresentation::complete)
        .def("basis", &PyPresentation::basis, py::arg("var_order") = 3,
             py::arg("verify") = false);
}

#include <algorithm>
#include <functional>
#include <set>

#include "diffgsb/basis.hpp"
#include "diffgsb/expressions.hpp"
#include "doctest.h"

using namespace diffgsb;

namespace {

RuleSet lifted(const ContextPtr& ctx, OrderKind order, std::vector<std::string> rels, int n) {
    std::vector<DiffPoly> ps;
    for (const auto& r : rels) ps.push_back(parse_poly(r, ctx));
    Presentation pres(ctx, std::move(ps));
    LiftResult lift = lift_presentation(pres, order, n, GsbOptions{n, 6});
    REQUIRE(lift.ok);
    return std::move(*lift.rules);
}

std::set<std::string> word_strings(const std::vector<Word>& ws, const GenTable& t) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(print_word(w, t));
    return out;
}

}  // namespace

TEST_CASE("dual numbers at weight 0 fail exactly at orders (2,1) under deg-lex") {
    auto ctx = make_context({"x"}, true, Rational(0));
    RuleSet rs = lifted(ctx, OrderKind::DegLexC, {"x*x"}, 2);
    GsbVerdict v = check_gsb(rs, GsbOptions{2, 6});
    CHECK(!v.all_trivial);
    CHECK(!v.budget_exhausted);
    REQUIRE(v.failures.size() == 1);
    const auto& f = v.failures[0];
    CHECK(f.i == 2);
    CHECK(f.j == 1);
    CHECK(f.composition == parse_poly("x^(1)*x^(1)*x^(1)", ctx));
    CHECK(print_word(f.w, ctx->table) == "x^(2)*x^(1)*x^(0)");
    CHECK(f.normal_form == parse_poly("x^(1)*x^(1)*x^(1)", ctx));
}

TEST_CASE("dual numbers pass under commutative lex") {
    auto ctx = make_context({"x"}, true, Rational(0));
    RuleSet rs = lifted(ctx, OrderKind::LexC, {"x*x"}, 4);
    GsbVerdict v = check_gsb(rs, GsbOptions{4, 6});
    CHECK(v.all_trivial);
    CHECK(!v.budget_exhausted);
}

TEST_CASE("lex irreducible words are the adjacent-exponent-bounded monomials") {
    auto ctx = make_context({"x"}, true, Rational(0));
    RuleSet rs = lifted(ctx, OrderKind::LexC, {"x*x"}, 4);
    auto words = diff_irr(rs, 4, 4);
    // independent enumeration: exponent sequences with a_r + a_{r+1} < 2,
    // i.e. no letter repeated and no two letters of adjacent orders
    std::set<std::string> expected;
    std::vector<int> exps(5, 0);
    std::function<void(int, int)> walk = [&](int from, int deg) {
        {
            std::vector<DiffVar> ls;
            for (int o = 0; o <= 4; ++o)
                for (int k = 0; k < exps[static_cast<size_t>(o)]; ++k)
                    ls.push_back(DiffVar{0, o});
            expected.insert(print_word(Word(std::move(ls), true), ctx->table));
        }
        if (deg == 4) return;
        for (int o = from; o <= 4; ++o) {
            exps[static_cast<size_t>(o)] = 1;
            walk(o + 2, deg + 1);
            exps[static_cast<size_t>(o)] = 0;
        }
    };
    walk(0, 0);
    CHECK(word_strings(words, ctx->table) == expected);
}

TEST_CASE("cyclic relation x^n - 1 at weight 0: failure, completion, basis") {
    for (int n : {2, 3, 4}) {
        auto ctx = make_context({"x"}, true, Rational(0));
        std::string xn = "x";
        for (int k = 1; k < n; ++k) xn += "*x";
        RuleSet rs = lifted(ctx, OrderKind::DegLexC, {xn + " - 1"}, 3);
        GsbVerdict v = check_gsb(rs, GsbOptions{3, 6});
        CHECK(!v.all_trivial);
        bool found = false;
        for (const auto& f : v.failures)
            if (f.i == 1 && f.j == 0) {
                found = true;
                CHECK(f.composition == parse_poly("x^(1)", ctx));
                std::string w = "x^(1)";
                for (int k = 0; k < n; ++k) w += "*x^(0)";
                CHECK(print_word(f.w, ctx->table) == w);
            }
        CHECK(found);

        CompletionResult c = complete(rs, GsbOptions{3, 6}, 8);
        CHECK(c.completed);
        CHECK(c.rounds_used == 1);
        REQUIRE(c.adjoined.size() == 1);
        REQUIRE(c.adjoined[0].size() == 1);
        CHECK(c.adjoined[0][0] == parse_poly("x^(1)", ctx));

        RuleSet done(ctx, OrderKind::DegLexC, c.basis, 3);
        CHECK(check_gsb(done, GsbOptions{3, 6}).all_trivial);
        for (auto [d, m] : {std::pair{6, 3}, std::pair{4, 2}}) {
            auto words = diff_irr(done, d, m);
            std::set<std::string> expected;
            std::string s = "1";
            expected.insert(s);
            std::string acc;
            for (int k = 1; k < n && k <= d; ++k) {
                acc += (k == 1 ? "x^(0)" : "*x^(0)");
                expected.insert(acc);
            }
            CHECK(word_strings(words, ctx->table) == expected);
        }
    }
}

TEST_CASE("lifted bases stay bases in the evidence regimes") {
    struct Case {
        std::vector<std::string> gens;
        bool comm;
        const char* weight;
        std::vector<std::string> rels;
    };
    std::vector<Case> cases;
    for (const char* w : {"0", "1", "-2"}) {
        cases.push_back({{"x", "y"}, false, w, {"y*x - x*y - 1"}});
        cases.push_back({{"x", "y"}, false, w, {"x + y + 1"}});
        cases.push_back({{"x"}, false, w, {"x*x"}});
        cases.push_back({{"x"}, false, w, {"x*x*x - 1"}});
    }
    for (const char* w : {"1", "-2"}) {
        cases.push_back({{"x", "y"}, true, w, {"x + y + 1"}});
        cases.push_back({{"x"}, true, w, {"x*x"}});
        cases.push_back({{"x"}, true, w, {"x*x*x - 1"}});
    }
    cases.push_back({{"x", "y"}, true, "0", {"x + y + 1"}});
    for (const auto& cs : cases) {
        auto ctx = make_context(cs.gens, cs.comm, Rational::parse(cs.weight));
        OrderKind order = cs.comm ? OrderKind::DegLexC : OrderKind::DegLexNC;
        RuleSet rs = lifted(ctx, order, cs.rels, 3);
        GsbVerdict v = check_gsb(rs, GsbOptions{3, 6});
        CHECK(v.all_trivial);
    }
}

TEST_CASE("noncommutative compositions carry certificates below the ambiguity") {
    // x^(i)x^(0) overlaps x^(0)x^(0) on the shared letter, so the lifted
    // system has one intersection ambiguity per derivative order
    auto ctx = make_context({"x"}, false, Rational(0));
    RuleSet rs = lifted(ctx, OrderKind::DegLexNC, {"x*x - 1"}, 3);
    auto reps = compositions(rs, GsbOptions{3, 6});
    CHECK(!reps.empty());
    int certified = 0;
    for (const auto& rep : reps) {
        CHECK(rep.trivial);
        if (!rep.certificate.steps.empty()) ++certified;
        for (const auto& step : rep.certificate.steps) {
            auto rule = rs.rule(step.at.rule_index, step.at.deriv_order);
            REQUIRE(rule);
            Word instance = subst_word(step.at.at, rule->lead);
            CHECK((cmp_word(instance, rep.w, OrderKind::DegLexNC) < 0));
        }
    }
    CHECK(certified > 0);
}

TEST_CASE("quotient dimension oracle on the linear relation") {
    auto ctx = make_context({"x", "y"}, true, Rational(0));
    RuleSet rs = lifted(ctx, OrderKind::DegLexC, {"x + y + 1"}, 3);
    auto est = quotient_dim_oracle(rs, 1, 1);
    auto words = diff_irr(rs, 1, 1);
    // degree <= 1 words over x^(0..1), y^(0..1) minus leads y^(0), y^(1): 1+x^(0)+x^(1)
    CHECK(words.size() == 3);
    CHECK(est.exact);
    CHECK(est.lower == 3);
    CHECK(est.upper == 3);
}

TEST_CASE("quotient dimension oracle brackets the lex count") {
    auto ctx = make_context({"x"}, true, Rational(0));
    RuleSet rs = lifted(ctx, OrderKind::LexC, {"x*x"}, 4);
    auto words = diff_irr(rs, 2, 2);
    auto est = quotient_dim_oracle(rs, 2, 2);
    long n = static_cast<long>(words.size());
    CHECK(n == 5);  // 1, x0, x1, x2, x2x0
    CHECK(est.lower <= n);
    CHECK(est.upper >= n);
}

TEST_CASE("bounded membership") {
    auto ctx = make_context({"x"}, true, Rational(0));
    std::vector<DiffPoly> rel{parse_poly("x*x - 1", ctx)};
    Presentation pres(ctx, rel);
    auto lift = lift_presentation(pres, OrderKind::DegLexC, 3, GsbOptions{3, 6});
    REQUIRE(lift.ok);
    auto& rs = *lift.rules;
    CHECK(member_bounded(parse_poly("x^(1)*x^(0)", ctx), rs).verdict == MemberVerdict::Member);
    CHECK(member_bounded(parse_poly("d^2(x*x - 1)", ctx), rs).verdict == MemberVerdict::Member);
    CHECK(member_bounded(parse_poly("x^(1)", ctx), rs).verdict ==
          MemberVerdict::NotMemberWithinBounds);
}

TEST_CASE("classical precheck failures are reported before lifting") {
    auto ctx = make_context({"x"}, true, Rational(0));
    Presentation pres(ctx, {parse_poly("x*x - 1", ctx), parse_poly("x*x*x - 1", ctx)});
    auto lift = lift_presentation(pres, OrderKind::DegLexC, 3, GsbOptions{3, 6});
    CHECK(!lift.ok);
    CHECK(!lift.classical.all_trivial);
    CHECK(!lift.classical.failures.empty());
    CHECK(!lift.rules.has_value());
}

TEST_CASE("completion does not loop on an already complete basis") {
    auto ctx = make_context({"x", "y"}, false, Rational(1));
    RuleSet rs = lifted(ctx, OrderKind::DegLexNC, {"y*x - x*y - 1"}, 3);
    CompletionResult c = complete(rs, GsbOptions{3, 6}, 8);
    CHECK(c.completed);
    CHECK((c.rounds_used == 0));
    CHECK(c.adjoined.empty());
    CHECK(c.basis.size() == 1);
}

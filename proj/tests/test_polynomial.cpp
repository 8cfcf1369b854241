#include <random>

#include "diffgsb/expressions.hpp"
#include "diffgsb/polynomial.hpp"
#include "doctest.h"

using namespace diffgsb;

namespace {

ContextPtr ctx2(bool comm, const Rational& w) { return make_context({"x", "y"}, comm, w); }

DiffPoly random_poly(std::mt19937& rng, const ContextPtr& ctx, int max_terms, int max_len,
                     int max_ord) {
    std::uniform_int_distribution<int> nterms(1, max_terms), len(0, max_len);
    std::uniform_int_distribution<int> g(0, static_cast<int>(ctx->table.size()) - 1);
    std::uniform_int_distribution<int> o(0, max_ord), c(-4, 4);
    DiffPoly f = DiffPoly::zero(ctx);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<DiffVar> ls;
        int l = len(rng);
        for (int k = 0; k < l; ++k) ls.push_back(DiffVar{g(rng), o(rng)});
        f += DiffPoly::from_word(ctx, Word(std::move(ls), ctx->commutative), Rational(c(rng)));
    }
    return f;
}

Word random_word(std::mt19937& rng, const ContextPtr& ctx, int min_len, int max_len, int max_ord) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::uniform_int_distribution<int> g(0, static_cast<int>(ctx->table.size()) - 1);
    std::uniform_int_distribution<int> o(0, max_ord);
    std::vector<DiffVar> ls;
    int l = len(rng);
    for (int k = 0; k < l; ++k) ls.push_back(DiffVar{g(rng), o(rng)});
    return Word(std::move(ls), ctx->commutative);
}

}  // namespace

TEST_CASE("derivative of the unit and of constants vanishes") {
    auto ctx = ctx2(false, Rational(1));
    CHECK(derive(DiffPoly::constant(ctx, Rational(7))).is_zero());
    CHECK(derive(DiffPoly::zero(ctx)).is_zero());
}

TEST_CASE("weight-1 product rule on x*y") {
    auto ctx = ctx2(false, Rational(1));
    DiffPoly f = parse_poly("d^1(x*y)", ctx);
    CHECK(f == parse_poly("x^(1)*y^(0) + x^(0)*y^(1) + x^(1)*y^(1)", ctx));
}

TEST_CASE("classical second derivative of x^2") {
    auto ctx = make_context({"x"}, true, Rational(0));
    CHECK(parse_poly("d^2(x*x)", ctx) ==
          parse_poly("2*x^(2)*x^(0) + 2*x^(1)*x^(1)", ctx));
}

TEST_CASE("Leibniz rule holds for random pairs, all weights, both variants") {
    std::mt19937 rng(2024);
    for (bool comm : {false, true})
        for (const char* ws : {"0", "1", "-2", "3/2"}) {
            auto ctx = ctx2(comm, Rational::parse(ws));
            for (int t = 0; t < 60; ++t) {
                DiffPoly f = random_poly(rng, ctx, 3, 3, 2);
                DiffPoly g = random_poly(rng, ctx, 3, 3, 2);
                DiffPoly lhs = derive(f * g);
                DiffPoly rhs = derive(f) * g + f * derive(g) +
                               DiffPoly::constant(ctx, ctx->weight) * derive(f) * derive(g);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("iterated derivative matches derive_n") {
    std::mt19937 rng(31337);
    auto ctx = ctx2(true, Rational(1));
    for (int t = 0; t < 40; ++t) {
        DiffPoly f = random_poly(rng, ctx, 3, 3, 2);
        DiffPoly it = f;
        for (int n = 0; n <= 4; ++n) {
            CHECK(derive_n(f, n) == it);
            it = derive(it);
        }
    }
    CHECK_THROWS(derive_n(DiffPoly::zero(ctx), -1));
}

TEST_CASE("two-factor closed form") {
    std::mt19937 rng(88);
    for (bool comm : {false, true})
        for (const char* ws : {"0", "1", "-2", "3/2"}) {
            auto ctx = ctx2(comm, Rational::parse(ws));
            for (int t = 0; t < 12; ++t) {
                DiffPoly x = DiffPoly::from_word(ctx, random_word(rng, ctx, 1, 2, 1));
                DiffPoly y = DiffPoly::from_word(ctx, random_word(rng, ctx, 1, 2, 1));
                for (int n = 0; n <= 6; ++n)
                    CHECK(leibniz_pair(x, y, n) == derive_n(x * y, n));
            }
        }
}

TEST_CASE("multi-factor closed form") {
    std::mt19937 rng(17);
    for (bool comm : {false, true})
        for (const char* ws : {"0", "1", "-2"}) {
            auto ctx = ctx2(comm, Rational::parse(ws));
            for (int t = 0; t < 8; ++t) {
                std::uniform_int_distribution<int> nf(1, 4);
                std::vector<DiffPoly> factors;
                int r = nf(rng);
                for (int k = 0; k < r; ++k)
                    factors.push_back(DiffPoly::from_word(ctx, random_word(rng, ctx, 1, 1, 1)));
                DiffPoly prod = DiffPoly::constant(ctx, Rational(1));
                for (const auto& fa : factors) prod = prod * fa;
                for (int n = 0; n <= 4; ++n)
                    CHECK(leibniz_multi(factors, n) == derive_n(prod, n));
            }
        }
}

TEST_CASE("derivation preserves monomial degrees") {
    std::mt19937 rng(404);
    for (bool comm : {false, true}) {
        auto ctx = ctx2(comm, Rational(1));
        for (int t = 0; t < 50; ++t) {
            Word u = random_word(rng, ctx, 1, 4, 2);
            DiffPoly df = derive(DiffPoly::from_word(ctx, u));
            for (const auto& [w, c] : df.terms()) CHECK(w.degree() == u.degree());
        }
    }
}

TEST_CASE("leading term of derivatives without expansion") {
    std::mt19937 rng(909);
    struct Regime {
        bool comm;
        const char* weight;
        OrderKind order;
    };
    const Regime regimes[] = {
        {false, "0", OrderKind::DegLexNC},  {false, "1", OrderKind::DegLexNC},
        {false, "-2", OrderKind::DegLexNC}, {true, "0", OrderKind::DegLexC},
        {true, "1", OrderKind::DegLexC},    {true, "3/2", OrderKind::DegLexC},
    };
    for (const auto& reg : regimes) {
        auto ctx = ctx2(reg.comm, Rational::parse(reg.weight));
        for (int t = 0; t < 50; ++t) {
            Word u = random_word(rng, ctx, 1, 3, 2);
            for (int i = 0; i <= 3; ++i) {
                auto predicted = leading_of_derivative(u, i, *ctx, reg.order);
                DiffPoly d = derive_n(DiffPoly::from_word(ctx, u), i);
                REQUIRE(!d.is_zero());
                auto actual = d.leading(reg.order);
                CHECK((predicted.word.structural_cmp(actual.word) == 0));
                CHECK(predicted.coeff == actual.coeff);
            }
        }
    }
}

TEST_CASE("order-0 words embed with every letter raised") {
    auto ctx = make_context({"x"}, true, Rational(1));
    DiffPoly f = parse_poly("x*x + x", ctx);
    CHECK(hat_embed(f, 2) == parse_poly("x^(2)*x^(2) + x^(2)", ctx));
    CHECK_THROWS(hat_embed(parse_poly("x^(1)", ctx), 1));
}

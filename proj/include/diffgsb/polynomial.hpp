#ifndef DIFFGSB_POLYNOMIAL_HPP
#define DIFFGSB_POLYNOMIAL_HPP

#include <map>
#include <memory>

#include "diffgsb/rational.hpp"
#include "diffgsb/words.hpp"

namespace diffgsb {

// Shared immutable ambient data: generator table, variant, weight.
struct Context {
    GenTable table;
    bool commutative;
    Rational weight;

    Context(GenTable t, bool comm, Rational w)
        : table(std::move(t)), commutative(comm), weight(std::move(w)) {}

    friend bool operator==(const Context& a, const Context& b) {
        return a.table == b.table && a.commutative == b.commutative && a.weight == b.weight;
    }
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> gens, bool commutative, Rational weight);

struct LeadingTerm {
    Word word;
    Rational coeff;
};

class DiffPoly {
public:
    using TermMap = std::map<Word, Rational, WordStructuralLess>;

    explicit DiffPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    static DiffPoly zero(ContextPtr ctx) { return DiffPoly(std::move(ctx)); }
    static DiffPoly constant(ContextPtr ctx, Rational c);
    static DiffPoly from_word(ContextPtr ctx, Word w, Rational c = Rational(1));
    static DiffPoly from_var(ContextPtr ctx, DiffVar v, Rational c = Rational(1));
    // generator by name at derivative order k
    static DiffPoly var(ContextPtr ctx, const std::string& name, int order = 0);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int n_terms() const { return static_cast<int>(terms_.size()); }
    int max_degree() const;
    int max_order() const;

    Rational coeff(const Word& w) const;
    void add_term(const Word& w, const Rational& c);

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    DiffPoly operator-() const;
    DiffPoly scaled(const Rational& c) const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);

    friend bool operator==(const DiffPoly& a, const DiffPoly& b);

    LeadingTerm leading(OrderKind order) const;  // throws on zero
    DiffPoly monic(OrderKind order) const;       // f / lc(f)

private:
    ContextPtr ctx_;
    TermMap terms_;
};

void require_same_context(const DiffPoly& a, const DiffPoly& b);

// weight-lambda derivation: d(uv) = d(u)v + u d(v) + lambda d(u) d(v),
// d(x^(n)) = x^(n+1), d(1) = 0, extended linearly
DiffPoly derive(const DiffPoly& f);
DiffPoly derive_n(const DiffPoly& f, int n);

// closed two-factor formula for d^n(xy)
DiffPoly leibniz_pair(const DiffPoly& x, const DiffPoly& y, int n);
// closed multi-factor formula for d^n(x1 ... xr), r = xs.size() >= 1
DiffPoly leibniz_multi(const std::vector<DiffPoly>& xs, int n);

// closed form for the leading term of d^i(u) for a nonunit word u
LeadingTerm leading_of_derivative(const Word& u, int i, const Context& ctx, OrderKind order);

// raise every letter of an order-0 polynomial to order n
DiffPoly hat_embed(const DiffPoly& f, int n);

}  // namespace diffgsb

#endif

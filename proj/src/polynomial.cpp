#include "diffgsb/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace diffgsb {

ContextPtr make_context(std::vector<std::string> gens, bool commutative, Rational weight) {
    return std::make_shared<const Context>(GenTable(std::move(gens)), commutative,
                                           std::move(weight));
}

DiffPoly DiffPoly::constant(ContextPtr ctx, Rational c) {
    DiffPoly p(std::move(ctx));
    p.add_term(Word::unit(p.ctx_->commutative), c);
    return p;
}

DiffPoly DiffPoly::from_word(ContextPtr ctx, Word w, Rational c) {
    DiffPoly p(std::move(ctx));
    if (w.commutative() != p.ctx_->commutative)
        throw std::invalid_argument("polynomial: word variant does not match context");
    p.add_term(std::move(w), std::move(c));
    return p;
}

DiffPoly DiffPoly::from_var(ContextPtr ctx, DiffVar v, Rational c) {
    bool comm = ctx->commutative;
    if (v.gen < 0 || v.gen >= ctx->table.size())
        throw std::invalid_argument("polynomial: unknown generator index");
    return from_word(std::move(ctx), Word({v}, comm), std::move(c));
}

DiffPoly DiffPoly::var(ContextPtr ctx, const std::string& name, int order) {
    int g = ctx->table.find(name);
    if (g < 0) throw std::invalid_argument("polynomial: unknown generator '" + name + "'");
    return from_var(std::move(ctx), DiffVar{g, order});
}

int DiffPoly::max_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
}

int DiffPoly::max_order() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.max_order());
    return m;
}

Rational DiffPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void require_same_context(const DiffPoly& a, const DiffPoly& b) {
    if (a.context() == b.context()) return;
    if (a.context() && b.context() && *a.context() == *b.context()) return;
    throw std::invalid_argument("polynomial: context mismatch");
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    require_same_context(a, b);
    DiffPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    require_same_context(a, b);
    DiffPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    require_same_context(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    require_same_context(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    require_same_context(a, b);
    DiffPoly r(a.ctx_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r(ctx_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
    DiffPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
    require_same_context(a, b);
    return a.terms_ == b.terms_;
}

LeadingTerm DiffPoly::leading(OrderKind order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (cmp_word(it->first, best->first, order) == std::strong_ordering::greater) best = it;
    return {best->first, best->second};
}

DiffPoly DiffPoly::monic(OrderKind order) const {
    return scaled(leading(order).coeff.inv());
}

namespace {

// d of a single word via the recursion on the first letter
DiffPoly derive_word(const ContextPtr& ctx, const Word& w) {
    const bool comm = ctx->commutative;
    DiffPoly r(ctx);
    const auto& ls = w.letters();
    if (ls.empty()) return r;
    // run from the back: D holds d(suffix), suffix the word itself
    DiffPoly D(ctx);
    D.add_term(Word({DiffVar{ls.back().gen, ls.back().order + 1}}, comm), Rational(1));
    for (size_t i = ls.size() - 1; i-- > 0;) {
        Word head({ls[i]}, comm);
        Word dhead({DiffVar{ls[i].gen, ls[i].order + 1}}, comm);
        Word rest(std::vector<DiffVar>(ls.begin() + i + 1, ls.end()), comm);
        DiffPoly next(ctx);
        next.add_term(dhead * rest, Rational(1));
        for (const auto& [u, c] : D.terms()) {
            next.add_term(head * u, c);
            next.add_term(dhead * u, c * ctx->weight);
        }
        D = std::move(next);
    }
    return D;
}

}  // namespace

DiffPoly derive(const DiffPoly& f) {
    DiffPoly r(f.context());
    for (const auto& [w, c] : f.terms()) {
        if (w.is_unit()) continue;
        r += derive_word(f.context(), w).scaled(c);
    }
    return r;
}

DiffPoly derive_n(const DiffPoly& f, int n) {
    if (n < 0) throw std::invalid_argument("derive_n: negative order");
    DiffPoly r = f;
    for (int i = 0; i < n; ++i) r = derive(r);
    return r;
}

DiffPoly leibniz_pair(const DiffPoly& x, const DiffPoly& y, int n) {
    require_same_context(x, y);
    if (n < 0) throw std::invalid_argument("leibniz_pair: negative order");
    const Rational& lam = x.context()->weight;
    DiffPoly r(x.context());
    std::vector<DiffPoly> dx{x}, dy{y};
    for (int i = 1; i <= n; ++i) {
        dx.push_back(derive(dx.back()));
        dy.push_back(derive(dy.back()));
    }
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n - j; ++k) {
            Rational c = binomial(n, j) * binomial(n - j, k) * lam.pow(j);
            r += (dx[n - k] * dy[j + k]).scaled(c);
        }
    return r;
}

DiffPoly leibniz_multi(const std::vector<DiffPoly>& xs, int n) {
    if (xs.empty()) throw std::invalid_argument("leibniz_multi: no factors");
    if (n < 0) throw std::invalid_argument("leibniz_multi: negative order");
    const ContextPtr& ctx = xs.front().context();
    for (const auto& x : xs) require_same_context(xs.front(), x);
    if (xs.size() == 1) return derive_n(xs.front(), n);
    const Rational& lam = ctx->weight;
    const size_t r = xs.size() - 1;  // number of (j,k,l) levels

    std::vector<std::vector<DiffPoly>> dxs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        dxs[i].push_back(xs[i]);
        for (int m = 1; m <= n; ++m) dxs[i].push_back(derive(dxs[i].back()));
    }

    DiffPoly out(ctx);
    // chained index walk: level t consumes m_t = j_t + k_t + l_t where
    // m_1 = n and m_{t+1} = j_t + k_t; coefficient is a product of
    // multinomials, weight power lambda^(sum j_t)
    std::function<void(size_t, long, Rational, long, DiffPoly)> walk =
        [&](size_t t, long m, Rational coeff, long lam_exp, DiffPoly prod) {
            if (t == r) {
                // last level consumed; remaining factor gets order m = j_r + k_r
                DiffPoly term = prod * dxs[r][static_cast<size_t>(m)];
                out += term.scaled(coeff * lam.pow(lam_exp));
                return;
            }
            for (long j = 0; j <= m; ++j)
                for (long k = 0; k + j <= m; ++k) {
                    long l = m - j - k;
                    Rational c = coeff * multinomial3(m, j, k, l);
                    // factor x_{t+1} (0-based t) carries order m - k
                    DiffPoly p2 = prod * dxs[t][static_cast<size_t>(m - k)];
                    walk(t + 1, j + k, c, lam_exp + j, std::move(p2));
                }
        };
    walk(0, n, Rational(1), 0, DiffPoly::constant(ctx, Rational(1)));
    return out;
}

LeadingTerm leading_of_derivative(const Word& u, int i, const Context& ctx, OrderKind order) {
    if (u.is_unit()) throw std::invalid_argument("leading_of_derivative: unit word");
    if (i < 0) throw std::invalid_argument("leading_of_derivative: negative order");
    if (!order_is_deglex(order))
        throw std::invalid_argument("leading_of_derivative: closed form requires deg-lex");
    if (u.commutative() != ctx.commutative)
        throw std::invalid_argument("leading_of_derivative: variant mismatch");
    const auto& ls = u.letters();
    if (i == 0) return {u, Rational(1)};
    std::vector<DiffVar> out = ls;
    if (!ctx.weight.is_zero()) {
        for (auto& l : out) l.order += i;
        long e = static_cast<long>(ls.size() - 1) * i;
        return {Word(std::move(out), u.commutative()), ctx.weight.pow(e)};
    }
    // weight 0: raise the first letter only
    out[0].order += i;
    Rational c(1);
    if (ctx.commutative) {
        long mult = 0;
        for (const auto& l : ls)
            if (l == ls[0]) ++mult;
        c = Rational(mult);
    }
    return {Word(std::move(out), u.commutative()), c};
}

DiffPoly hat_embed(const DiffPoly& f, int n) {
    if (n < 0) throw std::invalid_argument("hat_embed: negative order");
    if (f.max_order() != 0 && !f.is_zero())
        throw std::invalid_argument("hat_embed: input must have order-0 variables only");
    DiffPoly r(f.context());
    for (const auto& [w, c] : f.terms()) {
        std::vector<DiffVar> ls = w.letters();
        for (auto& l : ls) l.order = n;
        r.add_term(Word(std::move(ls), w.commutative()), c);
    }
    return r;
}

}  // namespace diffgsb

#include "diffgsb/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffgsb {

std::strong_ordering cmp_var(const DiffVar& a, const DiffVar& b) {
    if (a.order != b.order) return a.order <=> b.order;
    return a.gen <=> b.gen;
}

GenTable::GenTable(std::vector<std::string> ns) : names(std::move(ns)) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw std::invalid_argument("generator table: empty name");
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("generator table: duplicate name '" + names[i] + "'");
    }
}

int GenTable::find(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

Word::Word(std::vector<DiffVar> letters, bool commutative)
    : letters_(std::move(letters)), commutative_(commutative) {
    for (const auto& l : letters_)
        if (l.order < 0 || l.gen < 0)
            throw std::invalid_argument("word: negative order or generator index");
    if (commutative_)
        std::sort(letters_.begin(), letters_.end(), [](const DiffVar& a, const DiffVar& b) {
            return cmp_var(a, b) == std::strong_ordering::greater;
        });
}

int Word::max_order() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.order);
    return m;
}

long Word::total_order() const {
    long t = 0;
    for (const auto& l : letters_) t += l.order;
    return t;
}

Word operator*(const Word& a, const Word& b) {
    if (a.commutative_ != b.commutative_)
        throw std::invalid_argument("word: variant mismatch in product");
    std::vector<DiffVar> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(ls), a.commutative_);
}

std::strong_ordering Word::structural_cmp(const Word& o) const {
    if (letters_.size() != o.letters_.size())
        return letters_.size() <=> o.letters_.size();
    for (size_t i = 0; i < letters_.size(); ++i) {
        auto c = cmp_var(letters_[i], o.letters_[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

bool order_is_deglex(OrderKind k) { return k != OrderKind::LexC; }

std::strong_ordering cmp_word(const Word& u, const Word& v, OrderKind kind) {
    bool need_comm = kind != OrderKind::DegLexNC;
    if (u.commutative() != need_comm || v.commutative() != need_comm)
        throw std::invalid_argument("cmp_word: order kind does not match word variant");
    const auto& a = u.letters();
    const auto& b = v.letters();
    switch (kind) {
        case OrderKind::DegLexNC:
        case OrderKind::DegLexC: {
            if (a.size() != b.size()) return a.size() <=> b.size();
            for (size_t i = 0; i < a.size(); ++i) {
                auto c = cmp_var(a[i], b[i]);
                if (c != std::strong_ordering::equal) return c;
            }
            return std::strong_ordering::equal;
        }
        case OrderKind::LexC: {
            // compare ascending presentations; the stored form is descending
            size_t n = std::min(a.size(), b.size());
            for (size_t i = 0; i < n; ++i) {
                auto c = cmp_var(a[a.size() - 1 - i], b[b.size() - 1 - i]);
                if (c != std::strong_ordering::equal) return c;
            }
            return a.size() <=> b.size();
        }
    }
    throw std::logic_error("cmp_word: unknown order kind");
}

std::vector<NCFactorization> divides_nc(const Word& pat, const Word& u) {
    if (pat.commutative() || u.commutative())
        throw std::invalid_argument("divides_nc: commutative input");
    std::vector<NCFactorization> out;
    const auto& p = pat.letters();
    const auto& w = u.letters();
    if (p.size() > w.size()) return out;
    for (size_t pos = 0; pos + p.size() <= w.size(); ++pos) {
        bool hit = true;
        for (size_t i = 0; i < p.size(); ++i)
            if (!(w[pos + i] == p[i])) { hit = false; break; }
        if (!hit) continue;
        out.push_back({Word(std::vector<DiffVar>(w.begin(), w.begin() + pos), false),
                       Word(std::vector<DiffVar>(w.begin() + pos + p.size(), w.end()), false)});
    }
    return out;
}

std::optional<Word> divides_c(const Word& pat, const Word& u) {
    if (!pat.commutative() || !u.commutative())
        throw std::invalid_argument("divides_c: noncommutative input");
    // both descending: single merge pass
    std::vector<DiffVar> rest;
    const auto& p = pat.letters();
    const auto& w = u.letters();
    size_t i = 0;
    for (size_t j = 0; j < w.size(); ++j) {
        if (i < p.size() && w[j] == p[i]) {
            ++i;
        } else {
            rest.push_back(w[j]);
        }
    }
    if (i != p.size()) return std::nullopt;
    return Word(std::move(rest), true);
}

std::vector<Overlap> overlaps_nc(const Word& p, const Word& q) {
    if (p.commutative() || q.commutative())
        throw std::invalid_argument("overlaps_nc: commutative input");
    if (p.is_unit() || q.is_unit())
        throw std::invalid_argument("overlaps_nc: unit word");
    std::vector<Overlap> out;
    const auto& a = p.letters();
    const auto& b = q.letters();
    size_t lmax = std::min(a.size(), b.size()) - 1;
    for (size_t l = 1; l <= lmax; ++l) {
        bool hit = true;
        for (size_t i = 0; i < l; ++i)
            if (!(a[a.size() - l + i] == b[i])) { hit = false; break; }
        if (!hit) continue;
        Word u(std::vector<DiffVar>(b.begin() + l, b.end()), false);
        Word v(std::vector<DiffVar>(a.begin(), a.end() - l), false);
        out.push_back({p * u, u, v});
    }
    return out;
}

Word lcm_c(const Word& a, const Word& b) {
    if (!a.commutative() || !b.commutative())
        throw std::invalid_argument("lcm_c: noncommutative input");
    std::vector<DiffVar> out;
    const auto& x = a.letters();
    const auto& y = b.letters();
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (i == x.size()) { out.push_back(y[j++]); continue; }
        if (j == y.size()) { out.push_back(x[i++]); continue; }
        auto c = cmp_var(x[i], y[j]);
        if (c == std::strong_ordering::greater) out.push_back(x[i++]);
        else if (c == std::strong_ordering::less) out.push_back(y[j++]);
        else { out.push_back(x[i]); ++i; ++j; }
    }
    return Word(std::move(out), true);
}

bool shares_support_c(const Word& a, const Word& b) {
    for (const auto& la : a.letters())
        for (const auto& lb : b.letters())
            if (la == lb) return true;
    return false;
}

}  // namespace diffgsb

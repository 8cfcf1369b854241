#ifndef DIFFGSB_WORDS_HPP
#define DIFFGSB_WORDS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace diffgsb {

// Differential variable x^(order): gen indexes into the generator table,
// position in the table is the rank under the generator well-order.
struct DiffVar {
    int32_t gen = 0;
    int32_t order = 0;

    friend bool operator==(const DiffVar&, const DiffVar&) = default;
};

// x^(m) < y^(n) iff m < n, or m = n and rank(x) < rank(y)
std::strong_ordering cmp_var(const DiffVar& a, const DiffVar& b);

struct GenTable {
    std::vector<std::string> names;

    explicit GenTable(std::vector<std::string> ns);
    int find(const std::string& name) const;  // -1 if absent
    int size() const { return static_cast<int>(names.size()); }

    friend bool operator==(const GenTable&, const GenTable&) = default;
};

// A monomial in the differential variables. Noncommutative words keep letter
// sequence as written; commutative words are kept sorted descending under
// cmp_var, so the stored form is the canonical u1 >= u2 >= ... presentation.
class Word {
public:
    Word() : commutative_(false) {}
    static Word unit(bool commutative) { Word w; w.commutative_ = commutative; return w; }
    Word(std::vector<DiffVar> letters, bool commutative);

    const std::vector<DiffVar>& letters() const { return letters_; }
    bool commutative() const { return commutative_; }
    bool is_unit() const { return letters_.empty(); }
    int degree() const { return static_cast<int>(letters_.size()); }
    int max_order() const;
    long total_order() const;  // sum of letter orders

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

    // structural order for container keys; not a monomial order
    std::strong_ordering structural_cmp(const Word& o) const;

private:
    std::vector<DiffVar> letters_;
    bool commutative_;
};

struct WordStructuralLess {
    bool operator()(const Word& a, const Word& b) const {
        return a.structural_cmp(b) == std::strong_ordering::less;
    }
};

enum class OrderKind {
    DegLexNC,  // degree first (lower degree smaller), then leftmost letter
    DegLexC,   // canonical descending form, degree first, then letterwise
    LexC,      // ascending form compared letterwise, proper prefix smaller
};

bool order_is_deglex(OrderKind k);

// Total monomial order; throws std::invalid_argument on a variant mismatch.
std::strong_ordering cmp_word(const Word& u, const Word& v, OrderKind kind);

// All factorizations u = left * pat * right, leftmost first. Noncommutative.
struct NCFactorization {
    Word left;
    Word right;
};
std::vector<NCFactorization> divides_nc(const Word& pat, const Word& u);

// Multiset inclusion; returns the cofactor u / pat if pat divides u.
std::optional<Word> divides_c(const Word& pat, const Word& u);

// Proper suffix/prefix overlaps: w = p*u = v*q with max(|p|,|q|) < |w| < |p|+|q|.
struct Overlap {
    Word w;
    Word u;  // w = p * u
    Word v;  // w = v * q
};
std::vector<Overlap> overlaps_nc(const Word& p, const Word& q);

// commutative lcm (exponentwise max) and support-overlap test
Word lcm_c(const Word& a, const Word& b);
bool shares_support_c(const Word& a, const Word& b);

}  // namespace diffgsb

#endif

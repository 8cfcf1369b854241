#ifndef DIFFGSB_EXPRESSIONS_HPP
#define DIFFGSB_EXPRESSIONS_HPP

#include <stdexcept>
#include <string>

#include "diffgsb/polynomial.hpp"

namespace diffgsb {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

// Grammar: sums/differences of products of factors; a factor is a rational
// literal (p or p/q), a generator token x or x^(k), a derivative d^n(...)
// applied at parse time, or a parenthesized expression.
DiffPoly parse_poly(const std::string& src, const ContextPtr& ctx);

std::string print_word(const Word& w, const GenTable& table);
// terms descending under `order`
std::string print_poly(const DiffPoly& f, OrderKind order);

}  // namespace diffgsb

#endif

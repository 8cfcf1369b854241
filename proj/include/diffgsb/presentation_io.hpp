#ifndef DIFFGSB_PRESENTATION_IO_HPP
#define DIFFGSB_PRESENTATION_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "diffgsb/basis.hpp"

namespace diffgsb {

class PresentationError : public std::runtime_error {
public:
    PresentationError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format, one header key per line then a relations block:
//
//   # cyclic group algebra
//   generators: x
//   commutative: true
//   weight: 0
//   order: deglex
//   relations:
//     x*x*x - 1
//
// Generators are listed ascending: earlier names are smaller in the
// monomial order. '#' starts a comment. lex requires commutative: true.
struct PresentationDoc {
    Presentation pres;
    OrderKind order;
    std::vector<std::string> relation_sources;
};

PresentationDoc parse_presentation(const std::string& text);
PresentationDoc load_presentation(const std::string& path);

}  // namespace diffgsb

#endif

#include "diffgsb/expressions.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace diffgsb {

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos);
    }
    bool at_name() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected identifier", pos);
        return src.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        std::string digits = src.substr(start, pos - start);
        if (digits.size() > 9) throw ParseError("integer literal too large", start);
        return std::stol(digits);
    }
    std::string raw_number() {
        // digits, optionally /digits, as a string for exact rationals
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        std::string num = src.substr(start, pos - start);
        size_t save = pos;
        skip_ws();
        if (pos < src.size() && src[pos] == '/') {
            ++pos;
            skip_ws();
            size_t dstart = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (pos == dstart) throw ParseError("expected denominator", pos);
            return num + "/" + src.substr(dstart, pos - dstart);
        }
        pos = save;
        return num;
    }
};

struct Parser {
    Lexer lex;
    ContextPtr ctx;

    Parser(const std::string& s, ContextPtr c) : lex(s), ctx(std::move(c)) {}

    DiffPoly run() {
        DiffPoly f = expr();
        if (!lex.eof()) throw ParseError("unexpected trailing input", lex.pos);
        return f;
    }

    DiffPoly expr() {
        bool neg = false;
        while (true) {
            if (lex.accept('-'))
                neg = !neg;
            else if (lex.accept('+'))
                ;
            else
                break;
        }
        DiffPoly f = term();
        if (neg) f = -f;
        while (true) {
            if (lex.accept('+'))
                f += term();
            else if (lex.accept('-'))
                f -= term();
            else
                break;
        }
        return f;
    }

    DiffPoly term() {
        DiffPoly f = factor();
        while (lex.accept('*')) f = f * factor();
        return f;
    }

    DiffPoly factor() {
        if (lex.accept('-')) return -factor();
        if (lex.accept('(')) {
            DiffPoly f = expr();
            lex.expect(')', "closing parenthesis");
            return f;
        }
        if (lex.at_digit()) {
            size_t at = lex.pos;
            std::string lit = lex.raw_number();
            try {
                return DiffPoly::constant(ctx, Rational::parse(lit));
            } catch (const std::exception& e) {
                throw ParseError(e.what(), at);
            }
        }
        if (lex.at_name()) {
            size_t at = lex.pos;
            std::string id = lex.name();
            int gen = ctx->table.find(id);
            if (gen < 0) {
                if (id == "d") return derivative_factor(at);
                throw ParseError("unknown generator '" + id + "'", at);
            }
            long order = 0;
            size_t save = lex.pos;
            if (lex.accept('^')) {
                if (lex.accept('(')) {
                    order = lex.integer();
                    lex.expect(')', "derivative order");
                } else if (id == "d" && lex.at_digit()) {
                    // d^n( ... ) with d also a generator name: the operator form
                    lex.pos = save;
                    return derivative_factor(at);
                } else {
                    throw ParseError("expected '(' after '^'", lex.pos);
                }
            }
            return DiffPoly::from_var(
                ctx, DiffVar{gen, static_cast<int32_t>(order)});
        }
        throw ParseError("expected factor", lex.pos);
    }

    DiffPoly derivative_factor(size_t at) {
        long n = 1;
        if (lex.accept('^')) n = lex.integer();
        if (n < 0 || n > 64) throw ParseError("derivative order out of range", at);
        lex.expect('(', "derivative argument");
        DiffPoly f = expr();
        lex.expect(')', "derivative argument");
        return derive_n(f, static_cast<int>(n));
    }
};

}  // namespace

DiffPoly parse_poly(const std::string& src, const ContextPtr& ctx) {
    Parser p(src, ctx);
    return p.run();
}

std::string print_word(const Word& w, const GenTable& table) {
    if (w.is_unit()) return "1";
    std::string out;
    bool first = true;
    for (const auto& v : w.letters()) {
        if (!first) out += "*";
        first = false;
        out += table.names[static_cast<size_t>(v.gen)];
        out += "^(" + std::to_string(v.order) + ")";
    }
    return out;
}

std::string print_poly(const DiffPoly& f, OrderKind order) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Word, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [order](const auto& a, const auto& b) {
        return cmp_word(a.first, b.first, order) > 0;
    });
    const GenTable& table = f.context()->table;
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (w.is_unit()) {
            out += a.str();
        } else if (a.is_one()) {
            out += print_word(w, table);
        } else {
            out += a.str() + "*" + print_word(w, table);
        }
    }
    return out;
}

}  // namespace diffgsb

#include "diffgsb/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include "diffgsb/expressions.hpp"

namespace diffgsb {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& s) {
    size_t h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

PresentationDoc parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    std::vector<std::string> generators;
    bool commutative = false, have_comm = false;
    Rational weight;
    bool have_weight = false;
    OrderKind order = OrderKind::DegLexNC;
    bool have_order = false;
    std::string order_raw;
    bool in_relations = false;
    std::vector<std::pair<int, std::string>> relation_lines;

    while (std::getline(is, line)) {
        ++lineno;
        std::string body = strip(drop_comment(line));
        if (body.empty()) continue;
        if (in_relations) {
            relation_lines.emplace_back(lineno, body);
            continue;
        }
        size_t colon = body.find(':');
        if (colon == std::string::npos)
            throw PresentationError("expected 'key: value' before the relations block", lineno);
        std::string key = strip(body.substr(0, colon));
        std::string value = strip(body.substr(colon + 1));
        if (key == "generators") {
            generators = split_ws(value);
            if (generators.empty()) throw PresentationError("no generators listed", lineno);
        } else if (key == "commutative") {
            if (value == "true")
                commutative = true;
            else if (value == "false")
                commutative = false;
            else
                throw PresentationError("commutative must be true or false", lineno);
            have_comm = true;
        } else if (key == "weight") {
            try {
                weight = Rational::parse(value);
            } catch (const std::exception& e) {
                throw PresentationError(std::string("bad weight: ") + e.what(), lineno);
            }
            have_weight = true;
        } else if (key == "order") {
            order_raw = value;
            have_order = true;
        } else if (key == "relations") {
            if (!value.empty()) throw PresentationError("relations must start a block", lineno);
            in_relations = true;
        } else {
            throw PresentationError("unknown key '" + key + "'", lineno);
        }
    }

    if (generators.empty()) throw PresentationError("missing 'generators:'", lineno);
    if (!have_comm) throw PresentationError("missing 'commutative:'", lineno);
    if (!have_weight) throw PresentationError("missing 'weight:'", lineno);
    if (!have_order) throw PresentationError("missing 'order:'", lineno);
    if (!in_relations) throw PresentationError("missing 'relations:' block", lineno);

    if (order_raw == "deglex") {
        order = commutative ? OrderKind::DegLexC : OrderKind::DegLexNC;
    } else if (order_raw == "lex") {
        if (!commutative)
            throw PresentationError("order 'lex' requires commutative: true", lineno);
        order = OrderKind::LexC;
    } else {
        throw PresentationError("order must be deglex or lex", lineno);
    }

    ContextPtr ctx;
    try {
        ctx = make_context(generators, commutative, weight);
    } catch (const std::exception& e) {
        throw PresentationError(e.what(), lineno);
    }

    PresentationDoc doc{Presentation(ctx, {}), order, {}};
    std::vector<DiffPoly> rels;
    for (const auto& [ln, src] : relation_lines) {
        try {
            DiffPoly f = parse_poly(src, ctx);
            if (f.is_zero()) throw std::runtime_error("relation is zero");
            if (f.max_order() != 0)
                throw std::runtime_error("relations must not mention derivatives");
            rels.push_back(std::move(f));
        } catch (const std::exception& e) {
            throw PresentationError(e.what(), ln);
        }
        doc.relation_sources.push_back(src);
    }
    doc.pres = Presentation(ctx, std::move(rels));
    return doc;
}

PresentationDoc load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

}  // namespace diffgsb

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "diffgsb/expressions.hpp"
#include "diffgsb/reports.hpp"

using namespace diffgsb;

namespace {

struct CommonArgs {
    std::string file;
    bool json = false;
    Bounds bounds;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_bounds = true) {
    cmd->add_option("--file", a.file, "presentation file")->required();
    cmd->add_flag("--json", a.json, "machine-readable report");
    if (with_bounds) {
        cmd->add_option("--max-order", a.bounds.max_order, "derivative order bound N");
        cmd->add_option("--max-degree", a.bounds.max_degree, "ambiguity degree bound D");
    }
}

void emit(const Json& j, bool json, const std::string& text) {
    if (json)
        std::cout << render(j);
    else
        std::cout << text;
}

// classical precheck then lift; returns nullopt after reporting (exit 2)
std::optional<LiftResult> lifted_or_report(const PresentationDoc& doc, const CommonArgs& a,
                                           int& exit_code) {
    GsbOptions opts{a.bounds.max_order, a.bounds.max_degree};
    LiftResult lift = lift_presentation(doc.pres, doc.order, a.bounds.max_order, opts);
    if (!lift.ok) {
        Json j = report_header("precheck", doc, a.bounds);
        j["classical_gsb"] = false;
        Json arr = Json::array();
        for (const auto& rep : lift.classical.failures)
            arr.push_back(composition_json(rep, doc.order, doc.pres.ctx->table));
        j["failures"] = arr;
        std::string text = "error: relations are not a classical Groebner-Shirshov basis; "
                           "run check-gs for details\n";
        emit(j, a.json, text);
        exit_code = 2;
        return std::nullopt;
    }
    exit_code = 0;
    return lift;
}

int run_derive(const CommonArgs& a, const std::string& expr, int n) {
    PresentationDoc doc = load_presentation(a.file);
    DiffPoly f = parse_poly(expr, doc.pres.ctx);
    DiffPoly result = derive_n(f, n);
    Json j = report_derive(doc, a.bounds, expr, n, result);
    emit(j, a.json, print_poly(result, doc.order) + "\n");
    return 0;
}

int run_reduce(const CommonArgs& a, const std::string& expr) {
    PresentationDoc doc = load_presentation(a.file);
    int code = 0;
    auto lift = lifted_or_report(doc, a, code);
    if (!lift) return code;
    DiffPoly f = parse_poly(expr, doc.pres.ctx);
    ReduceResult r = reduce(f, *lift->rules);
    Json j = report_reduce(doc, a.bounds, expr, f, r);
    std::string text = print_poly(r.normal_form, doc.order) + "\n";
    if (r.budget_exhausted) text += "warning: step budget exhausted\n";
    emit(j, a.json, text);
    return r.budget_exhausted ? 3 : 0;
}

int run_member(const CommonArgs& a, const std::string& expr) {
    PresentationDoc doc = load_presentation(a.file);
    int code = 0;
    auto lift = lifted_or_report(doc, a, code);
    if (!lift) return code;
    DiffPoly f = parse_poly(expr, doc.pres.ctx);
    MemberResult r = member_bounded(f, *lift->rules);
    Json j = report_member(doc, a.bounds, expr, r);
    std::string text;
    switch (r.verdict) {
        case MemberVerdict::Member: text = "member\n"; break;
        case MemberVerdict::NotMemberWithinBounds:
            text = "not a member within bounds; normal form: " +
                   print_poly(r.normal_form, doc.order) + "\n";
            break;
        case MemberVerdict::BudgetExhausted: text = "undecided: step budget exhausted\n"; break;
    }
    emit(j, a.json, text);
    if (r.verdict == MemberVerdict::Member) return 0;
    return r.verdict == MemberVerdict::BudgetExhausted ? 3 : 1;
}

int run_compose(const CommonArgs& a, int lhs, int rhs, int i, int j_ord) {
    PresentationDoc doc = load_presentation(a.file);
    CommonArgs aa = a;
    aa.bounds.max_order = std::max({a.bounds.max_order, i, j_ord});
    int code = 0;
    auto lift = lifted_or_report(doc, aa, code);
    if (!lift) return code;
    const int nrel = static_cast<int>(doc.pres.relations.size());
    if (lhs < 0 || lhs >= nrel || rhs < 0 || rhs >= nrel)
        throw std::runtime_error("relation index out of range");
    GsbOptions opts{aa.bounds.max_order, aa.bounds.max_degree};
    std::vector<CompositionReport> matches;
    for (auto& rep : compositions(*lift->rules, opts)) {
        bool same = rep.lhs == lhs && rep.rhs == rhs && rep.i == i && rep.j == j_ord;
        // commutative self-pairs are stored with i > j
        bool mirrored = doc.pres.ctx->commutative && rep.lhs == rhs && rep.rhs == lhs &&
                        rep.i == j_ord && rep.j == i;
        if (same || mirrored) matches.push_back(std::move(rep));
    }
    Json j = report_compose(doc, aa.bounds, matches);
    std::string text;
    if (matches.empty()) {
        text = "no composition for these indices within bounds\n";
    } else {
        for (const auto& rep : matches) {
            text += "w = " + print_word(rep.w, doc.pres.ctx->table) +
                    "\ncomposition = " + print_poly(rep.composition, doc.order) + "\n";
            text += rep.trivial ? "trivial\n"
                                : "nontrivial; normal form = " +
                                      print_poly(rep.normal_form, doc.order) + "\n";
        }
    }
    emit(j, a.json, text);
    if (matches.empty()) return 2;
    for (const auto& rep : matches)
        if (!rep.trivial) return 1;
    return 0;
}

int run_check(const CommonArgs& a) {
    PresentationDoc doc = load_presentation(a.file);
    int code = 0;
    auto lift = lifted_or_report(doc, a, code);
    if (!lift) return code;
    GsbOptions opts{a.bounds.max_order, a.bounds.max_degree};
    GsbVerdict v = check_gsb(*lift->rules, opts);
    Json j = report_check(doc, a.bounds, v);
    std::string text = "compositions checked: " + std::to_string(v.n_compositions) + "\n";
    if (v.all_trivial) {
        text += "all trivial up to N=" + std::to_string(opts.max_order) +
                ", D=" + std::to_string(opts.max_degree) + "\n";
    } else {
        for (const auto& rep : v.failures)
            text += "nontrivial at (" + std::to_string(rep.lhs) + "," + std::to_string(rep.rhs) +
                    "), orders (" + std::to_string(rep.i) + "," + std::to_string(rep.j) +
                    "), w = " + print_word(rep.w, doc.pres.ctx->table) +
                    ", normal form = " + print_poly(rep.normal_form, doc.order) + "\n";
        if (v.budget_exhausted) text += "warning: step budget exhausted\n";
    }
    emit(j, a.json, text);
    if (!v.failures.empty()) return 1;
    return v.budget_exhausted ? 3 : 0;
}

int run_complete(const CommonArgs& a, int rounds) {
    PresentationDoc doc = load_presentation(a.file);
    CommonArgs aa = a;
    aa.bounds.rounds = rounds;
    int code = 0;
    auto lift = lifted_or_report(doc, aa, code);
    if (!lift) return code;
    GsbOptions opts{aa.bounds.max_order, aa.bounds.max_degree};
    CompletionResult r = complete(*lift->rules, opts, rounds);
    Json j = report_complete(doc, aa.bounds, r);
    std::string text;
    for (size_t k = 0; k < r.adjoined.size(); ++k) {
        text += "round " + std::to_string(k + 1) + " adjoined:";
        for (const auto& f : r.adjoined[k]) text += " " + print_poly(f, doc.order);
        text += "\n";
    }
    if (r.completed) {
        text += "complete after " + std::to_string(r.rounds_used) + " round(s); basis size " +
                std::to_string(r.basis.size()) + "\n";
        for (const auto& f : r.basis) text += "  " + print_poly(f, doc.order) + "\n";
    } else {
        text += r.verdict.budget_exhausted ? "stopped: step budget exhausted\n"
                                           : "stopped: round limit reached\n";
    }
    emit(j, aa.json, text);
    return r.completed ? 0 : 3;
}

int run_basis(const CommonArgs& a, int var_order, bool verify) {
    PresentationDoc doc = load_presentation(a.file);
    int code = 0;
    auto lift = lifted_or_report(doc, a, code);
    if (!lift) return code;
    std::vector<Word> words = diff_irr(*lift->rules, a.bounds.max_degree, var_order);
    std::optional<DimensionEstimate> oracle;
    if (verify) oracle = quotient_dim_oracle(*lift->rules, a.bounds.max_degree, var_order);
    Json j = report_basis(doc, a.bounds, var_order, words, oracle);
    std::string text =
        "irreducible words (degree <= " + std::to_string(a.bounds.max_degree) +
        ", order <= " + std::to_string(var_order) + "): " + std::to_string(words.size()) + "\n";
    for (const auto& w : words) text += "  " + print_word(w, doc.pres.ctx->table) + "\n";
    bool agreed = true;
    if (oracle) {
        long n = static_cast<long>(words.size());
        agreed = oracle->exact ? n == oracle->upper : (n >= oracle->lower && n <= oracle->upper);
        text += "oracle: [" + std::to_string(oracle->lower) + ", " +
                std::to_string(oracle->upper) + "]" + (oracle->exact ? " (exact)" : "") +
                (agreed ? " agrees\n" : " DISAGREES\n");
    }
    emit(j, a.json, text);
    return agreed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-Shirshov bases for free differential algebras of weight lambda"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string expr;
    int n = 1, lhs = 0, rhs = 0, comp_i = 0, comp_j = 0, rounds = 8, var_order = 3;
    bool verify = false;

    auto* cmd_derive = app.add_subcommand("derive", "differentiate an expression");
    add_common(cmd_derive, a, false);
    cmd_derive->add_option("--expr", expr, "polynomial expression")->required();
    cmd_derive->add_option("-n,--order", n, "derivative order");

    auto* cmd_reduce = app.add_subcommand("reduce", "normal form modulo the lifted relations");
    add_common(cmd_reduce, a);
    cmd_reduce->add_option("--expr", expr, "polynomial expression")->required();

    auto* cmd_member = app.add_subcommand("member", "bounded differential ideal membership");
    add_common(cmd_member, a);
    cmd_member->add_option("--expr", expr, "polynomial expression")->required();

    auto* cmd_compose = app.add_subcommand("compose", "compositions of one relation pair");
    add_common(cmd_compose, a);
    cmd_compose->add_option("--lhs", lhs, "left relation index")->required();
    cmd_compose->add_option("--rhs", rhs, "right relation index")->required();
    cmd_compose->add_option("--i", comp_i, "derivative order on lhs")->required();
    cmd_compose->add_option("--j", comp_j, "derivative order on rhs")->required();

    auto* cmd_check = app.add_subcommand("check-gs", "check all compositions within bounds");
    add_common(cmd_check, a);

    auto* cmd_complete = app.add_subcommand("complete", "adjoin normal forms until trivial");
    add_common(cmd_complete, a);
    cmd_complete->add_option("--rounds", rounds, "completion round limit");

    auto* cmd_basis = app.add_subcommand("basis", "enumerate irreducible words");
    add_common(cmd_basis, a);
    cmd_basis->add_option("--var-order", var_order, "letter order bound M");
    cmd_basis->add_flag("--verify", verify, "cross-check against the rank oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_derive->parsed()) return run_derive(a, expr, n);
        if (cmd_reduce->parsed()) return run_reduce(a, expr);
        if (cmd_member->parsed()) return run_member(a, expr);
        if (cmd_compose->parsed()) return run_compose(a, lhs, rhs, comp_i, comp_j);
        if (cmd_check->parsed()) return run_check(a);
        if (cmd_complete->parsed()) return run_complete(a, rounds);
        if (cmd_basis->parsed()) return run_basis(a, var_order, verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

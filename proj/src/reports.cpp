#include "diffgsb/reports.hpp"

#include <algorithm>

#include "diffgsb/expressions.hpp"

namespace diffgsb {

Json report_header(const std::string& command, const PresentationDoc& doc, const Bounds& b) {
    const Context& ctx = *doc.pres.ctx;
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["generators"] = ctx.table.names;
    j["commutative"] = ctx.commutative;
    j["weight"] = ctx.weight.str();
    j["order"] = doc.order == OrderKind::LexC ? "lex" : "deglex";
    j["relations"] = doc.relation_sources;
    j["bounds"] = Json{{"max_order", b.max_order},
                       {"max_degree", b.max_degree},
                       {"rounds", b.rounds}};
    return j;
}

Json report_derive(const PresentationDoc& doc, const Bounds& b, const std::string& input, int n,
                   const DiffPoly& result) {
    Json j = report_header("derive", doc, b);
    j["input"] = input;
    j["n"] = n;
    j["result"] = print_poly(result, doc.order);
    return j;
}

Json report_reduce(const PresentationDoc& doc, const Bounds& b, const std::string& input,
                   const DiffPoly& input_poly, const ReduceResult& r) {
    Json j = report_header("reduce", doc, b);
    j["input"] = input;
    j["input_canonical"] = print_poly(input_poly, doc.order);
    j["normal_form"] = print_poly(r.normal_form, doc.order);
    j["steps"] = r.steps_used;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
}

Json report_member(const PresentationDoc& doc, const Bounds& b, const std::string& input,
                   const MemberResult& r) {
    Json j = report_header("member", doc, b);
    j["input"] = input;
    switch (r.verdict) {
        case MemberVerdict::Member: j["verdict"] = "member"; break;
        case MemberVerdict::NotMemberWithinBounds: j["verdict"] = "not_member_within_bounds"; break;
        case MemberVerdict::BudgetExhausted: j["verdict"] = "budget_exhausted"; break;
    }
    j["normal_form"] = print_poly(r.normal_form, doc.order);
    return j;
}

Json composition_json(const CompositionReport& rep, OrderKind order, const GenTable& table) {
    Json j;
    switch (rep.kind) {
        case CompositionKind::Intersection: j["kind"] = "intersection"; break;
        case CompositionKind::Inclusion: j["kind"] = "inclusion"; break;
        case CompositionKind::Commutative: j["kind"] = "commutative"; break;
    }
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["i"] = rep.i;
    j["j"] = rep.j;
    j["ambiguity"] = print_word(rep.w, table);
    j["composition"] = print_poly(rep.composition, order);
    j["trivial"] = rep.trivial;
    if (!rep.trivial) j["normal_form"] = print_poly(rep.normal_form, order);
    if (rep.budget_exhausted) j["budget_exhausted"] = true;
    return j;
}

Json report_compose(const PresentationDoc& doc, const Bounds& b,
                    const std::vector<CompositionReport>& reports) {
    Json j = report_header("compose", doc, b);
    Json arr = Json::array();
    for (const auto& rep : reports)
        arr.push_back(composition_json(rep, doc.order, doc.pres.ctx->table));
    j["compositions"] = arr;
    j["all_trivial"] = std::all_of(reports.begin(), reports.end(),
                                   [](const CompositionReport& r) { return r.trivial; });
    return j;
}

Json report_check(const PresentationDoc& doc, const Bounds& b, const GsbVerdict& v) {
    Json j = report_header("check-gs", doc, b);
    j["n_compositions"] = v.n_compositions;
    j["all_trivial"] = v.all_trivial;
    j["budget_exhausted"] = v.budget_exhausted;
    Json arr = Json::array();
    for (const auto& rep : v.failures)
        arr.push_back(composition_json(rep, doc.order, doc.pres.ctx->table));
    j["failures"] = arr;
    return j;
}

Json report_complete(const PresentationDoc& doc, const Bounds& b, const CompletionResult& r) {
    Json j = report_header("complete", doc, b);
    j["completed"] = r.completed;
    j["rounds_used"] = r.rounds_used;
    j["rounds_exhausted"] = r.rounds_exhausted;
    j["budget_exhausted"] = r.verdict.budget_exhausted;
    Json basis = Json::array();
    for (const auto& f : r.basis) basis.push_back(print_poly(f, doc.order));
    j["basis"] = basis;
    Json rounds = Json::array();
    for (const auto& round : r.adjoined) {
        Json one = Json::array();
        for (const auto& f : round) one.push_back(print_poly(f, doc.order));
        rounds.push_back(one);
    }
    j["adjoined"] = rounds;
    return j;
}

Json report_basis(const PresentationDoc& doc, const Bounds& b, int var_order,
                  const std::vector<Word>& words,
                  const std::optional<DimensionEstimate>& oracle) {
    Json j = report_header("basis", doc, b);
    j["var_order"] = var_order;
    j["count"] = words.size();
    Json arr = Json::array();
    for (const auto& w : words) arr.push_back(print_word(w, doc.pres.ctx->table));
    j["words"] = arr;
    if (oracle) {
        Json o;
        o["lower"] = oracle->lower;
        o["upper"] = oracle->upper;
        o["exact"] = oracle->exact;
        o["n_words"] = oracle->n_words;
        o["agrees"] = oracle->exact ? (static_cast<long>(words.size()) == oracle->upper)
                                    : (static_cast<long>(words.size()) <= oracle->upper &&
                                       static_cast<long>(words.size()) >= oracle->lower);
        j["oracle"] = o;
    }
    return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace diffgsb

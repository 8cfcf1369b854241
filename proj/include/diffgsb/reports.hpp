#ifndef DIFFGSB_REPORTS_HPP
#define DIFFGSB_REPORTS_HPP

#include <optional>
#include <string>

#include "diffgsb/basis.hpp"
#include "diffgsb/presentation_io.hpp"
#include "json.hpp"

namespace diffgsb {

using Json = nlohmann::ordered_json;

struct Bounds {
    int max_order = 3;
    int max_degree = 6;
    int rounds = 8;
};

Json report_header(const std::string& command, const PresentationDoc& doc, const Bounds& b);

Json report_derive(const PresentationDoc& doc, const Bounds& b, const std::string& input, int n,
                   const DiffPoly& result);
Json report_reduce(const PresentationDoc& doc, const Bounds& b, const std::string& input,
                   const DiffPoly& input_poly, const ReduceResult& r);
Json report_member(const PresentationDoc& doc, const Bounds& b, const std::string& input,
                   const MemberResult& r);
Json report_compose(const PresentationDoc& doc, const Bounds& b,
                    const std::vector<CompositionReport>& reports);
Json report_check(const PresentationDoc& doc, const Bounds& b, const GsbVerdict& v);
Json report_complete(const PresentationDoc& doc, const Bounds& b, const CompletionResult& r);
Json report_basis(const PresentationDoc& doc, const Bounds& b, int var_order,
                  const std::vector<Word>& words,
                  const std::optional<DimensionEstimate>& oracle);

Json composition_json(const CompositionReport& rep, OrderKind order, const GenTable& table);

std::string render(const Json& j);

}  // namespace diffgsb

#endif

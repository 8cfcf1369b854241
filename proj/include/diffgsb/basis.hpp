#ifndef DIFFGSB_BASIS_HPP
#define DIFFGSB_BASIS_HPP

#include "diffgsb/rewriting.hpp"

namespace diffgsb {

// Generators-and-relations presentation of the base algebra: every relation
// is a nonzero polynomial in order-0 variables.
struct Presentation {
    ContextPtr ctx;
    std::vector<DiffPoly> relations;

    Presentation(ContextPtr c, std::vector<DiffPoly> rels);
};

enum class CompositionKind { Intersection, Inclusion, Commutative };

struct CompositionReport {
    CompositionKind kind;
    int lhs;  // basis indices
    int rhs;
    int i;  // derivative orders
    int j;
    Word w;  // ambiguity
    DiffPoly composition;
    bool trivial = false;
    DiffPoly normal_form;
    bool budget_exhausted = false;
    ReductionTrace certificate;
};

struct GsbOptions {
    int max_order = 3;   // derivative bound N on (i, j)
    int max_degree = 6;  // ambiguity degree bound on |w|
};

// All compositions of the rule set within the bounds, triviality checked.
// Self pairs skip the identically-zero derivative-shift cases; commutative
// pairs with separated leading supports are skipped (always trivial);
// noncommutative inclusions are skipped when the contained element is a monic
// derivative image of the container.
std::vector<CompositionReport> compositions(const RuleSet& rs, const GsbOptions& opts);

struct GsbVerdict {
    bool all_trivial = false;
    int max_order = 0;
    int max_degree = 0;
    long n_compositions = 0;
    bool budget_exhausted = false;
    std::vector<CompositionReport> failures;
};

GsbVerdict check_gsb(const RuleSet& rs, const GsbOptions& opts);

// Classical precheck (derivative bound 0) followed by the differential lift.
struct LiftResult {
    bool ok = false;
    GsbVerdict classical;
    std::optional<RuleSet> rules;
};

LiftResult lift_presentation(const Presentation& p, OrderKind order, int max_order,
                             const GsbOptions& opts = {});

struct CompletionResult {
    std::vector<DiffPoly> basis;
    GsbVerdict verdict;  // verdict for the final basis
    int rounds_used = 0;
    bool completed = false;
    bool rounds_exhausted = false;
    std::vector<std::vector<DiffPoly>> adjoined;  // per round
};

CompletionResult complete(const RuleSet& rs, const GsbOptions& opts, int max_rounds);

// Words of degree <= D over variables of order <= M, ascending under `order`.
std::vector<Word> enumerate_words(const ContextPtr& ctx, int max_degree, int var_order,
                                  OrderKind order);

// Irreducible words within the bounds, ascending. Order-0 lifted bases under
// deg-lex use the closed leading patterns; otherwise reducibility is decided
// by find_reduction against the materialized rules.
std::vector<Word> diff_irr(const RuleSet& rs, int max_degree, int var_order);

struct DimensionEstimate {
    long lower = 0;
    long upper = 0;
    bool exact = false;
    long n_words = 0;
    long rank_full = 0;
    long n_straddlers = 0;
};

// Brute-force linear algebra over the truncated word space. `upper` is a
// certified bound; `exact` only when no rule instance straddles the
// truncation, and equals the truncated quotient dimension whenever reduction
// is closed in the box (deg-lex with an order-0 lifted or verified basis).
// With straddlers, `lower` also eliminates the in-box restrictions of
// straddling instances whose lead fits, a heuristic floor.
DimensionEstimate quotient_dim_oracle(const RuleSet& rs, int max_degree, int var_order);

enum class MemberVerdict { Member, NotMemberWithinBounds, BudgetExhausted };

struct MemberResult {
    MemberVerdict verdict;
    DiffPoly normal_form;
    ReductionTrace certificate;
    long steps_used = 0;
};

// Membership in the differential ideal, decided by reduction. A zero normal
// form certifies membership; a nonzero one refutes it only relative to the
// bounds unless the basis has been verified.
MemberResult member_bounded(const DiffPoly& f, const RuleSet& rs);

}  // namespace diffgsb

#endif

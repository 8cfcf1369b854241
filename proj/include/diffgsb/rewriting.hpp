#ifndef DIFFGSB_REWRITING_HPP
#define DIFFGSB_REWRITING_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "diffgsb/polynomial.hpp"

namespace diffgsb {

// One-hole context. Noncommutative: left * _ * right. Commutative: right is
// the unit and left is the cofactor, so subst multiplies by left.
struct StarWord {
    Word left;
    Word right;
};

DiffPoly subst(const StarWord& q, const DiffPoly& f);
Word subst_word(const StarWord& q, const Word& w);

struct Rule {
    Word lead;
    DiffPoly poly;  // monic
};

struct RuleRef {
    int rule_index;   // position in the basis
    int deriv_order;  // k: the rule is d^k(basis[rule_index]) made monic
    StarWord at;
};

enum class ReducePolicy {
    FirstMatch,  // rule index ascending, k ascending, leftmost position
    AltMatch,    // rule index descending, k descending, rightmost position
};

// Monic rewriting system d^k(s), s in basis. The derivative cache extends
// lazily and is safe to share across threads. max_order is the composition
// enumeration bound N; reduction itself caps k per monomial (see
// find_reduction) and is exact under deg-lex orders.
class RuleSet {
public:
    RuleSet(ContextPtr ctx, OrderKind order, std::vector<DiffPoly> basis, int max_order,
            long lex_step_budget = 200000);

    const ContextPtr& context() const { return ctx_; }
    OrderKind order() const { return order_; }
    int max_order() const { return max_order_; }
    long lex_step_budget() const { return lex_step_budget_; }
    const std::vector<DiffPoly>& basis() const { return basis_; }
    bool order0_lifted() const { return order0_lifted_; }

    // d^k(basis[s]) made monic; null when the derivative vanishes
    std::shared_ptr<const Rule> rule(int s, int k) const;

private:
    ContextPtr ctx_;
    OrderKind order_;
    std::vector<DiffPoly> basis_;
    int max_order_;
    long lex_step_budget_;
    bool order0_lifted_;

    mutable std::unique_ptr<std::mutex> mu_;  // pointer keeps RuleSet movable
    mutable std::vector<std::vector<std::shared_ptr<const Rule>>> cache_;
};

// Derivative orders k worth searching when rewriting the word u: under
// deg-lex the lead of d^k(s) carries a letter of order >= k, under
// commutative lex every monomial of d^k(s) has total order >= k. Both caps
// are exact for rule applicability.
int reduction_order_cap(const Word& u, const RuleSet& rs);

std::optional<RuleRef> find_reduction(const Word& u, const RuleSet& rs,
                                      ReducePolicy policy = ReducePolicy::FirstMatch);

struct ReductionStep {
    RuleRef at;
    Rational coeff;  // input -= coeff * subst(at.at, rule poly)
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct ReduceResult {
    DiffPoly normal_form;
    ReductionTrace trace;
    bool budget_exhausted = false;
    long steps_used = 0;
};

ReduceResult reduce(const DiffPoly& f, const RuleSet& rs,
                    ReducePolicy policy = ReducePolicy::FirstMatch);

// Replays a trace: sum of coeff * subst(q, d^k(s)) over the steps.
DiffPoly trace_value(const ReductionTrace& trace, const RuleSet& rs);

struct TrivialityResult {
    bool trivial;
    ReductionTrace certificate;
    bool budget_exhausted = false;
};

// f is trivial mod (S, w) when it rewrites to zero; every monomial of f must
// be strictly below w (checked), and each certificate term then stays below w.
TrivialityResult is_trivial_mod(const DiffPoly& f, const RuleSet& rs, const Word& w);

}  // namespace diffgsb

#endif

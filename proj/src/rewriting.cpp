#include "diffgsb/rewriting.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffgsb {

Word subst_word(const StarWord& q, const Word& w) { return q.left * w * q.right; }

DiffPoly subst(const StarWord& q, const DiffPoly& f) {
    DiffPoly r(f.context());
    for (const auto& [w, c] : f.terms()) r.add_term(subst_word(q, w), c);
    return r;
}

RuleSet::RuleSet(ContextPtr ctx, OrderKind order, std::vector<DiffPoly> basis, int max_order,
                 long lex_step_budget)
    : ctx_(std::move(ctx)),
      order_(order),
      basis_(std::move(basis)),
      max_order_(max_order),
      lex_step_budget_(lex_step_budget),
      mu_(std::make_unique<std::mutex>()) {
    if (max_order_ < 0) throw std::invalid_argument("rule set: negative derivative bound");
    bool need_comm = order_ != OrderKind::DegLexNC;
    if (ctx_->commutative != need_comm)
        throw std::invalid_argument("rule set: order kind does not match context variant");
    order0_lifted_ = true;
    for (auto& f : basis_) {
        if (f.is_zero()) throw std::invalid_argument("rule set: zero basis element");
        f = f.monic(order_);
        if (f.max_order() != 0) order0_lifted_ = false;
    }
    cache_.resize(basis_.size());
}

std::shared_ptr<const Rule> RuleSet::rule(int s, int k) const {
    if (s < 0 || s >= static_cast<int>(basis_.size()))
        throw std::out_of_range("rule set: bad basis index");
    if (k < 0) throw std::out_of_range("rule set: negative derivative order");
    std::lock_guard<std::mutex> lock(*mu_);
    auto& row = cache_[static_cast<size_t>(s)];
    while (static_cast<int>(row.size()) <= k) {
        DiffPoly next(ctx_);
        if (row.empty()) {
            next = basis_[static_cast<size_t>(s)];
        } else if (row.back() == nullptr) {
            row.push_back(nullptr);
            continue;
        } else {
            next = derive(row.back()->poly);
        }
        if (next.is_zero()) {
            row.push_back(nullptr);
            continue;
        }
        next = next.monic(order_);
        auto lead = next.leading(order_);
        row.push_back(std::make_shared<const Rule>(Rule{lead.word, std::move(next)}));
    }
    return row[static_cast<size_t>(k)];
}

int reduction_order_cap(const Word& u, const RuleSet& rs) {
    if (order_is_deglex(rs.order())) return u.max_order();
    long t = u.total_order();
    return static_cast<int>(std::min<long>(t, 1000000));
}

namespace {

std::optional<StarWord> first_position(const Word& lead, const Word& u, bool commutative,
                                       ReducePolicy policy) {
    if (commutative) {
        auto cof = divides_c(lead, u);
        if (!cof) return std::nullopt;
        return StarWord{*cof, Word::unit(true)};
    }
    if (lead.is_unit()) return StarWord{Word::unit(false), u};
    auto facs = divides_nc(lead, u);
    if (facs.empty()) return std::nullopt;
    const auto& f = policy == ReducePolicy::FirstMatch ? facs.front() : facs.back();
    return StarWord{f.left, f.right};
}

}  // namespace

std::optional<RuleRef> find_reduction(const Word& u, const RuleSet& rs, ReducePolicy policy) {
    const int n_rules = static_cast<int>(rs.basis().size());
    const int kcap = reduction_order_cap(u, rs);
    const bool comm = rs.context()->commutative;
    auto scan = [&](int s) -> std::optional<RuleRef> {
        if (policy == ReducePolicy::FirstMatch) {
            for (int k = 0; k <= kcap; ++k) {
                auto r = rs.rule(s, k);
                if (!r) continue;
                if (auto q = first_position(r->lead, u, comm, policy))
                    return RuleRef{s, k, std::move(*q)};
            }
        } else {
            for (int k = kcap; k >= 0; --k) {
                auto r = rs.rule(s, k);
                if (!r) continue;
                if (auto q = first_position(r->lead, u, comm, policy))
                    return RuleRef{s, k, std::move(*q)};
            }
        }
        return std::nullopt;
    };
    if (policy == ReducePolicy::FirstMatch) {
        for (int s = 0; s < n_rules; ++s)
            if (auto hit = scan(s)) return hit;
    } else {
        for (int s = n_rules - 1; s >= 0; --s)
            if (auto hit = scan(s)) return hit;
    }
    return std::nullopt;
}

ReduceResult reduce(const DiffPoly& f, const RuleSet& rs, ReducePolicy policy) {
    ReduceResult res{DiffPoly::zero(f.context()), {}, false, 0};
    require_same_context(f, DiffPoly::zero(rs.context()));
    const bool budgeted = !order_is_deglex(rs.order());
    DiffPoly working = f;
    DiffPoly remainder(f.context());
    while (!working.is_zero()) {
        auto lt = working.leading(rs.order());
        auto hit = find_reduction(lt.word, rs, policy);
        if (!hit) {
            remainder.add_term(lt.word, lt.coeff);
            working.add_term(lt.word, -lt.coeff);
            continue;
        }
        if (budgeted && res.steps_used >= rs.lex_step_budget()) {
            res.budget_exhausted = true;
            break;
        }
        auto rule = rs.rule(hit->rule_index, hit->deriv_order);
        working -= subst(hit->at, rule->poly).scaled(lt.coeff);
        res.trace.steps.push_back({*hit, lt.coeff});
        ++res.steps_used;
    }
    res.normal_form = remainder + working;
    return res;
}

DiffPoly trace_value(const ReductionTrace& trace, const RuleSet& rs) {
    DiffPoly acc(rs.context());
    for (const auto& st : trace.steps) {
        auto rule = rs.rule(st.at.rule_index, st.at.deriv_order);
        acc += subst(st.at.at, rule->poly).scaled(st.coeff);
    }
    return acc;
}

TrivialityResult is_trivial_mod(const DiffPoly& f, const RuleSet& rs, const Word& w) {
    for (const auto& [m, c] : f.terms())
        if (cmp_word(m, w, rs.order()) != std::strong_ordering::less)
            throw std::invalid_argument("is_trivial_mod: monomial not below the ambiguity");
    auto r = reduce(f, rs);
    return {r.normal_form.is_zero() && !r.budget_exhausted, std::move(r.trace),
            r.budget_exhausted};
}

}  // namespace diffgsb

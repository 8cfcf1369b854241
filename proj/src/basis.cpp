#include "diffgsb/basis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace diffgsb {

Presentation::Presentation(ContextPtr c, std::vector<DiffPoly> rels)
    : ctx(std::move(c)), relations(std::move(rels)) {
    for (const auto& r : relations) {
        if (r.is_zero()) throw std::invalid_argument("presentation: zero relation");
        if (r.max_order() != 0)
            throw std::invalid_argument("presentation: relation uses derivative variables");
        require_same_context(r, DiffPoly::zero(ctx));
    }
}

namespace {

CompositionReport make_report(const RuleSet& rs, CompositionKind kind, int lhs, int rhs, int i,
                              int j, Word w, DiffPoly comp) {
    return CompositionReport{kind, lhs, rhs, i, j, std::move(w), std::move(comp),
                             false, DiffPoly::zero(rs.context()), false, ReductionTrace{}};
}

void finish_report(CompositionReport& rep, const RuleSet& rs) {
    auto res = is_trivial_mod(rep.composition, rs, rep.w);
    rep.trivial = res.trivial;
    rep.budget_exhausted = res.budget_exhausted;
    if (res.trivial) {
        rep.certificate = std::move(res.certificate);
        rep.normal_form = DiffPoly::zero(rs.context());
    } else {
        auto red = reduce(rep.composition, rs);
        rep.normal_form = red.normal_form;
        rep.budget_exhausted = rep.budget_exhausted || red.budget_exhausted;
    }
}

// is t a monic derivative image of s within the bound?
bool derivative_image(const RuleSet& rs, int s, int t, int bound) {
    const DiffPoly& target = rs.basis()[static_cast<size_t>(t)];
    for (int m = 0; m <= bound; ++m) {
        auto r = rs.rule(s, m);
        if (!r) break;
        if (r->poly == target) return true;
    }
    return false;
}

void commutative_compositions(const RuleSet& rs, const GsbOptions& opts,
                              std::vector<CompositionReport>& out) {
    const int n = static_cast<int>(rs.basis().size());
    const int N = opts.max_order;
    for (int si = 0; si < n; ++si)
        for (int ti = si; ti < n; ++ti)
            for (int i = 0; i <= N; ++i)
                for (int j = 0; j <= N; ++j) {
                    if (si == ti && i <= j) continue;  // mirror is a sign flip; i=j vanishes
                    auto ri = rs.rule(si, i);
                    auto rj = rs.rule(ti, j);
                    if (!ri || !rj) continue;
                    if (ri->lead.is_unit() || rj->lead.is_unit()) continue;
                    if (!shares_support_c(ri->lead, rj->lead)) continue;
                    Word w = lcm_c(ri->lead, rj->lead);
                    if (w.degree() > opts.max_degree) continue;
                    Word u = *divides_c(ri->lead, w);
                    Word v = *divides_c(rj->lead, w);
                    auto rep = make_report(rs, CompositionKind::Commutative, si, ti, i, j, w,
                                           subst({u, Word::unit(true)}, ri->poly) -
                                               subst({v, Word::unit(true)}, rj->poly));
                    finish_report(rep, rs);
                    out.push_back(std::move(rep));
                }
}

void noncommutative_compositions(const RuleSet& rs, const GsbOptions& opts,
                                 std::vector<CompositionReport>& out) {
    const int n = static_cast<int>(rs.basis().size());
    const int N = opts.max_order;
    const Word one = Word::unit(false);
    for (int si = 0; si < n; ++si)
        for (int ti = 0; ti < n; ++ti)
            for (int i = 0; i <= N; ++i)
                for (int j = 0; j <= N; ++j) {
                    auto ri = rs.rule(si, i);
                    auto rj = rs.rule(ti, j);
                    if (!ri || !rj) continue;
                    if (ri->lead.is_unit() || rj->lead.is_unit()) continue;
                    for (auto& ov : overlaps_nc(ri->lead, rj->lead)) {
                        if (ov.w.degree() > opts.max_degree) continue;
                        auto rep = make_report(rs, CompositionKind::Intersection, si, ti, i, j,
                                               ov.w,
                                               subst({one, ov.u}, ri->poly) -
                                                   subst({ov.v, one}, rj->poly));
                        finish_report(rep, rs);
                        out.push_back(std::move(rep));
                    }
                    if (si == ti) continue;  // self inclusions shift-cancel
                    if (derivative_image(rs, si, ti, N)) continue;
                    if (ri->lead.degree() > opts.max_degree) continue;
                    for (auto& fac : divides_nc(rj->lead, ri->lead)) {
                        auto rep = make_report(rs, CompositionKind::Inclusion, si, ti, i, j,
                                               ri->lead,
                                               ri->poly - subst({fac.left, fac.right}, rj->poly));
                        finish_report(rep, rs);
                        out.push_back(std::move(rep));
                    }
                }
}

}  // namespace

std::vector<CompositionReport> compositions(const RuleSet& rs, const GsbOptions& opts) {
    std::vector<CompositionReport> out;
    if (rs.context()->commutative)
        commutative_compositions(rs, opts, out);
    else
        noncommutative_compositions(rs, opts, out);
    return out;
}

GsbVerdict check_gsb(const RuleSet& rs, const GsbOptions& opts) {
    GsbVerdict v;
    v.max_order = opts.max_order;
    v.max_degree = opts.max_degree;
    auto reps = compositions(rs, opts);
    v.n_compositions = static_cast<long>(reps.size());
    for (auto& r : reps) {
        if (r.budget_exhausted) v.budget_exhausted = true;
        if (!r.trivial) v.failures.push_back(std::move(r));
    }
    v.all_trivial = v.failures.empty() && !v.budget_exhausted;
    return v;
}

LiftResult lift_presentation(const Presentation& p, OrderKind order, int max_order,
                             const GsbOptions& opts) {
    LiftResult res;
    RuleSet classical(p.ctx, order, p.relations, 0);
    GsbOptions copts = opts;
    copts.max_order = 0;
    res.classical = check_gsb(classical, copts);
    if (!res.classical.all_trivial) return res;
    res.ok = true;
    res.rules.emplace(p.ctx, order, p.relations, max_order);
    return res;
}

CompletionResult complete(const RuleSet& rs, const GsbOptions& opts, int max_rounds) {
    CompletionResult res;
    res.basis = rs.basis();
    const auto& ctx = rs.context();
    for (int round = 0;; ++round) {
        RuleSet cur(ctx, rs.order(), res.basis, rs.max_order(), rs.lex_step_budget());
        res.basis = cur.basis();
        res.verdict = check_gsb(cur, opts);
        if (res.verdict.all_trivial) {
            res.completed = true;
            return res;
        }
        if (res.verdict.budget_exhausted) return res;
        if (round == max_rounds) {
            res.rounds_exhausted = true;
            return res;
        }
        // adjoin the failures' normal forms, smallest lead first, each
        // re-reduced against the basis plus the batch accepted before it
        std::vector<DiffPoly> cand;
        for (const auto& f : res.verdict.failures)
            if (!f.normal_form.is_zero()) cand.push_back(f.normal_form.monic(rs.order()));
        std::sort(cand.begin(), cand.end(), [&](const DiffPoly& a, const DiffPoly& b) {
            return cmp_word(a.leading(rs.order()).word, b.leading(rs.order()).word,
                            rs.order()) == std::strong_ordering::less;
        });
        std::vector<DiffPoly> batch;
        std::vector<DiffPoly> enlarged = res.basis;
        for (const auto& f : cand) {
            RuleSet probe(ctx, rs.order(), enlarged, rs.max_order(), rs.lex_step_budget());
            auto nf = reduce(f, probe);
            if (nf.budget_exhausted) {
                res.verdict.budget_exhausted = true;
                return res;
            }
            if (nf.normal_form.is_zero()) continue;
            DiffPoly g = nf.normal_form.monic(rs.order());
            batch.push_back(g);
            enlarged.push_back(std::move(g));
        }
        res.adjoined.push_back(batch);
        res.basis = std::move(enlarged);
        res.rounds_used = round + 1;
    }
}

std::vector<Word> enumerate_words(const ContextPtr& ctx, int max_degree, int var_order,
                                  OrderKind order) {
    std::vector<DiffVar> alphabet;
    for (int m = 0; m <= var_order; ++m)
        for (int g = 0; g < ctx->table.size(); ++g) alphabet.push_back(DiffVar{g, m});
    std::vector<Word> out;
    std::vector<DiffVar> cur;
    const bool comm = ctx->commutative;
    std::function<void(size_t)> walk = [&](size_t min_idx) {
        out.push_back(Word(cur, comm));
        if (static_cast<int>(cur.size()) == max_degree) return;
        for (size_t a = comm ? min_idx : 0; a < alphabet.size(); ++a) {
            cur.push_back(alphabet[a]);
            walk(a);
            cur.pop_back();
        }
    };
    walk(0);
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        return cmp_word(a, b, order) == std::strong_ordering::less;
    });
    return out;
}

namespace {

Word lifted_pattern(const Word& lead0, int n, const Context& ctx) {
    std::vector<DiffVar> ls = lead0.letters();
    if (!ctx.weight.is_zero()) {
        for (auto& l : ls) l.order = n;
    } else if (!ls.empty()) {
        ls[0].order = n;
    }
    return Word(std::move(ls), lead0.commutative());
}

bool pattern_divides(const Word& pat, const Word& u, bool comm) {
    if (comm) return divides_c(pat, u).has_value();
    return !divides_nc(pat, u).empty();
}

}  // namespace

std::vector<Word> diff_irr(const RuleSet& rs, int max_degree, int var_order) {
    auto words = enumerate_words(rs.context(), max_degree, var_order, rs.order());
    std::vector<Word> out;
    const bool comm = rs.context()->commutative;
    if (rs.order0_lifted() && order_is_deglex(rs.order())) {
        std::vector<Word> pats;
        for (size_t s = 0; s < rs.basis().size(); ++s) {
            Word lead0 = rs.rule(static_cast<int>(s), 0)->lead;
            if (lead0.is_unit()) return {};  // unit relation collapses everything
            for (int n = 0; n <= var_order; ++n)
                pats.push_back(lifted_pattern(lead0, n, *rs.context()));
        }
        for (const auto& w : words) {
            bool red = false;
            for (const auto& p : pats)
                if (pattern_divides(p, w, comm)) { red = true; break; }
            if (!red) out.push_back(w);
        }
    } else {
        for (const auto& w : words)
            if (!find_reduction(w, rs)) out.push_back(w);
    }
    return out;
}

namespace {

using SparseRow = std::map<long, Rational>;

// echelon keyed by pivot column (largest word index); returns rank gain
int echelon_insert(std::map<long, SparseRow>& ech, SparseRow row) {
    while (!row.empty()) {
        long p = row.rbegin()->first;
        auto it = ech.find(p);
        if (it == ech.end()) {
            Rational inv = row.rbegin()->second.inv();
            for (auto& [c, v] : row) v *= inv;
            ech.emplace(p, std::move(row));
            return 1;
        }
        Rational f = row.rbegin()->second;
        for (const auto& [c, v] : it->second) {
            auto [jt, fresh] = row.try_emplace(c, Rational(0));
            jt->second -= f * v;
            if (jt->second.is_zero()) row.erase(jt);
        }
    }
    return 0;
}

}  // namespace

DimensionEstimate quotient_dim_oracle(const RuleSet& rs, int max_degree, int var_order) {
    DimensionEstimate est;
    auto words = enumerate_words(rs.context(), max_degree, var_order, rs.order());
    est.n_words = static_cast<long>(words.size());
    if (words.size() > 200000)
        throw std::runtime_error("quotient_dim_oracle: bound overflow (too many words)");
    std::map<Word, long, WordStructuralLess> col;
    for (size_t i = 0; i < words.size(); ++i) col.emplace(words[i], static_cast<long>(i));

    auto in_box = [&](const Word& w) {
        return w.degree() <= max_degree && w.max_order() <= var_order;
    };

    const bool comm = rs.context()->commutative;
    const long kcap = static_cast<long>(max_degree) * var_order;
    std::vector<SparseRow> full, straddle;

    // contexts grouped by length so each rule only scans feasible sizes
    std::vector<std::vector<Word>> by_len(static_cast<size_t>(max_degree) + 1);
    for (const auto& w : enumerate_words(rs.context(), max_degree, var_order, rs.order()))
        by_len[static_cast<size_t>(w.degree())].push_back(w);

    auto classify = [&](const DiffPoly& inst) {
        SparseRow row;
        bool out_of_box = false;
        for (const auto& [w, c] : inst.terms()) {
            if (in_box(w))
                row.emplace(col.at(w), c);
            else
                out_of_box = true;
        }
        if (row.empty()) return;  // lead always fits, so this cannot happen
        if (out_of_box) {
            straddle.push_back(std::move(row));
        } else {
            full.push_back(std::move(row));
        }
    };

    for (int s = 0; s < static_cast<int>(rs.basis().size()); ++s) {
        for (long k = 0; k <= kcap; ++k) {
            auto r = rs.rule(s, static_cast<int>(k));
            if (!r) break;  // derivative vanished for good
            const Word& lead = r->lead;
            if (lead.max_order() > var_order || lead.degree() > max_degree) {
                if (order_is_deglex(rs.order()) && lead.max_order() > var_order) break;
                continue;
            }
            int room = max_degree - lead.degree();
            if (comm) {
                for (int len = 0; len <= room; ++len)
                    for (const auto& c : by_len[static_cast<size_t>(len)])
                        classify(subst({c, Word::unit(true)}, r->poly));
            } else {
                for (int la = 0; la <= room; ++la)
                    for (int lb = 0; lb + la <= room; ++lb)
                        for (const auto& a : by_len[static_cast<size_t>(la)])
                            for (const auto& b : by_len[static_cast<size_t>(lb)])
                                classify(subst({a, b}, r->poly));
            }
        }
    }

    est.n_straddlers = static_cast<long>(straddle.size());
    std::map<long, SparseRow> ech;
    for (auto& r : full) est.rank_full += echelon_insert(ech, std::move(r));
    est.upper = est.n_words - est.rank_full;
    long rank_all = est.rank_full;
    for (auto& r : straddle) rank_all += echelon_insert(ech, std::move(r));
    est.lower = est.n_words - rank_all;
    est.exact = straddle.empty();
    return est;
}

MemberResult member_bounded(const DiffPoly& f, const RuleSet& rs) {
    auto r = reduce(f, rs);
    MemberResult res{MemberVerdict::Member, std::move(r.normal_form), std::move(r.trace),
                     r.steps_used};
    if (r.budget_exhausted)
        res.verdict = MemberVerdict::BudgetExhausted;
    else if (!res.normal_form.is_zero())
        res.verdict = MemberVerdict::NotMemberWithinBounds;
    return res;
}

}  // namespace diffgsb

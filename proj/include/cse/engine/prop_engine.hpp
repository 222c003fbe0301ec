#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cse/engine/proof.hpp"
#include "cse/engine/strategy.hpp"
#include "cse/kernel/extension.hpp"
#include "cse/logic/clause_ops.hpp"
#include "cse/logic/clause_set.hpp"

namespace cse {

/// Observer invoked on every closed extension the engine produces; used by
/// verification suites to cross-check derived clauses.
using CscObserver = std::function<void(const CscResult&)>;

struct PreprocessResult {
    ClauseSet clauses;
    std::vector<Literal> pure_literals; // recorded so models can be completed
};

/**
 * Tautology and pure-literal deletion, iterated to a fixpoint. Clauses
 * removed for a pure literal are satisfied once the recorded literal is
 * assigned true, so satisfiability is preserved in both directions.
 */
inline PreprocessResult preprocess(const ClauseSet& s) {
    std::vector<Clause> working;
    for (const Clause& c : s.clauses())
        if (!is_tautology(c)) working.push_back(c);

    std::vector<Literal> record;
    for (;;) {
        const std::vector<Literal> pure = pure_literals(working);
        if (pure.empty()) break;
        for (const Literal& p : pure) record.push_back(p);
        std::vector<Clause> kept;
        for (const Clause& c : working) {
            bool contains_pure = false;
            for (const Literal& p : pure)
                if (c.contains(p)) {
                    contains_pure = true;
                    break;
                }
            if (!contains_pure) kept.push_back(c);
        }
        working = std::move(kept);
    }

    PreprocessResult out;
    for (const Clause& c : working) out.clauses.add(c);
    out.pure_literals = std::move(record);
    return out;
}

/**
 * Case 2(ii) of the unified procedure: reads a satisfying assignment off a
 * closed extension that involves every clause of s. Looks for a literal y
 * above the boundary in position j0 such that y differs from the later
 * main literals and no later main re-occurs among the earlier ones; the
 * assignment is then the later secondary literals, y, and the earlier
 * mains. Every candidate is verified against s before being returned; a
 * guard-passing candidate that fails verification is an internal bug.
 */
inline std::optional<std::vector<Literal>> extract_model(const ExtensionState& state,
                                                         const ClauseSet& s) {
    const std::size_t k = state.width();
    if (k < 2) return std::nullopt;

    // mains x_1 .. x_{k-1}; the final entry has none once closed
    std::vector<Literal> mains;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (!state.entries[i].main) return std::nullopt;
        mains.push_back(*state.entries[i].main);
    }

    for (std::size_t j0 = 1; j0 <= k; ++j0) {
        // later mains x_{j0} .. x_{k-1} must not re-occur among x_1 .. x_{j0-1}
        bool groups_disjoint = true;
        for (std::size_t h = j0; h + 1 <= k && groups_disjoint; ++h)
            for (std::size_t g = 1; g + 1 <= j0; ++g)
                if (mains[h - 1] == mains[g - 1]) {
                    groups_disjoint = false;
                    break;
                }
        if (!groups_disjoint) continue;

        for (const Literal& y : state.d_plus(j0 - 1)) {
            bool y_clashes = false;
            for (std::size_t h = j0; h + 1 <= k; ++h)
                if (y == mains[h - 1]) {
                    y_clashes = true;
                    break;
                }
            if (y_clashes) continue;

            std::vector<Literal> assignment;
            for (std::size_t h = j0; h + 1 <= k; ++h)
                assignment.push_back(complement(mains[h - 1]));
            assignment.push_back(y);
            for (std::size_t g = 1; g < j0; ++g) assignment.push_back(mains[g - 1]);
            std::sort(assignment.begin(), assignment.end());
            assignment.erase(std::unique(assignment.begin(), assignment.end()), assignment.end());

            bool consistent = true;
            for (std::size_t a = 0; a < assignment.size() && consistent; ++a)
                for (std::size_t b = a + 1; b < assignment.size(); ++b)
                    if (assignment[a].is_complement_of(assignment[b])) {
                        consistent = false;
                        break;
                    }
            if (!consistent)
                throw std::logic_error("extract_model: guarded candidate is inconsistent");

            bool satisfies = true;
            for (const Clause& c : s.clauses()) {
                bool sat = false;
                for (const Literal& l : c.literals())
                    if (std::find(assignment.begin(), assignment.end(), l) != assignment.end()) {
                        sat = true;
                        break;
                    }
                if (!sat) {
                    satisfies = false;
                    break;
                }
            }
            if (!satisfies)
                throw std::logic_error("extract_model: guarded candidate fails verification");
            return assignment;
        }
    }
    return std::nullopt;
}

namespace detail {

/// Saturation working state and the chain search shared by the filtered
/// rounds and the unrestricted coverage sweep.
class PropSearch {
public:
    static constexpr std::size_t kSearchTupleCap = 200'000;

    PropSearch(const ClauseSet& inputs, const StrategyConfig& cfg, CscObserver observer)
        : inputs_(inputs), cfg_(cfg), observer_(std::move(observer)) {
        start_ = std::chrono::steady_clock::now();
        const PreprocessResult pre = preprocess(inputs);
        pure_record_ = pre.pure_literals;
        for (const Clause& c : pre.clauses.clauses()) working_.push_back(c);
        next_id_ = inputs.next_id();
        for (const Clause& c : working_) required_.insert(c.id());
        simplify();
    }

    PropVerdict run() {
        for (;;) {
            if (out_of_budget()) return unknown_verdict();
            if (auto v = immediate_verdicts()) return *v;

            round_cscs_.clear();
            filtered_ = true;
            if (auto v = round_pass()) return *v;
            const std::size_t inserted = insert_collected();

            if (inserted > 0) {
                ++round_;
                simplify();
                continue;
            }

            if (cfg_.fallback_binary) {
                if (auto v = binary_round()) return *v;
                if (insert_collected() > 0) {
                    ++round_;
                    simplify();
                    continue;
                }
            }

            // saturated: hunt for a covering extension without the
            // efficiency filters before conceding
            round_cscs_.clear();
            filtered_ = false;
            if (auto v = round_pass()) return *v;
            return unknown_verdict_saturated();
        }
    }

private:
    // ---- verdict plumbing -------------------------------------------------

    std::optional<PropVerdict> immediate_verdicts() {
        for (const Clause& c : working_)
            if (c.empty()) {
                // an input empty clause refutes S by itself
                PropVerdict v;
                v.kind = VerdictKind::unsat;
                return v;
            }
        if (working_.empty()) return sat_verdict({});
        return std::nullopt;
    }

    PropVerdict sat_verdict(std::vector<Literal> core) {
        // complete with recorded pure literals, then default the rest
        for (const Literal& p : pure_record_)
            if (std::find(core.begin(), core.end(), p) == core.end()) core.push_back(p);
        std::set<std::string> assigned;
        for (const Literal& l : core) assigned.insert(l.predicate());
        for (const Clause& c : inputs_.clauses())
            for (const Literal& l : c.literals())
                if (!assigned.count(l.predicate())) {
                    core.push_back(Literal::pos(l.predicate()));
                    assigned.insert(l.predicate());
                }
        std::sort(core.begin(), core.end());

        for (const Clause& c : inputs_.clauses()) {
            bool sat = false;
            for (const Literal& l : c.literals())
                if (std::binary_search(core.begin(), core.end(), l)) {
                    sat = true;
                    break;
                }
            if (!sat) throw std::logic_error("prop engine: model failed final verification");
        }

        PropVerdict v;
        v.kind = VerdictKind::sat;
        v.model = std::move(core);
        return v;
    }

    PropVerdict unknown_verdict() {
        PropVerdict v;
        v.reason = budget_reason_.empty() ? "resource budget exhausted" : budget_reason_;
        return v;
    }

    PropVerdict unknown_verdict_saturated() {
        PropVerdict v;
        v.reason = "saturated without refutation or verified model";
        return v;
    }

    PropVerdict unsat_verdict(const CscResult& res) {
        const int id = record_step(res);
        PropVerdict v;
        v.kind = VerdictKind::unsat;
        v.proof = assemble_proof(id);
        return v;
    }

    // ---- bookkeeping ------------------------------------------------------

    // Coverage requirements start at the input clauses and shrink: a
    // clause deleted for a pure literal is discharged (the recorded
    // literal satisfies it), a subsumed clause hands its requirement to
    // the subsumer. Duplicate contents form one group; involving one copy
    // involves the set element.
    void refresh_targets() {
        coverage_groups_.clear();
        for (const Clause& c : working_) {
            if (!required_.count(c.id())) continue;
            bool grouped = false;
            for (auto& [rep, ids] : coverage_groups_)
                if (rep.same_literals(c)) {
                    ids.insert(c.id());
                    grouped = true;
                    break;
                }
            if (!grouped) coverage_groups_.push_back({c, {c.id()}});
        }
    }

    // Deletes clauses subsumed by another working clause; ties between
    // identical clauses keep the older id. A requirement held by a deleted
    // clause transfers to its subsumer, so a model of the required
    // survivors still satisfies every input.
    void subsumption_sweep() {
        while (!out_of_budget()) {
            bool removed = false;
            for (std::size_t i = 0; i < working_.size() && !removed; ++i) {
                for (std::size_t j = 0; j < working_.size(); ++j) {
                    if (i == j) continue;
                    const Clause& victim = working_[i];
                    const Clause& keeper = working_[j];
                    if (!subsumes_for_deletion(keeper, victim)) continue;
                    if (subsumes_for_deletion(victim, keeper) && victim.id() < keeper.id()) continue;
                    if (required_.erase(victim.id())) required_.insert(keeper.id());
                    working_.erase(working_.begin() + static_cast<long>(i));
                    removed = true;
                    break;
                }
            }
            if (!removed) return;
        }
    }

    // pure/tautology deletion and subsumption deletion enable each other;
    // iterate both to a joint fixpoint
    void simplify() {
        while (!out_of_budget()) {
            const std::size_t before = working_.size();
            ClauseSet tmp;
            for (const Clause& c : working_) tmp.add(c);
            PreprocessResult pre = preprocess(tmp);
            for (const Literal& p : pre.pure_literals) pure_record_.push_back(p);
            working_.assign(pre.clauses.clauses().begin(), pre.clauses.clauses().end());
            subsumption_sweep();
            if (working_.size() == before) break;
        }
        // requirements held by pure- or tautology-deleted clauses are
        // discharged, not transferred
        std::set<int> alive;
        for (const Clause& c : working_) alive.insert(c.id());
        for (auto it = required_.begin(); it != required_.end();)
            it = alive.count(*it) ? std::next(it) : required_.erase(it);
        refresh_targets();
    }

    bool out_of_budget() {
        if (cfg_.cancelled()) {
            budget_reason_ = "cancelled";
            return true;
        }
        if (extend_count_ > cfg_.max_steps) {
            budget_reason_ = "step limit reached";
            return true;
        }
        if (cfg_.time_limit.count() > 0 &&
            std::chrono::steady_clock::now() - start_ > cfg_.time_limit) {
            budget_reason_ = "time limit reached";
            return true;
        }
        return false;
    }

    int record_step(const CscResult& res) {
        const int id = next_id_++;
        DeductionStep step;
        step.id = id;
        step.csc = res.clause.with_id(id).with_origin(Clause::Origin::from_step(id));
        for (std::size_t i = 0; i < res.state.width(); ++i) {
            StepParticipant p;
            p.source_id = res.state.source_ids[i];
            p.sigma = res.state.sigma[i];
            p.main = res.state.entries[i].main;
            p.secondary = res.state.entries[i].secondary;
            p.absorbed = res.state.entries[i].absorbed;
            step.participants.push_back(std::move(p));
        }
        steps_.emplace(id, std::move(step));
        return id;
    }

    Proof assemble_proof(int final_id) {
        std::set<int> needed;
        std::vector<int> stack{final_id};
        while (!stack.empty()) {
            const int id = stack.back();
            stack.pop_back();
            if (!needed.insert(id).second) continue;
            const auto it = steps_.find(id);
            if (it == steps_.end()) continue; // input clause
            for (const StepParticipant& p : it->second.participants)
                if (steps_.count(p.source_id)) stack.push_back(p.source_id);
        }
        Proof proof;
        for (int id : needed)
            if (auto it = steps_.find(id); it != steps_.end()) proof.steps.push_back(it->second);
        std::sort(proof.steps.begin(), proof.steps.end(),
                  [](const DeductionStep& a, const DeductionStep& b) { return a.id < b.id; });
        return proof;
    }

    bool known_or_subsumed(const Clause& csc) const {
        for (const Clause& c : working_) {
            if (c.same_literals(csc)) return true;
            if (subsumes_for_deletion(c, csc)) return true;
        }
        return false;
    }

    std::size_t insert_collected() {
        std::size_t inserted = 0;
        for (const CscResult& res : round_cscs_) {
            if (out_of_budget()) break;
            if (is_tautology(res.clause) || known_or_subsumed(res.clause)) continue;
            const int id = record_step(res);
            working_.push_back(steps_.at(id).csc);
            ++inserted;
        }
        round_cscs_.clear();
        return inserted;
    }

    // ---- chain search -----------------------------------------------------

    std::vector<const Clause*> search_order() const {
        std::vector<const Clause*> order;
        for (const Clause& c : working_) order.push_back(&c);
        std::sort(order.begin(), order.end(), [](const Clause* a, const Clause* b) {
            if (a->size() != b->size()) return a->size() < b->size();
            return a->id() < b->id();
        });
        if (cfg_.start_rotation && !order.empty()) {
            const std::size_t shift =
                static_cast<std::size_t>((round_ + cfg_.seed) % order.size());
            std::rotate(order.begin(), order.begin() + shift, order.end());
        }
        return order;
    }

    std::optional<PropVerdict> round_pass() {
        const std::vector<const Clause*> order = search_order();
        for (const Clause* d1 : order) {
            for (const Literal& x1 : d1->literals()) {
                if (out_of_budget()) return unknown_verdict();
                auto v = dfs_pending(begin(*d1, x1));
                if (v) return v;
            }
        }
        return std::nullopt;
    }

    // last entry carries a pending main literal; try every extension
    std::optional<PropVerdict> dfs_pending(const ExtensionState& st) {
        if (out_of_budget()) return std::nullopt;
        const Literal target = complement(*st.pending_main());
        const std::size_t cap = filtered_ ? cfg_.max_width : sweep_width_cap();
        if (st.width() >= cap) return std::nullopt;

        for (const Clause& c : working_) {
            if (!c.contains(target)) continue;
            if (!filtered_ && repeated_participation(st, c, target)) continue;
            ++extend_count_;
            auto r = extend(st, c, target);
            if (r.status != ExtendStatus::ok) continue;

            bool degenerate = false;
            if (filtered_) {
                // no complementary pair may appear among the remaining
                // literals; such a closure is still inspected for a model
                // but the chain is not grown through it
                const std::vector<Literal> rem = r.state->remaining_literals();
                for (std::size_t a = 0; a < rem.size() && !degenerate; ++a)
                    for (std::size_t b = a + 1; b < rem.size(); ++b)
                        if (rem[a].is_complement_of(rem[b])) {
                            degenerate = true;
                            break;
                        }
            }

            auto v = degenerate ? inspect_close_only(*r.state) : dfs_entered(*r.state);
            if (v) return v;
        }
        return std::nullopt;
    }

    // an extension whose verification would blow the search-time tuple
    // budget is abandoned rather than closed unverified
    std::optional<CscResult> try_close(const ExtensionState& st) {
        try {
            return close(st, kSearchTupleCap);
        } catch (const ResourceLimitError&) {
            return std::nullopt;
        }
    }

    // a clause just entered without a selected main: close here, then try
    // growing through each admissible main literal
    std::optional<PropVerdict> dfs_entered(const ExtensionState& st) {
        if (out_of_budget()) return std::nullopt;

        const std::optional<CscResult> closed = try_close(st);
        if (!closed) return std::nullopt;
        const CscResult& res = *closed;
        if (observer_) observer_(res);
        if (res.clause.empty()) return unsat_verdict(res);
        if (covers_targets(res.state)) {
            if (auto v = try_model(res.state)) return v;
        }

        bool grew = false;
        for (const Literal& m : st.instances.back().literals()) {
            if (!admissible_main(st, m)) continue;
            auto sel = select_main(st, m);
            if (sel.status != ExtendStatus::ok) continue;
            const std::size_t before = extend_count_;
            auto v = dfs_pending(*sel.state);
            if (v) return v;
            grew = grew || extend_count_ > before;
        }
        if (!grew && filtered_) round_cscs_.push_back(res);
        return std::nullopt;
    }

    std::optional<PropVerdict> inspect_close_only(const ExtensionState& st) {
        const std::optional<CscResult> closed = try_close(st);
        if (!closed) return std::nullopt;
        const CscResult& res = *closed;
        if (observer_) observer_(res);
        if (res.clause.empty()) return unsat_verdict(res);
        if (covers_targets(res.state))
            if (auto v = try_model(res.state)) return v;
        return std::nullopt;
    }

    bool covers_targets(const ExtensionState& st) const {
        if (coverage_groups_.empty()) return false;
        const std::set<int> covered = st.covered_sources();
        for (const auto& [rep, ids] : coverage_groups_) {
            bool hit = false;
            for (int id : ids)
                if (covered.count(id)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    }

    std::optional<PropVerdict> try_model(const ExtensionState& closed) {
        ClauseSet covered;
        for (const auto& [rep, ids] : coverage_groups_) covered.add(rep);
        auto model = extract_model(closed, covered);
        if (!model) return std::nullopt;
        return sat_verdict(std::move(*model));
    }

    bool admissible_main(const ExtensionState& st, const Literal& m) const {
        if (!filtered_) return true;
        // distinct atoms along the main boundary
        for (std::size_t i = 0; i + 1 < st.width(); ++i)
            if (st.entries[i].main && st.entries[i].main->same_atom(m)) return false;
        // the main must not duplicate a remaining literal of another clause
        for (std::size_t i = 0; i + 1 < st.width(); ++i) {
            const auto plus = st.d_plus(i);
            if (std::find(plus.begin(), plus.end(), m) != plus.end()) return false;
        }
        return true;
    }

    /// The unrestricted sweep may revisit clauses; identical
    /// (clause, entry literal) participations add nothing and would loop.
    bool repeated_participation(const ExtensionState& st, const Clause& c,
                                const Literal& secondary) const {
        for (std::size_t i = 1; i < st.width(); ++i)
            if (st.source_ids[i] == c.id() && st.entries[i].secondary &&
                *st.entries[i].secondary == secondary)
                return true;
        return false;
    }

    std::size_t sweep_width_cap() const {
        std::set<std::string> atoms;
        for (const Clause& c : working_)
            for (const Literal& l : c.literals()) atoms.insert(l.predicate());
        return std::min<std::size_t>(cfg_.max_width,
                                     coverage_groups_.size() + 2 * atoms.size() + 2);
    }

    // two-clause contradictions restore completeness when the filtered
    // search stalls
    std::optional<PropVerdict> binary_round() {
        for (const Clause& c1 : working_) {
            for (const Literal& l : c1.literals()) {
                const Literal target = complement(l);
                for (const Clause& c2 : working_) {
                    if (!c2.contains(target)) continue;
                    if (out_of_budget()) return unknown_verdict();
                    ++extend_count_;
                    auto r = extend(begin(c1, l), c2, target);
                    if (r.status != ExtendStatus::ok) continue;
                    const std::optional<CscResult> closed = try_close(*r.state);
                    if (!closed) continue;
                    if (observer_) observer_(*closed);
                    if (closed->clause.empty()) return unsat_verdict(*closed);
                    round_cscs_.push_back(*closed);
                }
            }
        }
        return std::nullopt;
    }

    const ClauseSet& inputs_;
    StrategyConfig cfg_;
    CscObserver observer_;

    std::vector<Clause> working_;
    std::vector<Literal> pure_record_;
    std::vector<std::pair<Clause, std::set<int>>> coverage_groups_;
    std::set<int> required_;
    std::map<int, DeductionStep> steps_;
    std::vector<CscResult> round_cscs_;

    std::chrono::steady_clock::time_point start_;
    std::size_t extend_count_ = 0;
    std::uint64_t round_ = 0;
    int next_id_ = 1;
    bool filtered_ = true;
    std::string budget_reason_;
};

} // namespace detail

/**
 * The unified propositional procedure: preprocess, saturate with
 * contradiction separation, report UNSAT with a refutation when the empty
 * clause appears, SAT with a verified model when a covering extension
 * yields one (or preprocessing empties the set), UNKNOWN only at a
 * resource bound.
 */
inline PropVerdict saturate(const ClauseSet& s, const StrategyConfig& cfg = {},
                            CscObserver observer = {}) {
    for (const Clause& c : s.clauses())
        for (const Literal& l : c.literals())
            if (!l.args().empty())
                throw std::invalid_argument("saturate: propositional input required");
    detail::PropSearch search(s, cfg, std::move(observer));
    return search.run();
}

} // namespace cse

#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cse/engine/proof.hpp"
#include "cse/engine/prop_engine.hpp" // CscObserver
#include "cse/engine/strategy.hpp"
#include "cse/kernel/extension.hpp"
#include "cse/logic/clause_ops.hpp"
#include "cse/logic/clause_set.hpp"

namespace cse {

/**
 * First-order preprocessing: delete tautologies, delete subsumed clauses
 * (the subsumer stays; of two variants the older id stays), then rename
 * the survivors apart.
 */
inline ClauseSet preprocess_fol(const ClauseSet& s) {
    std::vector<Clause> working;
    for (const Clause& c : s.clauses())
        if (!is_tautology(c)) working.push_back(c);

    std::vector<Clause> kept;
    for (const Clause& c : working) {
        bool drop = false;
        for (const Clause& other : working) {
            if (other.id() == c.id()) continue;
            if (!subsumes_for_deletion(other, c)) continue;
            if (subsumes_for_deletion(c, other) && c.id() < other.id()) continue;
            drop = true;
            break;
        }
        if (!drop) kept.push_back(c);
    }

    ClauseSet out;
    int counter = 1;
    for (const Clause& c : kept) out.add(rename_clause(c, counter).first);
    return out;
}

namespace detail {

/// Pairwise condition on a candidate witness family: literals sharing a
/// predicate with opposite polarity must both be ground with different
/// argument tuples. Returns the construction case, or absent.
inline std::optional<InterpretationSketch::Case>
family_coherent(const std::vector<Literal>& family) {
    bool has_ground_complement = false;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Literal& a = family[i];
            const Literal& b = family[j];
            if (a.predicate() != b.predicate() || a.positive() == b.positive()) continue;
            if (!a.is_ground() || !b.is_ground()) return std::nullopt;
            if (a.args() == b.args()) return std::nullopt;
            has_ground_complement = true;
        }
    return has_ground_complement ? InterpretationSketch::Case::ground_distinct
                                 : InterpretationSketch::Case::disjoint_predicates;
}

inline void collect_ground_subterms(const Term& t, std::set<Term>& out) {
    if (!t.is_ground()) {
        for (const Term& a : t.args()) collect_ground_subterms(a, out);
        return;
    }
    out.insert(t);
    for (const Term& a : t.args()) collect_ground_subterms(a, out);
}

inline Term designated_element(const ClauseSet& symbols_from) {
    // a constant name not colliding with any declared function symbol
    const auto& fns = symbols_from.function_arities();
    std::string name = "e0";
    for (int i = 0; fns.count(name); ++i) name = "e" + std::to_string(i + 1);
    return Term::constant(name);
}

inline Term eval_term(const Term& t, const std::map<std::string, Term>& env,
                      const std::set<Term>& domain, const Term& fallback) {
    if (t.is_variable()) return env.at(t.name());
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(eval_term(a, env, domain, fallback));
    Term candidate = Term::function(t.name(), std::move(args));
    return domain.count(candidate) ? candidate : fallback;
}

inline bool eval_literal(const Literal& l, const std::map<std::string, Term>& env,
                         const InterpretationSketch& sketch, const std::set<Term>& domain,
                         const Term& fallback) {
    std::vector<Term> tuple;
    tuple.reserve(l.args().size());
    for (const Term& a : l.args()) tuple.push_back(eval_term(a, env, domain, fallback));
    bool value = true;
    if (auto it = sketch.truth.find(l.predicate()); it != sketch.truth.end()) {
        value = it->second.default_value;
        for (const auto& [args, v] : it->second.exceptions)
            if (args == tuple) value = v;
    }
    return value == l.positive();
}

} // namespace detail

/**
 * Builds the finite interpretation described by the sketch and verifies,
 * by evaluation over every assignment of the selected literals' variables
 * into the domain, that each selected literal holds. A sketch produced by
 * check_t1 must verify; failure here aborts rather than report SAT.
 */
inline InterpretationSketch build_model(InterpretationSketch sketch) {
    std::vector<Literal> family;
    for (const auto& [id, lit] : sketch.selected) family.push_back(lit);

    ClauseSet symbols;
    if (!family.empty()) symbols.add(Clause(family));
    const Term designated = detail::designated_element(symbols);

    std::set<Term> domain;
    if (sketch.construction == InterpretationSketch::Case::ground_distinct)
        for (const Literal& l : family)
            for (const Term& a : l.args()) detail::collect_ground_subterms(a, domain);
    domain.insert(designated);

    sketch.truth.clear();
    for (const Literal& l : family) {
        auto [it, fresh] = sketch.truth.emplace(l.predicate(),
                                                InterpretationSketch::PredicateAssignment{});
        if (fresh) it->second.default_value = l.positive();
        if (!l.is_ground()) it->second.default_value = l.positive();
    }
    if (sketch.construction == InterpretationSketch::Case::ground_distinct)
        for (const Literal& l : family) {
            if (!l.is_ground()) continue;
            auto& pa = sketch.truth.at(l.predicate());
            bool duplicate = false;
            for (auto& [args, v] : pa.exceptions)
                if (args == l.args()) {
                    if (v != l.positive())
                        throw std::logic_error("build_model: conflicting ground exceptions");
                    duplicate = true;
                }
            if (!duplicate) pa.exceptions.emplace_back(l.args(), l.positive());
        }

    sketch.domain.assign(domain.begin(), domain.end());

    // universal closure over the finite domain
    for (const Literal& l : family) {
        const std::set<std::string> vars = l.variables();
        std::vector<std::string> names(vars.begin(), vars.end());
        std::vector<std::size_t> pick(names.size(), 0);
        const std::vector<Term> elems(domain.begin(), domain.end());
        for (;;) {
            std::map<std::string, Term> env;
            for (std::size_t i = 0; i < names.size(); ++i) env.emplace(names[i], elems[pick[i]]);
            if (!detail::eval_literal(l, env, sketch, domain, designated))
                throw std::logic_error("build_model: selected literal is false under the "
                                       "constructed interpretation");
            std::size_t level = names.size();
            bool done = names.empty();
            while (level > 0) {
                --level;
                if (++pick[level] < elems.size()) break;
                pick[level] = 0;
                if (level == 0) done = true;
            }
            if (done) break;
        }
    }

    sketch.verified = true;
    return sketch;
}

/**
 * Satisfiability condition over a closed extension: every clause of s must
 * participate, and some above-boundary literal y in position j0 must form,
 * together with the later secondary literals and the earlier mains, a
 * selection whose complementary-predicate pairs are all ground with
 * distinct argument tuples. The selection is taken back in the source
 * clauses' own literals: the interpretation must make the universal
 * closure of each selected literal true, so an instantiated boundary
 * literal only witnesses its pre-instantiation original. Participations of
 * the same source clause must agree on the selected literal.
 */
inline std::optional<InterpretationSketch> check_t1(const ExtensionState& state,
                                                    const ClauseSet& s) {
    const std::size_t k = state.width();
    if (k < 2) return std::nullopt;

    const std::set<int> covered = state.covered_sources();
    for (const Clause& c : s.clauses())
        if (!covered.count(c.id())) return std::nullopt;

    for (std::size_t j0 = 1; j0 <= k; ++j0) {
        for (const Literal& y : state.d_plus(j0 - 1)) {
            std::map<int, Literal> selected; // source clause id -> original literal
            bool consistent = true;
            for (std::size_t i = 0; i < k && consistent; ++i) {
                const Clause* source = s.find(state.source_ids[i]);
                if (!source) continue; // derived participant: no selection duty

                const std::size_t pos = i + 1;
                std::optional<Literal> instance_pick;
                if (pos < j0) instance_pick = state.entries[i].main;
                else if (pos == j0) instance_pick = y;
                else instance_pick = state.entries[i].secondary;
                if (!instance_pick) {
                    consistent = false;
                    break;
                }

                std::optional<Literal> original;
                for (const Literal& l0 : source->literals())
                    if (apply(state.sigma[i], l0) == *instance_pick) {
                        original = l0;
                        break;
                    }
                if (!original) {
                    consistent = false;
                    break;
                }
                auto [it, fresh] = selected.emplace(source->id(), *original);
                if (!fresh && it->second != *original) consistent = false;
            }
            if (!consistent || selected.size() != s.size()) continue;

            std::vector<Literal> family;
            for (const auto& [id, lit] : selected) family.push_back(lit);
            const auto construction = detail::family_coherent(family);
            if (!construction) continue;

            InterpretationSketch sketch;
            sketch.construction = *construction;
            sketch.selected = std::move(selected);
            return sketch;
        }
    }
    return std::nullopt;
}

namespace detail {

class FolSearch {
public:
    static constexpr std::size_t kSearchTupleCap = 200'000;

    FolSearch(const ClauseSet& inputs, const StrategyConfig& cfg, CscObserver observer)
        : inputs_(inputs), cfg_(cfg), observer_(std::move(observer)) {
        start_ = std::chrono::steady_clock::now();

        // tautology and subsumption deletion over the raw inputs, keeping
        // per-clause renamings so recorded proofs replay from the caller's
        // clauses
        std::vector<Clause> survivors;
        for (const Clause& c : inputs.clauses())
            if (!is_tautology(c)) survivors.push_back(c);
        std::vector<Clause> kept;
        for (const Clause& c : survivors) {
            bool drop = false;
            for (const Clause& other : survivors) {
                if (other.id() == c.id()) continue;
                if (!subsumes_for_deletion(other, c)) continue;
                if (subsumes_for_deletion(c, other) && c.id() < other.id()) continue;
                drop = true;
                break;
            }
            if (!drop) kept.push_back(c);
        }
        for (const Clause& c : kept) {
            auto [renamed, rho] = rename_clause(c, var_counter_);
            working_.push_back(renamed);
            input_renaming_.emplace(c.id(), std::move(rho));
        }
        next_id_ = inputs.next_id();
        for (const Clause& c : working_) required_.insert(c.id());
        // chains much longer than the input set only inflate verification
        // cost; derived clauses do not raise the cap
        width_cap_ = std::min<std::size_t>(cfg_.max_contradiction_width, working_.size() + 6);
        refresh_targets();
    }

    FolVerdict run() {
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

            filtered_ = false;
            round_cscs_.clear();
            if (auto v = round_pass()) return *v;
            if (auto v = direct_selection()) return *v;
            return unknown_verdict_saturated();
        }
    }

private:
    // ---- verdicts ----------------------------------------------------------

    std::optional<FolVerdict> immediate_verdicts() {
        for (const Clause& c : working_)
            if (c.empty()) {
                FolVerdict v;
                v.kind = VerdictKind::unsat;
                return v;
            }
        if (working_.empty()) {
            // everything was a tautology or subsumed away to nothing
            InterpretationSketch sketch;
            return sat_verdict(std::move(sketch));
        }
        return std::nullopt;
    }

    FolVerdict sat_verdict(InterpretationSketch sketch) {
        FolVerdict v;
        v.kind = VerdictKind::sat;
        v.witness = build_model(std::move(sketch)); // aborts rather than emit a bad witness
        return v;
    }

    FolVerdict unsat_verdict(const CscResult& res) {
        const int id = record_step(res);
        FolVerdict v;
        v.kind = VerdictKind::unsat;
        v.proof = assemble_proof(id);
        return v;
    }

    FolVerdict unknown_verdict() {
        FolVerdict v;
        v.reason = budget_reason_.empty() ? "resource budget exhausted" : budget_reason_;
        return v;
    }

    FolVerdict unknown_verdict_saturated() {
        FolVerdict v;
        v.reason = "saturated without refutation or verified witness";
        return v;
    }

    // ---- bookkeeping -------------------------------------------------------

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

    void simplify() {
        while (!out_of_budget()) {
            bool removed = false;
            // tautologies first
            for (std::size_t i = 0; i < working_.size(); ++i)
                if (is_tautology(working_[i])) {
                    required_.erase(working_[i].id());
                    working_.erase(working_.begin() + static_cast<long>(i));
                    removed = true;
                    break;
                }
            if (!removed) {
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
            }
            if (!removed) break;
        }
        refresh_targets();
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
            // input participants replay from the caller's clause, so fold
            // the initial renaming in front of the recorded substitution
            if (auto it = input_renaming_.find(p.source_id); it != input_renaming_.end())
                p.sigma = compose(it->second, p.sigma);
            // only the source clause's own variables matter for the replay;
            // sweep bindings picked up for other clauses are dropped
            const Clause* source = inputs_.find(p.source_id);
            if (!source)
                if (auto it = steps_.find(p.source_id); it != steps_.end())
                    source = &it->second.csc;
            if (source) {
                const auto vars = source->variables();
                p.sigma =
                    p.sigma.restricted([&](const std::string& v) { return vars.count(v) > 0; });
            }
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
            if (it == steps_.end()) continue;
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

    // ---- search ------------------------------------------------------------

    static std::size_t clause_rank(const Clause& c) {
        return c.variables().size() * 100 + c.size();
    }

    std::vector<const Clause*> search_order() const {
        std::vector<const Clause*> order;
        for (const Clause& c : working_) order.push_back(&c);
        std::sort(order.begin(), order.end(), [](const Clause* a, const Clause* b) {
            const std::size_t ra = clause_rank(*a), rb = clause_rank(*b);
            if (ra != rb) return ra < rb;
            return a->id() < b->id();
        });
        if (cfg_.start_rotation && !order.empty()) {
            const std::size_t shift =
                static_cast<std::size_t>((round_ + cfg_.seed) % order.size());
            std::rotate(order.begin(), order.begin() + shift, order.end());
        }
        return order;
    }

    std::optional<FolVerdict> round_pass() {
        for (const Clause* d1 : search_order()) {
            for (const Variant& variant : variants_of(*d1)) {
                for (const Literal& x1 : variant.clause.literals()) {
                    if (out_of_budget()) return unknown_verdict();
                    ExtensionState st = begin(variant.clause, x1);
                    st.sigma[0] = variant.pre; // still maps the working clause
                    auto v = dfs_pending(st);
                    if (v) return v;
                }
            }
        }
        return std::nullopt;
    }

    struct Candidate {
        const Clause* clause;
        Literal literal;
        std::size_t rank;
    };

    /// A clause together with a substitution mapping its working-set
    /// original onto it. Identity for the clause itself; factors carry the
    /// self-unifier that merged literals. Factors participate like any
    /// instance (a participant substitution need not be a most general
    /// unifier), and without them refutations needing a literal merge are
    /// unreachable.
    struct Variant {
        Clause clause;
        Substitution pre;
    };

    std::vector<Variant> variants_of(const Clause& c) const {
        std::vector<Variant> out;
        out.push_back({c, Substitution::identity()});
        if (c.size() > 8) return out; // wide clauses: factor closure explodes
        for (std::size_t next = 0; next < out.size() && out.size() < 16; ++next) {
            const Clause cur = out[next].clause;
            const Substitution sig = out[next].pre;
            const auto& lits = cur.literals();
            for (std::size_t i = 0; i < lits.size(); ++i)
                for (std::size_t j = i + 1; j < lits.size(); ++j) {
                    if (lits[i].positive() != lits[j].positive() ||
                        lits[i].predicate() != lits[j].predicate())
                        continue;
                    auto mgu = unify_term_lists(lits[i].args(), lits[j].args());
                    if (!mgu) continue;
                    Clause factored = apply(*mgu, cur);
                    if (factored.size() >= cur.size()) continue;
                    bool known = false;
                    for (const Variant& v : out)
                        if (v.clause.same_literals(factored)) {
                            known = true;
                            break;
                        }
                    if (known) continue;
                    out.push_back({std::move(factored), compose(sig, *mgu)});
                }
        }
        return out;
    }

    std::vector<Candidate> candidates_for(const Literal& pending) const {
        std::vector<Candidate> out;
        for (const Clause& c : working_)
            for (const Literal& l : c.literals()) {
                if (l.predicate() != pending.predicate() || l.positive() == pending.positive())
                    continue;
                // ground literals first, then small clauses
                const std::size_t rank = (l.is_ground() ? 0 : 1000) + clause_rank(c);
                out.push_back({&c, l, rank});
            }
        std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
            if (a.rank != b.rank) return a.rank < b.rank;
            if (a.clause->id() != b.clause->id()) return a.clause->id() < b.clause->id();
            return a.literal < b.literal;
        });
        return out;
    }

    std::size_t width_cap() const { return width_cap_; }

    bool too_deep(const ExtensionState& st) const {
        for (const Clause& inst : st.instances)
            if (inst.max_term_depth() > cfg_.max_term_depth) return true;
        return false;
    }

    std::optional<FolVerdict> dfs_pending(const ExtensionState& st) {
        if (out_of_budget()) return std::nullopt;
        if (st.width() >= width_cap()) return std::nullopt;
        const Literal pending = *st.pending_main();

        for (const Candidate& cand : candidates_for(pending)) {
            const int saved_counter = var_counter_;
            auto [renamed, renaming] = rename_clause(*cand.clause, var_counter_);
            const Literal renamed_lit = apply(renaming, cand.literal);
            bool advanced = false;
            for (const Variant& variant : variants_of(renamed)) {
                const Substitution pre = compose(renaming, variant.pre);
                const Literal y = apply(variant.pre, renamed_lit);
                auto theta = unify_complementary(pending, y);
                if (!theta) continue;
                if (!filtered_ &&
                    repeated_participation(st, *cand.clause, apply(theta->second, y)))
                    continue;
                ++extend_count_;
                auto r = extend(st, variant.clause, y, *theta);
                if (r.status != ExtendStatus::ok || too_deep(*r.state)) continue;

                bool degenerate = false;
                if (filtered_) {
                    const std::vector<Literal> rem = r.state->remaining_literals();
                    for (std::size_t a = 0; a < rem.size() && !degenerate; ++a)
                        for (std::size_t b = a + 1; b < rem.size(); ++b)
                            if (rem[a].is_complement_of(rem[b])) {
                                degenerate = true;
                                break;
                            }
                }

                advanced = true;
                // the recorded sigma maps the working clause, not the
                // renamed (and possibly factored) copy, onto the instance
                auto v = degenerate ? inspect_close_only(*r.state, pre)
                                    : dfs_entered(*r.state, pre);
                if (v) return v;
            }
            if (!advanced) var_counter_ = saved_counter;
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

    std::optional<FolVerdict> dfs_entered(const ExtensionState& raw, const Substitution& renaming) {
        if (out_of_budget()) return std::nullopt;

        ExtensionState st = raw;
        st.sigma.back() = compose(renaming, st.sigma.back());

        const std::optional<CscResult> closed = try_close(st);
        if (!closed) return std::nullopt;
        const CscResult& res = *closed;
        if (observer_) observer_(res);
        if (res.clause.empty()) return unsat_verdict(res);
        if (covers_targets(res.state))
            if (auto v = try_witness(res.state)) return v;

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

    std::optional<FolVerdict> inspect_close_only(const ExtensionState& raw,
                                                 const Substitution& renaming) {
        ExtensionState st = raw;
        st.sigma.back() = compose(renaming, st.sigma.back());
        const std::optional<CscResult> closed = try_close(st);
        if (!closed) return std::nullopt;
        const CscResult& res = *closed;
        if (observer_) observer_(res);
        if (res.clause.empty()) return unsat_verdict(res);
        if (covers_targets(res.state))
            if (auto v = try_witness(res.state)) return v;
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

    std::optional<FolVerdict> try_witness(const ExtensionState& closed) {
        ClauseSet covered;
        for (const auto& [rep, ids] : coverage_groups_) covered.add(rep);
        auto sketch = check_t1(closed, covered);
        if (!sketch) return std::nullopt;
        return sat_verdict(std::move(*sketch));
    }

    bool admissible_main(const ExtensionState& st, const Literal& m) const {
        if (!filtered_) return true;
        for (std::size_t i = 0; i + 1 < st.width(); ++i)
            if (st.entries[i].main && st.entries[i].main->same_atom(m)) return false;
        for (std::size_t i = 0; i + 1 < st.width(); ++i) {
            const auto plus = st.d_plus(i);
            if (std::find(plus.begin(), plus.end(), m) != plus.end()) return false;
        }
        return true;
    }

    bool repeated_participation(const ExtensionState& st, const Clause& source,
                                const Literal& secondary_instance) const {
        for (std::size_t i = 1; i < st.width(); ++i)
            if (st.source_ids[i] == source.id() && st.entries[i].secondary &&
                *st.entries[i].secondary == secondary_instance)
                return true;
        return false;
    }

    std::optional<FolVerdict> binary_round() {
        for (const Clause& c1 : working_) {
            for (const Variant& left : variants_of(c1)) {
                for (const Literal& l1 : left.clause.literals()) {
                    for (const Clause& c2 : working_) {
                        for (const Literal& l2 : c2.literals()) {
                            if (l2.predicate() != l1.predicate() ||
                                l2.positive() == l1.positive())
                                continue;
                            if (out_of_budget()) return unknown_verdict();
                            const int saved_counter = var_counter_;
                            auto [renamed, renaming] = rename_clause(c2, var_counter_);
                            for (const Variant& right : variants_of(renamed)) {
                                const Literal y = apply(right.pre, apply(renaming, l2));
                                auto theta = unify_complementary(l1, y);
                                if (!theta) continue;
                                ++extend_count_;
                                ExtensionState start = begin(left.clause, l1);
                                start.sigma[0] = left.pre;
                                auto r = extend(start, right.clause, y, *theta);
                                if (r.status != ExtendStatus::ok || too_deep(*r.state)) continue;
                                ExtensionState st = *r.state;
                                st.sigma.back() =
                                    compose(compose(renaming, right.pre), st.sigma.back());
                                const std::optional<CscResult> closed = try_close(st);
                                if (!closed) continue;
                                if (observer_) observer_(*closed);
                                if (closed->clause.empty()) return unsat_verdict(*closed);
                                round_cscs_.push_back(*closed);
                            }
                            var_counter_ = saved_counter;
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    /// Satisfiability by direct literal selection, for sets where no
    /// complementary pair unifies at all (no extension can begin). One
    /// literal per distinct clause content, pairwise coherent.
    std::optional<FolVerdict> direct_selection() {
        std::vector<const Clause*> reps;
        for (const auto& [rep, ids] : coverage_groups_) reps.push_back(&rep);
        if (reps.empty()) return std::nullopt;
        std::vector<Literal> picked;
        if (!select_rec(reps, 0, picked)) return std::nullopt;

        InterpretationSketch sketch;
        const auto construction = family_coherent(picked);
        if (!construction) return std::nullopt;
        sketch.construction = *construction;
        std::size_t idx = 0;
        for (const auto& [rep, ids] : coverage_groups_) {
            for (int id : ids) sketch.selected.emplace(id, picked[idx]);
            ++idx;
        }
        return sat_verdict(std::move(sketch));
    }

    bool select_rec(const std::vector<const Clause*>& reps, std::size_t idx,
                    std::vector<Literal>& picked) {
        if (idx == reps.size()) return true;
        for (const Literal& l : reps[idx]->literals()) {
            bool ok = true;
            for (const Literal& prev : picked) {
                if (prev.predicate() != l.predicate() || prev.positive() == l.positive()) continue;
                if (!prev.is_ground() || !l.is_ground() || prev.args() == l.args()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            picked.push_back(l);
            if (select_rec(reps, idx + 1, picked)) return true;
            picked.pop_back();
        }
        return false;
    }

    const ClauseSet& inputs_;
    StrategyConfig cfg_;
    CscObserver observer_;

    std::vector<Clause> working_;
    std::map<int, Substitution> input_renaming_;
    std::set<int> required_;
    std::map<int, DeductionStep> steps_;
    std::vector<CscResult> round_cscs_;
    std::vector<std::pair<Clause, std::set<int>>> coverage_groups_;

    std::chrono::steady_clock::time_point start_;
    std::size_t extend_count_ = 0;
    std::uint64_t round_ = 0;
    int next_id_ = 1;
    int var_counter_ = 1;
    std::size_t width_cap_ = 8;
    bool filtered_ = true;
    std::string budget_reason_;
};

} // namespace detail

/**
 * The unified first-order procedure: preprocess, saturate with
 * contradiction separation under unification, UNSAT on the empty clause,
 * SAT when a coverage condition admits a verified finite interpretation,
 * UNKNOWN at a resource bound (first-order satisfiability is only
 * semi-decidable on the other side; SAT detection is best-effort).
 */
inline FolVerdict saturate_fol(const ClauseSet& s, const StrategyConfig& cfg = {},
                               CscObserver observer = {}) {
    detail::FolSearch search(s, cfg, std::move(observer));
    return search.run();
}

} // namespace cse

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cse/kernel/standard_contradiction.hpp"
#include "cse/logic/clause.hpp"
#include "cse/logic/substitution.hpp"
#include "cse/logic/unify.hpp"

namespace cse {

/**
 * One participating clause in an in-progress extension.
 *
 * `main` is the literal this clause was (or will be) extended on; it is
 * selected after the clause enters and stays unset on the final clause.
 * `secondary` is the instantiated literal that admitted the clause: the
 * complement of the previous clause's main literal. `absorbed` holds the
 * clause's literals that equal the complement of some main literal at
 * least two positions earlier.
 */
struct BoundaryEntry {
    std::size_t clause_index = 0;
    std::optional<Literal> main;
    std::optional<Literal> secondary;
    std::vector<Literal> absorbed;
};

/**
 * Immutable in-progress contradiction under construction. Every operation
 * returns a fresh value; states may be shared freely across attempts.
 *
 * Invariants maintained by begin/select_main/extend/close:
 *  - instances[i] is the source clause under the accumulated sigma[i];
 *  - secondary of entry i+1 is the complement of main of entry i;
 *  - no main literal is the complement of another main literal;
 *  - each entry's negative part is a nonempty subset of its instance.
 */
class ExtensionState {
public:
    std::vector<BoundaryEntry> entries;
    std::vector<Clause> instances; // current instantiated participating clauses
    std::vector<Substitution> sigma; // accumulated substitution per participation
    std::vector<int> source_ids; // ids in the ambient set; repeats allowed

    std::size_t width() const { return entries.size(); }

    const std::optional<Literal>& pending_main() const { return entries.back().main; }

    /// The negative part of entry i: selected main, admitting secondary,
    /// and absorbed literals. close() strips a never-extended main from the
    /// final entry before using this.
    std::vector<Literal> d_minus(std::size_t i) const {
        std::vector<Literal> part;
        const BoundaryEntry& e = entries[i];
        if (e.main) part.push_back(*e.main);
        if (e.secondary) part.push_back(*e.secondary);
        for (const Literal& l : e.absorbed)
            if (std::find(part.begin(), part.end(), l) == part.end()) part.push_back(l);
        return part;
    }

    /// The literals of entry i above the boundary (instance minus d_minus).
    std::vector<Literal> d_plus(std::size_t i) const {
        const std::vector<Literal> minus = d_minus(i);
        std::vector<Literal> plus;
        for (const Literal& l : instances[i].literals())
            if (std::find(minus.begin(), minus.end(), l) == minus.end()) plus.push_back(l);
        return plus;
    }

    /// Union of the positive parts if the extension were closed now: the
    /// final entry's pending main, having no complement below it, counts as
    /// remaining rather than boundary.
    std::vector<Literal> remaining_literals() const {
        std::vector<Literal> all;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::vector<Literal> plus = d_plus(i);
            if (i + 1 == entries.size() && entries[i].main &&
                std::find(plus.begin(), plus.end(), *entries[i].main) == plus.end())
                plus.push_back(*entries[i].main);
            for (const Literal& l : plus)
                if (std::find(all.begin(), all.end(), l) == all.end()) all.push_back(l);
        }
        return all;
    }

    std::set<int> covered_sources() const {
        return std::set<int>(source_ids.begin(), source_ids.end());
    }

    std::set<std::string> instance_variables() const {
        std::set<std::string> vs;
        for (const Clause& c : instances)
            for (const Literal& l : c.literals()) l.collect_variables(vs);
        return vs;
    }
};

enum class ExtendStatus {
    ok,
    no_unifier,         // the offered pair is not complementary under the thetas
    boundary_violation, // a boundary invariant would break (e.g. main atoms collide)
};

struct ExtendResult {
    ExtendStatus status = ExtendStatus::ok;
    std::optional<ExtensionState> state;

    explicit operator bool() const { return status == ExtendStatus::ok; }
};

/**
 * The finished product of an extension: the contradiction separation
 * clause together with the closed state as provenance.
 */
struct CscResult {
    Clause clause;
    ExtensionState state;
};

namespace detail {

/// Greedy absorption: a literal of entry i equal to the complement of the
/// main literal of some entry h <= i-2 moves below the boundary.
inline void recompute_absorbed(ExtensionState& st) {
    for (std::size_t i = 0; i < st.entries.size(); ++i) {
        BoundaryEntry& e = st.entries[i];
        e.absorbed.clear();
        if (i < 2) continue;
        for (const Literal& l : st.instances[i].literals()) {
            if (e.secondary && l == *e.secondary) continue;
            if (e.main && l == *e.main) continue;
            for (std::size_t h = 0; h + 2 <= i; ++h) {
                const auto& main_h = st.entries[h].main;
                if (main_h && l.is_complement_of(*main_h)) {
                    e.absorbed.push_back(l);
                    break;
                }
            }
        }
    }
}

/// No main literal may be the complement of another: the selection rule
/// excludes exactly the earlier secondary-boundary values. Equal mains are
/// allowed; a clause re-entering through a fresh route may extend on a
/// literal an earlier clause already extended on.
inline bool mains_compatible(const ExtensionState& st) {
    for (std::size_t i = 0; i < st.entries.size(); ++i) {
        if (!st.entries[i].main) continue;
        for (std::size_t j = i + 1; j < st.entries.size(); ++j) {
            if (!st.entries[j].main) continue;
            if (st.entries[i].main->is_complement_of(*st.entries[j].main)) return false;
        }
    }
    return true;
}

/// The chain shape itself: each secondary is the complement of the
/// previous main. A sweep can never break this when thetas come from
/// composed most general unifiers; a violation is an internal bug.
inline void assert_chain_intact(const ExtensionState& st) {
    for (std::size_t i = 1; i < st.entries.size(); ++i) {
        const auto& prev_main = st.entries[i - 1].main;
        const auto& sec = st.entries[i].secondary;
        if (!prev_main || !sec || !sec->is_complement_of(*prev_main))
            throw std::logic_error("extension sweep broke a boundary complementary pair");
    }
}

} // namespace detail

/// Opens an extension on clause d1 with x1 as its main literal.
inline ExtensionState begin(const Clause& d1, const Literal& x1) {
    if (!d1.contains(x1))
        throw std::invalid_argument("begin: selected literal not in clause");
    ExtensionState st;
    st.entries.push_back(BoundaryEntry{0, x1, std::nullopt, {}});
    st.instances.push_back(d1);
    st.sigma.push_back(Substitution::identity());
    st.source_ids.push_back(d1.id());
    return st;
}

/**
 * Selects the main literal of the last entry. The choice is the caller's
 * (engine strategy); the kernel only rejects literals that are not free in
 * the entry or whose atom collides with an earlier main literal.
 */
inline ExtendResult select_main(const ExtensionState& st, const Literal& main) {
    if (st.entries.empty()) throw std::invalid_argument("select_main: empty state");
    const BoundaryEntry& last = st.entries.back();
    if (!st.instances.back().contains(main))
        throw std::invalid_argument("select_main: literal not in the last instance");
    if ((last.secondary && main == *last.secondary) ||
        std::find(last.absorbed.begin(), last.absorbed.end(), main) != last.absorbed.end())
        return {ExtendStatus::boundary_violation, std::nullopt};

    ExtensionState next = st;
    next.entries.back().main = main;
    if (!detail::mains_compatible(next)) return {ExtendStatus::boundary_violation, std::nullopt};
    detail::recompute_absorbed(next);
    return {ExtendStatus::ok, std::move(next)};
}

/**
 * Extends the contradiction with `next_clause` through its literal `y`,
 * which must become the complement of the pending main literal under
 * `theta`. theta.first is swept over every prior participating clause and
 * boundary literal (the reverse substitution); theta.second instantiates
 * the incoming clause. Duplicate literals merge per clause afterwards.
 *
 * In first-order mode the incoming clause must be renamed apart from all
 * clauses already in the state.
 */
inline ExtendResult extend(const ExtensionState& st, const Clause& next_clause, const Literal& y,
                           const std::pair<Substitution, Substitution>& theta) {
    if (st.entries.empty()) throw std::invalid_argument("extend: empty state");
    if (!st.pending_main())
        throw std::invalid_argument("extend: last entry has no selected main literal");
    if (!next_clause.contains(y))
        throw std::invalid_argument("extend: y not in the incoming clause");
    {
        const std::set<std::string> state_vars = st.instance_variables();
        for (const std::string& v : next_clause.variables())
            if (state_vars.count(v))
                throw std::invalid_argument("extend: incoming clause shares variable " + v);
    }

    const Literal pending = apply(theta.first, *st.pending_main());
    const Literal incoming = apply(theta.second, y);
    if (!pending.is_complement_of(incoming)) return {ExtendStatus::no_unifier, std::nullopt};

    ExtensionState out = st;
    for (std::size_t i = 0; i < out.instances.size(); ++i) {
        out.instances[i] = apply(theta.first, out.instances[i]);
        out.sigma[i] = compose(out.sigma[i], theta.first);
        BoundaryEntry& e = out.entries[i];
        if (e.main) e.main = apply(theta.first, *e.main);
        if (e.secondary) e.secondary = apply(theta.first, *e.secondary);
    }
    out.entries.push_back(
        BoundaryEntry{out.entries.size(), std::nullopt, incoming, {}});
    out.instances.push_back(apply(theta.second, next_clause));
    out.sigma.push_back(theta.second);
    out.source_ids.push_back(next_clause.id());

    detail::assert_chain_intact(out);
    if (!detail::mains_compatible(out)) return {ExtendStatus::boundary_violation, std::nullopt};
    detail::recompute_absorbed(out);
    return {ExtendStatus::ok, std::move(out)};
}

/// Propositional extension: both substitutions are the identity.
inline ExtendResult extend(const ExtensionState& st, const Clause& next_clause, const Literal& y) {
    return extend(st, next_clause, y, {Substitution::identity(), Substitution::identity()});
}

/**
 * Closes the extension. The last clause keeps only its secondary and
 * absorbed literals below the boundary; a main literal selected on it but
 * never extended goes back above. The negative parts are re-verified as a
 * standard contradiction by Cartesian enumeration before the separation
 * clause is emitted; a failure there is an internal soundness bug, so it
 * aborts rather than emit the clause.
 */
inline CscResult close(const ExtensionState& st, std::size_t max_tuples = kDefaultTupleCap) {
    if (st.entries.size() < 2) throw std::invalid_argument("close: need at least two entries");
    for (std::size_t i = 0; i + 1 < st.entries.size(); ++i)
        if (!st.entries[i].main)
            throw std::invalid_argument("close: interior entry without main literal");

    // A main selected on the final clause but never extended has no
    // complement below it; it returns above the boundary.
    ExtensionState closed = st;
    closed.entries.back().main.reset();

    std::vector<Clause> negative_parts;
    negative_parts.reserve(closed.entries.size());
    for (std::size_t i = 0; i < closed.entries.size(); ++i) {
        std::vector<Literal> part = closed.d_minus(i);
        for (const Literal& l : part)
            if (!closed.instances[i].contains(l))
                throw std::logic_error("close: boundary literal outside its instance");
        negative_parts.emplace_back(std::move(part));
    }
    if (!is_standard_contradiction(negative_parts, max_tuples))
        throw std::logic_error("close: negative parts fail the standard contradiction check");

    Clause csc(closed.remaining_literals());
    return CscResult{std::move(csc), std::move(closed)};
}

} // namespace cse

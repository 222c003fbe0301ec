#pragma once

#include <optional>
#include <vector>

#include "cse/logic/clause.hpp"
#include "cse/logic/clause_set.hpp"
#include "cse/logic/unify.hpp"

namespace cse {

/// True iff the clause contains a syntactically complementary literal pair.
inline bool is_tautology(const Clause& c) {
    const auto& lits = c.literals();
    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j)
            if (lits[i].is_complement_of(lits[j])) return true;
    return false;
}

namespace detail {

inline bool subsumes_from(const std::vector<Literal>& pattern, std::size_t index,
                          const std::vector<Literal>& target, const MatchEnv& env,
                          std::size_t& budget) {
    if (index == pattern.size()) return true;
    for (const Literal& t : target) {
        if (budget == 0) return false;
        --budget;
        MatchEnv next = env;
        if (!next.literal(pattern[index], t)) continue;
        if (subsumes_from(pattern, index + 1, target, next, budget)) return true;
    }
    return false;
}

} // namespace detail

/// True iff some substitution s has apply(s, c1) a literal-subset of c2.
/// The match search is budgeted; an exhausted budget answers false, which
/// at worst keeps a redundant clause.
inline bool subsumes(const Clause& c1, const Clause& c2, std::size_t budget = 10'000) {
    if (c1.empty()) return true;
    return detail::subsumes_from(c1.literals(), 0, c2.literals(), MatchEnv{}, budget);
}

/// Deletion-safe subsumption: a factor has fewer literals than the clause
/// it came from yet is subsumed by it, and deleting factors loses
/// refutations. Redundancy elimination therefore also requires the
/// subsumer to be no wider than the victim.
inline bool subsumes_for_deletion(const Clause& keeper, const Clause& victim) {
    return keeper.size() <= victim.size() && subsumes(keeper, victim);
}

/// Literals occurring somewhere in the set whose complement occurs nowhere.
inline std::vector<Literal> pure_literals(const std::vector<Clause>& clauses) {
    std::vector<Literal> present;
    for (const Clause& c : clauses)
        for (const Literal& l : c.literals())
            if (std::find(present.begin(), present.end(), l) == present.end())
                present.push_back(l);
    std::vector<Literal> pure;
    for (const Literal& l : present) {
        bool complemented = false;
        for (const Literal& other : present)
            if (other.is_complement_of(l)) {
                complemented = true;
                break;
            }
        if (!complemented) pure.push_back(l);
    }
    return pure;
}

} // namespace cse

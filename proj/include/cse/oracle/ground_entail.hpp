#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cse/errors.hpp"
#include "cse/logic/clause.hpp"
#include "cse/logic/clause_set.hpp"
#include "cse/logic/substitution.hpp"

namespace cse {
namespace oracle {

/**
 * Ground term universe over the given constants, closed under the function
 * symbols up to the nesting depth. The universe gets one invented constant
 * when no constants are supplied (the base must be nonempty).
 */
inline std::vector<Term> ground_universe(const std::vector<Term>& constants,
                                         const std::map<std::string, std::size_t>& functions,
                                         std::size_t max_depth, std::size_t cap = 512) {
    std::vector<Term> universe = constants;
    if (universe.empty()) universe.push_back(Term::constant("u0"));
    std::size_t layer_begin = 0;
    for (std::size_t depth = 1; depth < max_depth; ++depth) {
        const std::size_t layer_end = universe.size();
        for (const auto& [name, arity] : functions) {
            if (arity == 0) continue;
            // tuples over the universe with at least one element from the
            // newest layer keep the closure from repeating terms
            std::vector<std::size_t> pick(arity, 0);
            for (;;) {
                bool has_new = false;
                for (std::size_t i : pick)
                    if (i >= layer_begin) has_new = true;
                if (has_new) {
                    std::vector<Term> args;
                    for (std::size_t i : pick) args.push_back(universe[i]);
                    universe.push_back(Term::function(name, std::move(args)));
                    if (universe.size() > cap)
                        throw ResourceLimitError("ground universe exceeds cap");
                }
                std::size_t level = arity;
                bool done = false;
                while (level > 0) {
                    --level;
                    if (++pick[level] < layer_end) break;
                    pick[level] = 0;
                    if (level == 0) done = true;
                }
                if (done) break;
            }
        }
        layer_begin = layer_end;
        if (layer_begin == universe.size()) break; // nothing new
    }
    return universe;
}

/// All ground instances of a clause over the universe.
inline std::vector<Clause> ground_instances(const Clause& c, const std::vector<Term>& universe,
                                            std::size_t cap, std::size_t& budget) {
    const std::set<std::string> vars = c.variables();
    std::vector<std::string> names(vars.begin(), vars.end());
    std::vector<Clause> out;
    std::vector<std::size_t> pick(names.size(), 0);
    for (;;) {
        if (budget < c.size() + 1)
            throw ResourceLimitError("ground instantiation exceeds cap");
        budget -= c.size() + 1;
        Substitution env;
        for (std::size_t i = 0; i < names.size(); ++i) env.bind(names[i], universe[pick[i]]);
        out.push_back(apply(env, c));
        if (out.size() * (c.size() + 1) > cap)
            throw ResourceLimitError("ground instantiation exceeds cap");
        std::size_t level = names.size();
        bool done = names.empty();
        while (level > 0) {
            --level;
            if (++pick[level] < universe.size()) break;
            pick[level] = 0;
            if (level == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

/**
 * Finite instantiation check: do the ground instances of the parents,
 * taken together, propositionally entail the disjunction of the ground
 * instances of the candidate clause? A bounded necessary condition, not a
 * decision procedure; the default base is the problem's constants plus
 * function nesting up to max_depth.
 */
inline bool ground_entails(const std::vector<Clause>& parents, const Clause& csc,
                           const std::vector<Term>& constants,
                           const std::map<std::string, std::size_t>& functions,
                           std::size_t max_depth = 2, std::size_t max_ground_literals = 10'000) {
    const std::vector<Term> universe = ground_universe(constants, functions, max_depth);

    std::size_t budget = max_ground_literals;
    std::vector<Clause> premise_instances;
    for (const Clause& p : parents)
        for (Clause& g : ground_instances(p, universe, max_ground_literals, budget))
            premise_instances.push_back(std::move(g));
    std::vector<Clause> csc_instances = ground_instances(csc, universe, max_ground_literals, budget);

    // ground atoms as propositions
    std::vector<Literal> atoms;
    auto note = [&](const Clause& c) {
        for (const Literal& l : c.literals()) {
            Literal atom = l.positive() ? l : l.complement();
            if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end())
                atoms.push_back(atom);
        }
    };
    for (const Clause& c : premise_instances) note(c);
    for (const Clause& c : csc_instances) note(c);
    if (atoms.size() > 24) throw ResourceLimitError("ground entailment: atom cap exceeded");

    auto truth = [&](const Literal& l, unsigned long mask) {
        const Literal atom = l.positive() ? l : l.complement();
        const std::size_t idx = std::find(atoms.begin(), atoms.end(), atom) - atoms.begin();
        const bool value = (mask >> idx) & 1u;
        return value == l.positive();
    };

    const unsigned long total = 1ul << atoms.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
        bool premises_hold = true;
        for (const Clause& c : premise_instances) {
            bool sat = false;
            for (const Literal& l : c.literals())
                if (truth(l, mask)) {
                    sat = true;
                    break;
                }
            if (!sat) {
                premises_hold = false;
                break;
            }
        }
        if (!premises_hold) continue;
        bool conclusion_holds = false;
        for (const Clause& c : csc_instances) {
            bool sat = false;
            for (const Literal& l : c.literals())
                if (truth(l, mask)) {
                    sat = true;
                    break;
                }
            if (sat) {
                conclusion_holds = true;
                break;
            }
        }
        if (!conclusion_holds) return false;
    }
    return true;
}

/// Convenience overload pulling constants and function symbols from a set.
inline bool ground_entails(const std::vector<Clause>& parents, const Clause& csc,
                           const ClauseSet& symbols, std::size_t max_depth = 2) {
    return ground_entails(parents, csc, symbols.constants(), symbols.function_arities(),
                          max_depth);
}

} // namespace oracle
} // namespace cse

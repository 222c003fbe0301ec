#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cse/errors.hpp"
#include "cse/logic/clause.hpp"
#include "cse/logic/clause_set.hpp"

namespace cse {
namespace oracle {

struct TruthTableReport {
    bool satisfiable = false;
    std::optional<std::vector<Literal>> model;
    int variable_count = 0;
};

constexpr int kTruthTableVarCap = 24;

namespace detail {

inline std::vector<std::string> proposition_names(const std::vector<Clause>& clauses) {
    std::vector<std::string> names;
    for (const Clause& c : clauses)
        for (const Literal& l : c.literals()) {
            if (!l.args().empty() || !l.variables().empty())
                throw std::invalid_argument("truth table oracle: input is not propositional");
            if (std::find(names.begin(), names.end(), l.predicate()) == names.end())
                names.push_back(l.predicate());
        }
    return names;
}

inline bool clause_true_under(const Clause& c, const std::vector<std::string>& names,
                              unsigned long mask) {
    for (const Literal& l : c.literals()) {
        const std::size_t idx =
            std::find(names.begin(), names.end(), l.predicate()) - names.begin();
        const bool value = (mask >> idx) & 1u;
        if (value == l.positive()) return true;
    }
    return false;
}

} // namespace detail

/// Exhaustive enumeration over all assignments of the clauses' variables.
inline TruthTableReport truth_table_sat(const std::vector<Clause>& clauses) {
    const std::vector<std::string> names = detail::proposition_names(clauses);
    if (names.size() > kTruthTableVarCap)
        throw ResourceLimitError("truth table oracle: variable cap exceeded");

    TruthTableReport report;
    report.variable_count = static_cast<int>(names.size());
    const unsigned long total = 1ul << names.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
        bool all = true;
        for (const Clause& c : clauses)
            if (!detail::clause_true_under(c, names, mask)) {
                all = false;
                break;
            }
        if (all) {
            std::vector<Literal> model;
            for (std::size_t i = 0; i < names.size(); ++i)
                model.emplace_back((mask >> i) & 1u, names[i]);
            report.satisfiable = true;
            report.model = std::move(model);
            return report;
        }
    }
    return report;
}

inline TruthTableReport truth_table_sat(const ClauseSet& s) {
    return truth_table_sat(s.clauses());
}

/// True iff every assignment satisfying all premises satisfies the conclusion.
inline bool truth_table_entails(const std::vector<Clause>& premises, const Clause& conclusion) {
    std::vector<Clause> all = premises;
    all.push_back(conclusion);
    const std::vector<std::string> names = detail::proposition_names(all);
    if (names.size() > kTruthTableVarCap)
        throw ResourceLimitError("truth table oracle: variable cap exceeded");
    const unsigned long total = 1ul << names.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
        bool premises_hold = true;
        for (const Clause& c : premises)
            if (!detail::clause_true_under(c, names, mask)) {
                premises_hold = false;
                break;
            }
        if (premises_hold && !detail::clause_true_under(conclusion, names, mask)) return false;
    }
    return true;
}

/// Evaluates a clause under a (possibly partial) literal-set assignment.
inline bool satisfied_by(const Clause& c, const std::vector<Literal>& model) {
    for (const Literal& l : c.literals())
        if (std::find(model.begin(), model.end(), l) != model.end()) return true;
    return false;
}

} // namespace oracle
} // namespace cse

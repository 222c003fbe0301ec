#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cse/errors.hpp"
#include "cse/logic/clause.hpp"

namespace cse {

constexpr std::size_t kDefaultTupleCap = 1'000'000;

/**
 * Definition-level check: every tuple in the Cartesian product of the
 * clauses' literal sets must contain a complementary pair.
 *
 * Enumerates the product directly. This is the verification-grade form;
 * the engines never search with it, they only assert against it.
 *
 * Throws ResourceLimitError when the product exceeds max_tuples and
 * std::invalid_argument when a clause (or the family) is empty.
 */
inline bool is_standard_contradiction(const std::vector<Clause>& clauses,
                                      std::size_t max_tuples = kDefaultTupleCap) {
    if (clauses.empty())
        throw std::invalid_argument("is_standard_contradiction: empty clause family");
    std::size_t product = 1;
    for (const Clause& c : clauses) {
        if (c.empty())
            throw std::invalid_argument("is_standard_contradiction: empty clause in family");
        if (c.size() > max_tuples / product)
            throw ResourceLimitError("is_standard_contradiction: product exceeds tuple cap");
        product *= c.size();
    }

    const std::size_t m = clauses.size();
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        bool has_pair = false;
        for (std::size_t i = 0; i < m && !has_pair; ++i)
            for (std::size_t j = i + 1; j < m && !has_pair; ++j)
                if (clauses[i].literals()[pick[i]].is_complement_of(clauses[j].literals()[pick[j]]))
                    has_pair = true;
        if (!has_pair) return false;

        std::size_t level = m;
        while (level > 0) {
            --level;
            if (++pick[level] < clauses[level].size()) break;
            pick[level] = 0;
            if (level == 0) return true; // odometer wrapped: all tuples checked
        }
    }
}

} // namespace cse

#pragma once

#include <stdexcept>
#include <vector>

#include "cse/kernel/extension.hpp"
#include "cse/logic/clause.hpp"

namespace cse {
namespace oracle {

struct ChainStep {
    Clause resolvent;
    Literal resolved_on; // the literal removed from the side clause
    std::size_t side_index;
};

struct LinearChain {
    std::vector<ChainStep> steps;
    Clause final_resolvent;
};

/**
 * Rebuilds a closed extension as a chain of binary resolutions: the final
 * clause against its predecessor on the recorded boundary pair, the result
 * against the clause before that, down to the first. Every extension
 * admits such a chain and its last resolvent equals the separation clause;
 * a construction failure here is an internal bug.
 */
inline LinearChain linear_chain_of(const ExtensionState& state) {
    const std::size_t k = state.width();
    if (k < 2) throw std::invalid_argument("linear_chain_of: need a closed extension");

    LinearChain chain;
    Clause current = state.instances[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
        if (!state.entries[i].main)
            throw std::logic_error("linear_chain_of: interior entry without main literal");
        const Literal& main = *state.entries[i].main;
        const Literal counterpart = main.complement();
        const Clause& side = state.instances[i];
        if (!side.contains(main))
            throw std::logic_error("linear_chain_of: main literal missing from its instance");
        if (!current.contains(counterpart))
            throw std::logic_error("linear_chain_of: running resolvent lost the boundary literal");

        std::vector<Literal> merged;
        for (const Literal& l : current.literals())
            if (l != counterpart) merged.push_back(l);
        for (const Literal& l : side.literals())
            if (l != main) merged.push_back(l);
        current = Clause(std::move(merged));
        chain.steps.push_back({current, main, i});
    }
    chain.final_resolvent = current;
    return chain;
}

} // namespace oracle
} // namespace cse

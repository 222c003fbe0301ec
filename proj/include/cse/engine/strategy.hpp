#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>

namespace cse {

/**
 * Knobs for the saturation loops. The propositional engine reads
 * max_width; the first-order engine reads max_contradiction_width and
 * max_term_depth on top of the shared limits.
 */
struct StrategyConfig {
    std::size_t max_steps = 20000; // extension-step budget per saturate call
    std::size_t max_width = 64;    // clauses per contradiction, propositional
    std::chrono::milliseconds time_limit{0}; // 0 = unlimited
    bool start_rotation = true;    // rotate the starting clause across rounds
    bool fallback_binary = true;   // two-clause rounds when extension stalls

    std::size_t max_term_depth = 8;            // first-order: substitution result cap
    std::size_t max_contradiction_width = 64;  // first-order: clauses per contradiction

    std::uint64_t seed = 0;

    /// Cooperative cancellation, used by portfolio mode. Not owned.
    const std::atomic<bool>* cancel = nullptr;

    bool cancelled() const { return cancel && cancel->load(std::memory_order_relaxed); }
};

} // namespace cse

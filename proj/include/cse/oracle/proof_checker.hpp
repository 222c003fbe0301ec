#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cse/engine/proof.hpp"
#include "cse/logic/clause.hpp"
#include "cse/logic/clause_set.hpp"

namespace cse {
namespace oracle {

struct CheckReport {
    bool ok = false;
    std::string diagnostic; // first failing step and why
    int failing_step = 0;

    explicit operator bool() const { return ok; }
};

namespace detail {

// Deliberately not the kernel's enumeration: a recursive check that walks
// the product depth-first. The checker must not share the prover's code
// paths for the properties it certifies.
inline bool product_all_tuples_clash(const std::vector<std::vector<Literal>>& parts,
                                     std::vector<const Literal*>& picked, std::size_t depth) {
    if (depth == parts.size()) {
        for (std::size_t i = 0; i < picked.size(); ++i)
            for (std::size_t j = i + 1; j < picked.size(); ++j)
                if (picked[i]->is_complement_of(*picked[j])) return true;
        return false;
    }
    for (const Literal& l : parts[depth]) {
        picked.push_back(&l);
        const bool ok = product_all_tuples_clash(parts, picked, depth + 1);
        picked.pop_back();
        if (!ok) return false;
    }
    return true;
}

inline bool is_contradiction_family(const std::vector<std::vector<Literal>>& parts) {
    for (const auto& p : parts)
        if (p.empty()) return false;
    std::vector<const Literal*> picked;
    return product_all_tuples_clash(parts, picked, 0);
}

} // namespace detail

/**
 * Replays a deduction sequence against the input clause set.
 *
 * For every step: each participant must reference an input clause or an
 * earlier step; the recorded substitution must reproduce an instance that
 * contains the recorded boundary literals; the boundary must have the
 * chained shape (each secondary literal complements the previous main,
 * absorbed literals complement mains at least two positions back, no two
 * mains complementary); the negative parts must form a contradiction in
 * the Cartesian sense; and the union of the positive parts must equal the
 * step's recorded clause. A refutation must end in the empty clause.
 */
inline CheckReport check_proof(const Proof& proof, const ClauseSet& inputs) {
    auto fail = [](int step_id, std::string why) {
        return CheckReport{false, std::move(why), step_id};
    };

    if (proof.steps.empty()) {
        for (const Clause& c : inputs.clauses())
            if (c.empty()) return CheckReport{true, "input set contains the empty clause", 0};
        return fail(0, "empty proof over a set with no empty clause");
    }

    std::map<int, Clause> known;
    for (const Clause& c : inputs.clauses()) known.emplace(c.id(), c);

    for (const DeductionStep& step : proof.steps) {
        if (known.count(step.id))
            return fail(step.id, "step id collides with an existing clause");
        const std::size_t k = step.participants.size();
        if (k < 2) return fail(step.id, "fewer than two participants");

        std::vector<Clause> instances;
        std::vector<std::vector<Literal>> negative_parts;
        std::vector<const Literal*> mains;

        for (std::size_t i = 0; i < k; ++i) {
            const StepParticipant& p = step.participants[i];
            const auto src = known.find(p.source_id);
            if (src == known.end())
                return fail(step.id, "participant references an unknown clause id " +
                                         std::to_string(p.source_id));
            const Clause instance = apply(p.sigma, src->second);

            const bool first = (i == 0);
            const bool last = (i + 1 == k);
            if (!last && !p.main) return fail(step.id, "interior participant without main literal");
            if (last && p.main) return fail(step.id, "final participant carries a main literal");
            if (first && p.secondary) return fail(step.id, "first participant carries a secondary");
            if (!first && !p.secondary)
                return fail(step.id, "participant entered without a secondary literal");

            std::vector<Literal> dminus;
            if (p.main) {
                if (!instance.contains(*p.main))
                    return fail(step.id, "main literal not in the replayed instance");
                dminus.push_back(*p.main);
            }
            if (p.secondary) {
                if (!instance.contains(*p.secondary))
                    return fail(step.id, "secondary literal not in the replayed instance");
                if (std::find(dminus.begin(), dminus.end(), *p.secondary) == dminus.end())
                    dminus.push_back(*p.secondary);
            }
            for (const Literal& a : p.absorbed) {
                if (!instance.contains(a))
                    return fail(step.id, "absorbed literal not in the replayed instance");
                if (std::find(dminus.begin(), dminus.end(), a) == dminus.end())
                    dminus.push_back(a);
            }
            if (dminus.empty()) return fail(step.id, "empty negative part");

            instances.push_back(instance);
            negative_parts.push_back(std::move(dminus));
            mains.push_back(p.main ? &*p.main : nullptr);
        }

        // chain shape
        for (std::size_t i = 1; i < k; ++i) {
            if (!mains[i - 1]) return fail(step.id, "missing main before a secondary");
            if (!step.participants[i].secondary->is_complement_of(*mains[i - 1]))
                return fail(step.id, "secondary does not complement the previous main");
        }
        for (std::size_t i = 0; i < k; ++i)
            for (const Literal& a : step.participants[i].absorbed) {
                bool anchored = false;
                for (std::size_t h = 0; h + 2 <= i; ++h)
                    if (mains[h] && a.is_complement_of(*mains[h])) {
                        anchored = true;
                        break;
                    }
                if (!anchored)
                    return fail(step.id, "absorbed literal without an earlier complementary main");
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (mains[i] && mains[j] && mains[i]->is_complement_of(*mains[j]))
                    return fail(step.id, "complementary pair on the main boundary");

        if (!detail::is_contradiction_family(negative_parts))
            return fail(step.id, "negative parts are not a standard contradiction");

        // the separation clause is exactly the union of the positive parts
        std::vector<Literal> positive_union;
        for (std::size_t i = 0; i < k; ++i)
            for (const Literal& l : instances[i].literals())
                if (std::find(negative_parts[i].begin(), negative_parts[i].end(), l) ==
                    negative_parts[i].end())
                    positive_union.push_back(l);
        if (!Clause(positive_union).same_literals(step.csc))
            return fail(step.id, "recorded clause differs from the replayed separation clause");

        known.emplace(step.id, step.csc);
    }

    if (!proof.steps.back().csc.empty())
        return fail(proof.steps.back().id, "deduction does not end in the empty clause");
    return CheckReport{true, "", 0};
}

} // namespace oracle
} // namespace cse

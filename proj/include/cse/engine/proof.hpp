#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cse/logic/clause.hpp"
#include "cse/logic/substitution.hpp"

namespace cse {

/**
 * One clause's role in a deduction step. `sigma` maps the source clause
 * (by its id in the ambient set) to the instance that participated, in the
 * coordinates of the final closed extension. Boundary literals are stored
 * as instance literals so a checker can replay the partition without any
 * kernel machinery.
 */
struct StepParticipant {
    int source_id = 0;
    Substitution sigma;
    std::optional<Literal> main;
    std::optional<Literal> secondary;
    std::vector<Literal> absorbed;
};

/// A contradiction separation step with full provenance.
struct DeductionStep {
    int id = 0; // id assigned to the derived clause
    Clause csc;
    std::vector<StepParticipant> participants;
};

/// Deduction sequence; a refutation when the last step's clause is empty.
struct Proof {
    std::vector<DeductionStep> steps;

    bool is_refutation() const { return !steps.empty() && steps.back().csc.empty(); }
};

enum class VerdictKind { unsat, sat, unknown };

struct PropVerdict {
    VerdictKind kind = VerdictKind::unknown;
    Proof proof;                 // set when kind == unsat
    std::vector<Literal> model;  // set when kind == sat; total over input variables
    std::string reason;          // set when kind == unknown
};

/**
 * Description of a finite interpretation witnessing satisfiability:
 * one selected literal per input clause, the case of the construction,
 * and a predicate-level truth assignment (default value plus exceptions
 * on protected ground argument tuples) sufficient to evaluate them.
 */
struct InterpretationSketch {
    enum class Case { disjoint_predicates, ground_distinct };

    struct PredicateAssignment {
        bool default_value = true;
        std::vector<std::pair<std::vector<Term>, bool>> exceptions;
    };

    std::map<int, Literal> selected; // input clause id -> selected literal
    Case construction = Case::disjoint_predicates;
    std::map<std::string, PredicateAssignment> truth;
    std::vector<Term> domain; // ground terms plus one designated extra element
    bool verified = false;
};

struct FolVerdict {
    VerdictKind kind = VerdictKind::unknown;
    Proof proof;
    std::optional<InterpretationSketch> witness;
    std::string reason;
};

} // namespace cse

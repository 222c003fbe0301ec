#pragma once

// Contradiction-separation theorem proving: clause logic core, the
// standard-extension kernel, propositional and first-order saturation
// engines, independent verification oracles, and problem/proof I/O.

#include "cse/engine/fol_engine.hpp"
#include "cse/engine/proof.hpp"
#include "cse/engine/prop_engine.hpp"
#include "cse/engine/strategy.hpp"
#include "cse/errors.hpp"
#include "cse/io/dimacs.hpp"
#include "cse/io/documents.hpp"
#include "cse/io/tptp.hpp"
#include "cse/kernel/extension.hpp"
#include "cse/kernel/standard_contradiction.hpp"
#include "cse/logic/clause.hpp"
#include "cse/logic/clause_ops.hpp"
#include "cse/logic/clause_set.hpp"
#include "cse/logic/literal.hpp"
#include "cse/logic/substitution.hpp"
#include "cse/logic/term.hpp"
#include "cse/logic/unify.hpp"
#include "cse/oracle/exhaustive_search.hpp"
#include "cse/oracle/ground_entail.hpp"
#include "cse/oracle/linear_chain.hpp"
#include "cse/oracle/proof_checker.hpp"
#include "cse/oracle/truth_table.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cse/engine/fol_engine.hpp"
#include "cse/engine/prop_engine.hpp"
#include "cse/oracle/exhaustive_search.hpp"
#include "cse/oracle/ground_entail.hpp"
#include "cse/oracle/linear_chain.hpp"
#include "cse/oracle/proof_checker.hpp"
#include "cse/oracle/truth_table.hpp"

using namespace cse;

namespace {

Literal pos(const std::string& p) { return Literal::pos(p); }
Literal neg(const std::string& p) { return Literal::neg(p); }
Term var(const std::string& n) { return Term::variable(n); }
Term cst(const std::string& n) { return Term::constant(n); }

Clause cl(std::vector<Literal> lits, int id = 0) { return Clause(std::move(lits), id); }

ClauseSet make_set(std::vector<Clause> clauses) {
    ClauseSet s;
    for (Clause& c : clauses) s.add(std::move(c));
    return s;
}

// a second, independently coded enumeration: walks assignments from the
// top of the range down and indexes variables in reverse
bool reversed_enumeration_satisfiable(const ClauseSet& s) {
    std::vector<std::string> names;
    for (const Clause& c : s.clauses())
        for (const Literal& l : c.literals())
            if (std::find(names.begin(), names.end(), l.predicate()) == names.end())
                names.push_back(l.predicate());
    const unsigned long total = 1ul << names.size();
    for (unsigned long down = total; down-- > 0;) {
        bool all = true;
        for (const Clause& c : s.clauses()) {
            bool sat = false;
            for (const Literal& l : c.literals()) {
                const std::size_t idx =
                    names.size() - 1 -
                    (std::find(names.begin(), names.end(), l.predicate()) - names.begin());
                if (((down >> idx) & 1u) == static_cast<unsigned long>(l.positive())) sat = true;
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

ClauseSet random_cnf(std::mt19937& rng, int vars, int max_clauses) {
    std::uniform_int_distribution<int> nc(1, max_clauses), nl(1, 3), pv(0, vars - 1), pol(0, 1);
    ClauseSet s;
    const int n = nc(rng);
    for (int j = 0; j < n; ++j) {
        std::vector<Literal> lits;
        const int m = nl(rng);
        for (int k = 0; k < m; ++k)
            lits.emplace_back(pol(rng) == 1, "v" + std::to_string(pv(rng) + 1));
        s.add(Clause(std::move(lits)));
    }
    return s;
}

} // namespace

TEST_CASE("truth table on the three-clause shapes") {
    // {~p|~q|t, p|t, ~t} is satisfiable (e.g. p true, q false, t false)
    const auto r = oracle::truth_table_sat(
        make_set({cl({neg("p"), neg("q"), pos("t")}), cl({pos("p"), pos("t")}), cl({neg("t")})}));
    CHECK(r.satisfiable);
    REQUIRE(r.model.has_value());
    CHECK(oracle::satisfied_by(cl({pos("p"), pos("t")}), *r.model));

    CHECK_FALSE(oracle::truth_table_sat(make_set({cl({pos("p")}), cl({neg("p")})})).satisfiable);
}

TEST_CASE("truth table agrees with an independent enumeration") {
    std::mt19937 rng(31);
    for (int i = 0; i < 1000; ++i) {
        const ClauseSet s = random_cnf(rng, 4, 5);
        CHECK(oracle::truth_table_sat(s).satisfiable == reversed_enumeration_satisfiable(s));
    }
}

TEST_CASE("variable cap is a resource error") {
    ClauseSet s;
    std::vector<Literal> lits;
    for (int i = 0; i < 25; ++i) s.add(cl({pos("w" + std::to_string(i))}));
    CHECK_THROWS_AS(oracle::truth_table_sat(s), ResourceLimitError);
}

TEST_CASE("check_proof accepts engine proofs and rejects mutations") {
    const ClauseSet s = make_set({
        cl({pos("x1"), pos("x5")}),
        cl({neg("x1"), pos("x2")}),
        cl({neg("x1"), neg("x2"), pos("x3")}),
        cl({neg("x1"), neg("x3"), pos("x4")}),
        cl({neg("x1"), neg("x2"), neg("x4")}),
        cl({pos("x1"), neg("x5")}),
    });
    const PropVerdict v = saturate(s);
    REQUIRE(v.kind == VerdictKind::unsat);
    REQUIRE(oracle::check_proof(v.proof, s).ok);

    // single-field mutations must all be rejected
    int rejected = 0, attempted = 0;
    for (std::size_t si = 0; si < v.proof.steps.size(); ++si) {
        // flip one csc literal's polarity
        {
            Proof mutant = v.proof;
            auto lits = mutant.steps[si].csc.literals();
            if (!lits.empty()) {
                lits[0] = lits[0].complement();
                mutant.steps[si].csc = Clause(std::move(lits), mutant.steps[si].id);
                ++attempted;
                if (!oracle::check_proof(mutant, s).ok) ++rejected;
            }
        }
        // add a stray literal to the csc
        {
            Proof mutant = v.proof;
            auto lits = mutant.steps[si].csc.literals();
            lits.push_back(pos("zz"));
            mutant.steps[si].csc = Clause(std::move(lits), mutant.steps[si].id);
            ++attempted;
            if (!oracle::check_proof(mutant, s).ok) ++rejected;
        }
        // swap a participant's source onto another clause
        {
            Proof mutant = v.proof;
            auto& p = mutant.steps[si].participants[0];
            p.source_id = p.source_id == 1 ? 2 : 1;
            ++attempted;
            if (!oracle::check_proof(mutant, s).ok) ++rejected;
        }
        // flip a boundary literal
        {
            Proof mutant = v.proof;
            auto& p = mutant.steps[si].participants[0];
            if (p.main) {
                p.main = p.main->complement();
                ++attempted;
                if (!oracle::check_proof(mutant, s).ok) ++rejected;
            }
        }
    }
    CHECK(attempted == rejected);
    CHECK(attempted >= 6);
}

TEST_CASE("check_proof rejects structural nonsense") {
    const ClauseSet s = make_set({cl({pos("p")}), cl({neg("p")})});
    // empty proof over a set without the empty clause
    CHECK_FALSE(oracle::check_proof(Proof{}, s).ok);
    // an input empty clause is its own refutation
    CHECK(oracle::check_proof(Proof{}, make_set({cl({pos("p")}), cl({})})).ok);
    // a proof ending in a non-empty clause is not a refutation
    Proof p;
    DeductionStep step;
    step.id = 3;
    step.csc = cl({pos("q")}, 3);
    StepParticipant a;
    a.source_id = 1;
    a.main = pos("p");
    StepParticipant b;
    b.source_id = 2;
    b.secondary = neg("p");
    step.participants = {a, b};
    p.steps.push_back(step);
    CHECK_FALSE(oracle::check_proof(p, s).ok);
}

TEST_CASE("linear chain reproduces the separation clause") {
    // the associativity fixture's three-clause shape
    const Clause c1 = cl({neg("p"), neg("q"), pos("t")}, 1);
    const Clause c2 = cl({pos("p"), pos("t")}, 2);
    const Clause c4 = cl({neg("t")}, 4);

    ExtensionState st = begin(c4, neg("t"));
    auto e1 = extend(st, c2, pos("t"));
    REQUIRE(e1.status == ExtendStatus::ok);
    auto sel = select_main(*e1.state, pos("p"));
    REQUIRE(sel.status == ExtendStatus::ok);
    auto e2 = extend(*sel.state, c1, neg("p"));
    REQUIRE(e2.status == ExtendStatus::ok);
    const CscResult res = close(*e2.state);
    CHECK(res.clause.same_literals(cl({neg("q")})));

    const oracle::LinearChain chain = oracle::linear_chain_of(res.state);
    CHECK(chain.final_resolvent.same_literals(res.clause));
    CHECK(chain.steps.size() == 2);

    // two-clause state: a single binary resolution step
    ExtensionState two = begin(cl({pos("p"), pos("q")}, 1), pos("p"));
    auto e3 = extend(two, cl({neg("p"), pos("r")}, 2), neg("p"));
    const CscResult res2 = close(*e3.state);
    const oracle::LinearChain chain2 = oracle::linear_chain_of(res2.state);
    CHECK(chain2.steps.size() == 1);
    CHECK(chain2.final_resolvent.same_literals(res2.clause));
}

TEST_CASE("linear chain equals the csc on every closed state of a saturation run") {
    const ClauseSet s = make_set({
        cl({pos("x1"), pos("x5")}),
        cl({neg("x1"), pos("x2")}),
        cl({neg("x1"), neg("x2"), pos("x3")}),
        cl({neg("x1"), neg("x3"), pos("x4")}),
        cl({neg("x1"), neg("x2"), neg("x4")}),
        cl({pos("x1"), neg("x5")}),
    });
    int checked = 0;
    saturate(s, {}, [&](const CscResult& res) {
        const oracle::LinearChain chain = oracle::linear_chain_of(res.state);
        CHECK(chain.final_resolvent.same_literals(res.clause));
        ++checked;
    });
    CHECK(checked > 0);
}

TEST_CASE("ground entailment") {
    // instantiation: p(X) entails p(a)
    {
        ClauseSet sym;
        sym.add(cl({Literal::pos("p", {cst("a")})}));
        CHECK(oracle::ground_entails({cl({Literal::pos("p", {var("X")})})},
                                     cl({Literal::pos("p", {cst("a")})}), sym));
    }
    // an unrelated conclusion is not entailed
    {
        ClauseSet sym;
        sym.add(cl({Literal::pos("p", {cst("a")})}));
        sym.add(cl({Literal::pos("q", {cst("a")})}));
        CHECK_FALSE(oracle::ground_entails({cl({Literal::pos("p", {cst("a")})})},
                                           cl({Literal::pos("q", {cst("a")})}), sym));
    }
    // the relational example's first step
    {
        ClauseSet s;
        s.add(cl({Literal::pos("p", {cst("a1")})}));
        s.add(cl({Literal::neg("p", {var("X31")}), Literal::neg("q", {var("X32")}),
                  Literal::neg("l", {var("X31"), var("X32")})}));
        s.add(cl({Literal::pos("q", {cst("a2")})}));
        const Clause conclusion({Literal::neg("l", {cst("a1"), cst("a2")})});
        CHECK(oracle::ground_entails(
            {s[0], s[1], s[2]}, conclusion, s));
    }
}

TEST_CASE("counterexample guard") {
    const auto report = oracle::counterexample_guard();
    CHECK(report.associativity_mismatch_confirmed);
    CHECK(report.nested_one_way.same_literals(cl({neg("q")})));
    CHECK(report.nested_other_way.same_literals(cl({neg("q"), pos("t")})));
    CHECK(report.reordered_chain_blocked);
    CHECK(report.reordered_chain_blocked_fol);
    CHECK(report.all_confirmed());
}

TEST_CASE("order-pinned search enumerates reachable separations") {
    // the four-clause order-sensitivity set
    const Clause c1 = cl({pos("p")}, 1);
    const Clause c2 = cl({neg("p"), neg("q"), pos("r")}, 2);
    const Clause c3 = cl({pos("r"), pos("q")}, 3);
    const Clause c4 = cl({neg("r")}, 4);

    CHECK(oracle::derivable_in_order({c1, c2, c3, c4}, cl({pos("r")})));
    CHECK(oracle::derivable_in_order({c4, c3, c2, c1}, Clause()));
    // the blocked orders yield nothing
    CHECK(oracle::cscs_in_order({c1, c2, c4, c3}).empty());
    CHECK(oracle::cscs_in_order({c1, c4, c2, c3}).empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cse/kernel/extension.hpp"
#include "cse/kernel/standard_contradiction.hpp"
#include "cse/oracle/truth_table.hpp"

using namespace cse;

namespace {

Literal pos(const std::string& p) { return Literal::pos(p); }
Literal neg(const std::string& p) { return Literal::neg(p); }

Clause cl(std::vector<Literal> lits, int id = 0) { return Clause(std::move(lits), id); }

// chains a propositional extension: begin, then (main, clause, y) triples
ExtensionState must_extend(ExtensionState st, const Clause& next, const Literal& y) {
    auto r = extend(st, next, y);
    REQUIRE(r.status == ExtendStatus::ok);
    return *r.state;
}
ExtensionState must_select(ExtensionState st, const Literal& main) {
    auto r = select_main(st, main);
    REQUIRE(r.status == ExtendStatus::ok);
    return *r.state;
}

} // namespace

TEST_CASE("standard contradiction: definition examples") {
    // (~t) & (p v t) & (~p v t) is a standard contradiction
    CHECK(is_standard_contradiction({cl({neg("t")}), cl({pos("p"), pos("t")}),
                                     cl({neg("p"), pos("t")})}));
    // single complementary pair
    CHECK(is_standard_contradiction({cl({pos("p")}), cl({neg("p")})}));
    // tuple (q, ~p) has no complementary pair
    CHECK_FALSE(is_standard_contradiction({cl({pos("p"), pos("q")}), cl({neg("p")})}));
}

TEST_CASE("standard contradiction: contract and caps") {
    CHECK_THROWS_AS(is_standard_contradiction({}), std::invalid_argument);
    CHECK_THROWS_AS(is_standard_contradiction({cl({pos("p")}), cl({})}), std::invalid_argument);
    // 2^21 tuples over a 1000 cap
    std::vector<Clause> wide;
    for (int i = 0; i < 21; ++i)
        wide.push_back(cl({pos("p" + std::to_string(i)), neg("p" + std::to_string(i))}));
    CHECK_THROWS_AS(is_standard_contradiction(wide, 1000), ResourceLimitError);
}

TEST_CASE("standard contradiction iff unsatisfiable conjunction") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nc(1, 4), nl(1, 3), pv(0, 2), pol(0, 1);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<Clause> family;
        const int n = nc(rng);
        for (int j = 0; j < n; ++j) {
            std::vector<Literal> lits;
            const int m = nl(rng);
            for (int k = 0; k < m; ++k)
                lits.emplace_back(pol(rng) == 1, std::string(1, char('p' + pv(rng))));
            family.push_back(cl(std::move(lits)));
        }
        const bool sc = is_standard_contradiction(family);
        const bool unsat = !oracle::truth_table_sat(family).satisfiable;
        if (sc != unsat) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("begin splits the first clause") {
    // begin(~t, ~t): D1- = {~t}, D1+ = {}
    ExtensionState st = begin(cl({neg("t")}), neg("t"));
    CHECK(st.d_minus(0) == std::vector<Literal>{neg("t")});
    CHECK(st.d_plus(0).empty());
    CHECK(st.entries[0].main == neg("t"));

    // begin(p v q, p): D1+ = {q}
    ExtensionState st2 = begin(cl({pos("p"), pos("q")}), pos("p"));
    CHECK(st2.d_plus(0) == std::vector<Literal>{pos("q")});

    // begin(x1 v x5, x1): D1+ = {x5}
    ExtensionState st3 = begin(cl({pos("x1"), pos("x5")}), pos("x1"));
    CHECK(st3.d_plus(0) == std::vector<Literal>{pos("x5")});

    CHECK_THROWS_AS(begin(cl({pos("p")}), pos("q")), std::invalid_argument);
}

TEST_CASE("three-clause extension separates out ~q") {
    const Clause c1 = cl({neg("p"), neg("q"), pos("t")}, 1);
    const Clause c2 = cl({pos("p"), pos("t")}, 2);
    const Clause c3 = cl({neg("t")}, 3);

    ExtensionState st = begin(c3, neg("t"));
    st = must_extend(st, c2, pos("t"));
    st = must_select(st, pos("p"));
    st = must_extend(st, c1, neg("p"));

    // t in C1 is absorbed: it is the complement of the first main literal ~t
    CHECK(st.entries[2].absorbed == std::vector<Literal>{pos("t")});

    const CscResult res = close(st);
    CHECK(res.clause.same_literals(cl({neg("q")})));

    // the negative parts form exactly the expected contradiction
    CHECK(st.d_minus(0) == std::vector<Literal>{neg("t")});
    const auto d2 = Clause(st.d_minus(1));
    CHECK(d2.same_literals(cl({pos("p"), pos("t")})));
    const auto d3 = Clause(st.d_minus(2));
    CHECK(d3.same_literals(cl({neg("p"), pos("t")})));
}

TEST_CASE("separation depends on the extension order") {
    const Clause c1 = cl({pos("p")}, 1);
    const Clause c2 = cl({neg("p"), neg("q"), pos("r")}, 2);
    const Clause c3 = cl({pos("r"), pos("q")}, 3);
    const Clause c4 = cl({neg("r")}, 4);

    SUBCASE("one order leaves r above the boundary") {
        ExtensionState st = begin(c1, pos("p"));
        st = must_extend(st, c2, neg("p"));
        st = must_select(st, neg("q"));
        st = must_extend(st, c3, pos("q"));
        st = must_select(st, pos("r"));
        st = must_extend(st, c4, neg("r"));
        CHECK(close(st).clause.same_literals(cl({pos("r")})));
    }

    SUBCASE("the reversed order closes to the empty clause") {
        ExtensionState st = begin(c4, neg("r"));
        st = must_extend(st, c3, pos("r"));
        st = must_select(st, pos("q"));
        st = must_extend(st, c2, neg("q"));
        // r in C2 is absorbed (complement of the first main ~r)
        CHECK(st.entries[2].absorbed == std::vector<Literal>{pos("r")});
        st = must_select(st, neg("p"));
        st = must_extend(st, c1, pos("p"));
        CHECK(close(st).clause.empty());
    }

    SUBCASE("order C1, C2, C4 cannot reach C3") {
        ExtensionState st = begin(c1, pos("p"));
        st = must_extend(st, c2, neg("p"));
        // selecting r in C2 forces the next clause to contain ~r; C3 has none
        ExtensionState with_r = must_select(st, pos("r"));
        CHECK_FALSE(with_r.instances[1].contains(neg("r")));
        auto attempt = extend(with_r, c3, pos("r"));
        CHECK(attempt.status == ExtendStatus::no_unifier);
        auto attempt2 = extend(with_r, c3, pos("q"));
        CHECK(attempt2.status == ExtendStatus::no_unifier);
    }
}

TEST_CASE("two-clause close equals binary resolution") {
    // (p v q, ~p v r) on p -> q v r
    ExtensionState st = begin(cl({pos("p"), pos("q")}, 1), pos("p"));
    st = must_extend(st, cl({neg("p"), pos("r")}, 2), neg("p"));
    CHECK(close(st).clause.same_literals(cl({pos("q"), pos("r")})));
}

TEST_CASE("partition invariant on closed states") {
    const Clause c1 = cl({pos("p")}, 1);
    const Clause c2 = cl({neg("p"), neg("q"), pos("r")}, 2);
    const Clause c3 = cl({pos("r"), pos("q")}, 3);
    const Clause c4 = cl({neg("r")}, 4);

    ExtensionState st = begin(c4, neg("r"));
    st = must_extend(st, c3, pos("r"));
    st = must_select(st, pos("q"));
    st = must_extend(st, c2, neg("q"));
    st = must_select(st, neg("p"));
    st = must_extend(st, c1, pos("p"));

    for (std::size_t i = 0; i < st.width(); ++i) {
        const auto minus = st.d_minus(i);
        const auto plus = st.d_plus(i);
        CHECK(!minus.empty());
        // disjoint and covering
        for (const Literal& l : minus) {
            CHECK(st.instances[i].contains(l));
            CHECK(std::find(plus.begin(), plus.end(), l) == plus.end());
        }
        CHECK(minus.size() + plus.size() == st.instances[i].size());
    }
}

TEST_CASE("kernel soundness: participating clauses entail the CSC") {
    // every closed extension over these inputs produces an entailed clause
    const Clause c1 = cl({neg("p"), neg("q"), pos("t")}, 1);
    const Clause c2 = cl({pos("p"), pos("t")}, 2);
    const Clause c3 = cl({neg("t")}, 3);

    ExtensionState st = begin(c3, neg("t"));
    st = must_extend(st, c2, pos("t"));
    st = must_select(st, pos("p"));
    st = must_extend(st, c1, neg("p"));
    const CscResult res = close(st);

    CHECK(oracle::truth_table_entails({c1, c2, c3}, res.clause));
}

TEST_CASE("extension state is a persistent value") {
    const Clause c1 = cl({pos("p"), pos("q")}, 1);
    const Clause c2 = cl({neg("p"), pos("r")}, 2);
    const ExtensionState base = begin(c1, pos("p"));
    const auto extended = extend(base, c2, neg("p"));
    REQUIRE(extended.status == ExtendStatus::ok);
    // the original state is untouched
    CHECK(base.width() == 1);
    CHECK(extended.state->width() == 2);
}

TEST_CASE("repeated participation is allowed") {
    // p v q against ~p v q twice: source ids may repeat
    const Clause c1 = cl({pos("p"), pos("q")}, 1);
    const Clause c2 = cl({neg("p"), neg("q")}, 2);
    ExtensionState st = begin(c1, pos("p"));
    st = must_extend(st, c2, neg("p"));
    st = must_select(st, neg("q"));
    st = must_extend(st, c1, pos("q"));
    CHECK(st.source_ids == std::vector<int>{1, 2, 1});
    const CscResult res = close(st);
    // first participation's q has no earlier main to absorb against
    CHECK(res.clause.same_literals(cl({pos("p"), pos("q")})));
    CHECK(oracle::truth_table_entails({c1, c2}, res.clause));
}

TEST_CASE("main literal selection filters") {
    const Clause c1 = cl({pos("p"), pos("q")}, 1);
    const Clause c2 = cl({neg("p"), pos("q"), pos("r")}, 2);
    ExtensionState st = begin(c1, pos("p"));
    st = must_extend(st, c2, neg("p"));
    // the secondary literal cannot be re-selected as main
    CHECK(select_main(st, neg("p")).status == ExtendStatus::boundary_violation);
    // an atom colliding with an earlier main is rejected
    ExtensionState st2 = begin(c1, pos("q"));
    st2 = must_extend(st2, cl({neg("q"), pos("q2"), neg("p")}, 3), neg("q"));
    CHECK(select_main(st2, pos("q2")).status == ExtendStatus::ok);

    // close on a one-entry state is a contract violation
    CHECK_THROWS_AS(close(begin(c1, pos("p"))), std::invalid_argument);
}

TEST_CASE("random closed extensions always verify as standard contradictions") {
    // build random chains over a small propositional pool and close them;
    // every close must pass (close itself asserts) and entail the CSC
    std::mt19937 rng(5);
    const std::vector<std::string> atoms = {"p", "q", "r", "s"};
    std::uniform_int_distribution<int> nl(1, 3), pol(0, 1), pa(0, 3);

    int closed = 0;
    for (int round = 0; round < 400; ++round) {
        std::vector<Clause> pool;
        for (int j = 0; j < 5; ++j) {
            std::vector<Literal> lits;
            const int m = nl(rng);
            for (int k = 0; k < m; ++k) lits.emplace_back(pol(rng) == 1, atoms[pa(rng)]);
            pool.push_back(Clause(std::move(lits), j + 1));
        }
        // greedy chain: begin anywhere, extend while a complement exists
        const Clause& first = pool[pa(rng) % pool.size()];
        ExtensionState st = begin(first, first.literals()[0]);
        bool have_pending = true;
        for (int step = 0; step < 4 && have_pending; ++step) {
            const Literal target = complement(*st.pending_main());
            bool extended = false;
            for (const Clause& c : pool) {
                if (!c.contains(target)) continue;
                auto r = extend(st, c, target);
                if (r.status != ExtendStatus::ok) continue;
                st = *r.state;
                extended = true;
                break;
            }
            if (!extended) break;
            have_pending = false;
            for (const Literal& l : st.instances.back().literals()) {
                auto r = select_main(st, l);
                if (r.status == ExtendStatus::ok) {
                    st = *r.state;
                    have_pending = true;
                    break;
                }
            }
        }
        if (st.width() < 2) continue;
        const CscResult res = close(st); // close asserts the SC internally
        ++closed;
        std::vector<Clause> parents;
        for (int id : st.source_ids) parents.push_back(pool[id - 1]);
        CHECK(oracle::truth_table_entails(parents, res.clause));
    }
    CHECK(closed > 100);
}

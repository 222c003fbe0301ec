#pragma once

#include <vector>

#include "cse/kernel/extension.hpp"
#include "cse/logic/clause_set.hpp"
#include "cse/logic/unify.hpp"

namespace cse {
namespace oracle {

namespace detail {

inline void collect_in_order(const ExtensionState& st, const std::vector<Clause>& order,
                             std::size_t next, int& var_counter, std::vector<Clause>& out) {
    if (next == order.size()) {
        out.push_back(close(st).clause);
        return;
    }
    // every main-literal choice in the last entry, every entry literal of
    // the next clause in the pinned order
    std::vector<Literal> main_choices;
    if (st.width() == 1 && st.entries[0].main) {
        main_choices.push_back(*st.entries[0].main);
    } else {
        for (const Literal& m : st.instances.back().literals()) main_choices.push_back(m);
    }
    for (const Literal& m : main_choices) {
        ExtensionState with = st;
        if (!(st.width() == 1 && st.entries[0].main)) {
            auto sel = select_main(st, m);
            if (sel.status != ExtendStatus::ok) continue;
            with = *sel.state;
        }
        for (const Literal& y : order[next].literals()) {
            const int saved = var_counter;
            auto [renamed, rho] = rename_clause(order[next], var_counter);
            const Literal y_renamed = apply(rho, y);
            auto theta = unify_complementary(*with.pending_main(), y_renamed);
            if (!theta) {
                var_counter = saved;
                continue;
            }
            auto r = extend(with, renamed, y_renamed, *theta);
            if (r.status != ExtendStatus::ok) {
                var_counter = saved;
                continue;
            }
            collect_in_order(*r.state, order, next + 1, var_counter, out);
        }
    }
}

} // namespace detail

/**
 * Every separation clause reachable with the participating clauses taken
 * in exactly the given order, over all extension-literal choices (most
 * general unifiers in the first-order case). Used to certify negative
 * results: a clause is underivable in an order iff it appears nowhere in
 * the returned list.
 */
inline std::vector<Clause> cscs_in_order(const std::vector<Clause>& order) {
    std::vector<Clause> out;
    if (order.size() < 2) return out;
    int var_counter = 1000; // clear of the inputs' variable names
    for (const Literal& x1 : order[0].literals()) {
        ExtensionState st = begin(order[0], x1);
        detail::collect_in_order(st, order, 1, var_counter, out);
    }
    return out;
}

inline bool derivable_in_order(const std::vector<Clause>& order, const Clause& target) {
    for (const Clause& c : cscs_in_order(order))
        if (c.same_literals(target)) return true;
    return false;
}

struct CounterexampleReport {
    bool associativity_mismatch_confirmed = false;
    bool reordered_chain_blocked = false;      // propositional non-existence
    bool reordered_chain_blocked_fol = false;  // first-order analogue
    Clause nested_one_way;  // separation of the first two, then the unit
    Clause nested_other_way;

    bool all_confirmed() const {
        return associativity_mismatch_confirmed && reordered_chain_blocked &&
               reordered_chain_blocked_fol;
    }
};

/**
 * Regression fixtures for the negative results: nesting separations is not
 * associative, and a clause reachable by a linear resolution chain need
 * not be reachable by one extension taken in the reversed order.
 */
inline CounterexampleReport counterexample_guard() {
    CounterexampleReport report;

    auto pos = [](const std::string& p) { return Literal::pos(p); };
    auto neg = [](const std::string& p) { return Literal::neg(p); };

    {
        // c1 = ~p | ~q | t, c2 = p | t, c4 = ~t
        const Clause c1({neg("p"), neg("q"), pos("t")}, 1);
        const Clause c2({pos("p"), pos("t")}, 2);
        const Clause c4({neg("t")}, 4);

        // ((c1, c2), c4): the two-clause separation of c1, c2 on p, then
        // against ~t
        ExtensionState s12 = begin(c1, neg("p"));
        auto e12 = extend(s12, c2, pos("p"));
        const Clause r12 = close(*e12.state).clause; // ~q | t
        ExtensionState s124 = begin(r12.with_id(5), pos("t"));
        auto e124 = extend(s124, c4, neg("t"));
        report.nested_one_way = close(*e124.state).clause;

        // (c1, (c2, c4)): c2, c4 on t gives p; then against c1
        ExtensionState s24 = begin(c2, pos("t"));
        auto e24 = extend(s24, c4, neg("t"));
        const Clause r24 = close(*e24.state).clause; // p
        ExtensionState s124b = begin(c1, neg("p"));
        auto e124b = extend(s124b, r24.with_id(6), pos("p"));
        report.nested_other_way = close(*e124b.state).clause;

        report.associativity_mismatch_confirmed =
            report.nested_one_way.same_literals(Clause({neg("q")})) &&
            report.nested_other_way.same_literals(Clause({neg("q"), pos("t")})) &&
            !report.nested_one_way.same_literals(report.nested_other_way);
    }

    {
        // a | b | c | d with the three unit negatives: a linear chain
        // reaches d, but no extension in the order (~c, ~b, ~a, abcd) does
        const Clause c1({pos("a"), pos("b"), pos("c"), pos("d")}, 1);
        const Clause c2({neg("a")}, 2);
        const Clause c3({neg("b")}, 3);
        const Clause c4({neg("c")}, 4);
        report.reordered_chain_blocked =
            !derivable_in_order({c4, c3, c2, c1}, Clause({pos("d")}));
    }

    {
        // first-order analogue with unary predicates and constants
        auto vt = [](const std::string& n) { return Term::variable(n); };
        auto ct = [](const std::string& n) { return Term::constant(n); };
        const Clause c1({Literal::pos("p1", {vt("X1")}), Literal::pos("p2", {vt("X2")}),
                         Literal::pos("p3", {vt("X3")}), Literal::pos("p4", {vt("X4")})},
                        1);
        const Clause c2({Literal::neg("p1", {ct("a1")})}, 2);
        const Clause c3({Literal::neg("p2", {ct("a2")})}, 3);
        const Clause c4({Literal::neg("p3", {ct("a3")})}, 4);
        report.reordered_chain_blocked_fol =
            !derivable_in_order({c4, c3, c2, c1}, Clause({Literal::pos("p4", {vt("X4")})}));
    }

    return report;
}

} // namespace oracle
} // namespace cse

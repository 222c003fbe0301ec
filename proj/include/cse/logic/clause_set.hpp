#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cse/logic/clause.hpp"
#include "cse/logic/substitution.hpp"

namespace cse {

/**
 * An ordered collection of clauses with a symbol table. Function and
 * predicate arities are inferred on first use; a later mismatch is an error.
 */
class ClauseSet {
public:
    ClauseSet() = default;

    /// Adds a clause, assigning the next id when the clause carries none.
    /// Returns the stored id.
    int add(Clause c) {
        for (const Literal& l : c.literals()) {
            note_predicate(l.predicate(), l.arity());
            for (const Term& t : l.args()) note_term_symbols(t);
        }
        int id = c.id();
        if (id == 0) id = next_id_++;
        else if (id >= next_id_) next_id_ = id + 1;
        clauses_.push_back(c.with_id(id));
        return id;
    }

    const std::vector<Clause>& clauses() const { return clauses_; }
    bool empty() const { return clauses_.empty(); }
    std::size_t size() const { return clauses_.size(); }
    const Clause& operator[](std::size_t i) const { return clauses_[i]; }

    const Clause* find(int id) const {
        for (const Clause& c : clauses_)
            if (c.id() == id) return &c;
        return nullptr;
    }

    int next_id() const { return next_id_; }

    const std::map<std::string, std::size_t>& predicate_arities() const { return predicate_arities_; }
    const std::map<std::string, std::size_t>& function_arities() const { return function_arities_; }

    /// Constant symbols (0-ary functions) seen anywhere in the set.
    std::vector<Term> constants() const {
        std::vector<Term> out;
        for (const auto& [name, arity] : function_arities_)
            if (arity == 0) out.push_back(Term::constant(name));
        return out;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const Clause& c : clauses_)
            for (const Literal& l : c.literals()) l.collect_variables(vs);
        return vs;
    }

    bool is_propositional() const {
        for (const auto& [name, arity] : predicate_arities_)
            if (arity != 0) return false;
        return variables().empty();
    }

private:
    void note_predicate(const std::string& name, std::size_t arity) {
        auto [it, inserted] = predicate_arities_.emplace(name, arity);
        if (!inserted && it->second != arity)
            throw std::invalid_argument("predicate arity mismatch for '" + name + "'");
    }

    void note_term_symbols(const Term& t) {
        if (t.is_variable()) return;
        auto [it, inserted] = function_arities_.emplace(t.name(), t.arity());
        if (!inserted && it->second != t.arity())
            throw std::invalid_argument("function arity mismatch for '" + t.name() + "'");
        for (const Term& a : t.args()) note_term_symbols(a);
    }

    std::vector<Clause> clauses_;
    std::map<std::string, std::size_t> predicate_arities_;
    std::map<std::string, std::size_t> function_arities_;
    int next_id_ = 1;
};

/**
 * Renames one clause so its variables are X<counter>, X<counter+1>, ... in
 * order of first occurrence. Returns the renamed clause together with the
 * renaming as a substitution over the original variables.
 */
inline std::pair<Clause, Substitution> rename_clause(const Clause& c, int& counter) {
    // variables in first-occurrence order, so renaming is deterministic
    std::vector<std::string> order;
    std::set<std::string> seen;
    struct Walk {
        std::vector<std::string>& order;
        std::set<std::string>& seen;
        void term(const Term& t) {
            if (t.is_variable()) {
                if (seen.insert(t.name()).second) order.push_back(t.name());
                return;
            }
            for (const Term& a : t.args()) term(a);
        }
    } walk{order, seen};
    for (const Literal& l : c.literals())
        for (const Term& t : l.args()) walk.term(t);

    Substitution renaming;
    for (const std::string& v : order)
        renaming.bind(v, Term::variable("X" + std::to_string(counter++)));
    return {apply(renaming, c), renaming};
}

/// Clause-by-clause bijective renaming; afterwards no two clauses share a
/// variable name.
inline ClauseSet rename_apart(const ClauseSet& s) {
    ClauseSet out;
    int counter = 1;
    for (const Clause& c : s.clauses()) out.add(rename_clause(c, counter).first);
    return out;
}

} // namespace cse

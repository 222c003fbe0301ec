#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cse/logic/literal.hpp"
#include "cse/logic/substitution.hpp"
#include "cse/logic/term.hpp"

namespace cse {

namespace detail {

inline bool unify_step(const Term& a, const Term& b, Substitution& mgu) {
    const Term s = apply(mgu, a);
    const Term t = apply(mgu, b);
    if (s == t) return true;
    if (s.is_variable()) {
        if (t.contains_variable(s.name())) return false; // occurs check
        mgu = compose(mgu, Substitution::of(s.name(), t));
        return true;
    }
    if (t.is_variable()) {
        if (s.contains_variable(t.name())) return false;
        mgu = compose(mgu, Substitution::of(t.name(), s));
        return true;
    }
    if (s.name() != t.name() || s.arity() != t.arity()) return false;
    for (std::size_t i = 0; i < s.arity(); ++i)
        if (!unify_step(s.args()[i], t.args()[i], mgu)) return false;
    return true;
}

} // namespace detail

/// Most general unifier of two term lists, or absent. The result is
/// idempotent and binds only variables occurring in the inputs.
inline std::optional<Substitution> unify_term_lists(const std::vector<Term>& xs,
                                                    const std::vector<Term>& ys) {
    if (xs.size() != ys.size()) return std::nullopt;
    Substitution mgu;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!detail::unify_step(xs[i], ys[i], mgu)) return std::nullopt;
    return mgu;
}

inline std::optional<Substitution> unify_terms(const Term& a, const Term& b) {
    return unify_term_lists({a}, {b});
}

/**
 * Unifies l1 against the complement of l2. Expects the literals to come
 * from variable-disjoint clauses; the MGU is returned split into the two
 * clauses' views, keyed by which literal's variables a binding instantiates.
 *
 * Absence (same polarity, different predicate, clash) is a value, not an
 * error. apply(first, l1) == complement(apply(second, l2)) holds for every
 * returned pair.
 */
inline std::optional<std::pair<Substitution, Substitution>>
unify_complementary(const Literal& l1, const Literal& l2) {
    if (l1.positive() == l2.positive()) return std::nullopt;
    if (l1.predicate() != l2.predicate()) return std::nullopt;
    auto mgu = unify_term_lists(l1.args(), l2.args());
    if (!mgu) return std::nullopt;
    const std::set<std::string> left = l1.variables();
    Substitution for_l1 = mgu->restricted([&](const std::string& v) { return left.count(v) > 0; });
    Substitution for_l2 = mgu->restricted([&](const std::string& v) { return left.count(v) == 0; });
    return std::make_pair(std::move(for_l1), std::move(for_l2));
}

/**
 * One-way matching environment: binds only pattern variables so that the
 * instantiated pattern equals the target. Identity bindings are tracked so
 * repeated variables stay consistent.
 */
class MatchEnv {
public:
    bool term(const Term& pattern, const Term& target) {
        if (pattern.is_variable()) {
            auto it = bound_.find(pattern.name());
            if (it != bound_.end()) return it->second == target;
            bound_.emplace(pattern.name(), target);
            return true;
        }
        if (!target.is_function() || pattern.name() != target.name() ||
            pattern.arity() != target.arity())
            return false;
        for (std::size_t i = 0; i < pattern.arity(); ++i)
            if (!term(pattern.args()[i], target.args()[i])) return false;
        return true;
    }

    bool literal(const Literal& pattern, const Literal& target) {
        if (pattern.positive() != target.positive() ||
            pattern.predicate() != target.predicate() || pattern.arity() != target.arity())
            return false;
        for (std::size_t i = 0; i < pattern.arity(); ++i)
            if (!term(pattern.args()[i], target.args()[i])) return false;
        return true;
    }

    Substitution substitution() const {
        Substitution s;
        for (const auto& [v, t] : bound_) s.bind(v, t);
        return s;
    }

private:
    std::map<std::string, Term> bound_;
};

inline std::optional<Substitution> match_literal(const Literal& pattern, const Literal& target) {
    MatchEnv env;
    if (!env.literal(pattern, target)) return std::nullopt;
    return env.substitution();
}

} // namespace cse

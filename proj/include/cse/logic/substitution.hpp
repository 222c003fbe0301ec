#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cse/logic/literal.hpp"
#include "cse/logic/term.hpp"

namespace cse {

/**
 * Finite map from variable names to terms.
 *
 * A binding x -> t with x occurring in t is rejected at construction;
 * trivial bindings x -> x are dropped. Bindings built through unify/compose
 * stay idempotent: applying twice equals applying once.
 */
class Substitution {
public:
    Substitution() = default;

    static Substitution identity() { return Substitution(); }

    static Substitution of(const std::string& var, Term t) {
        Substitution s;
        s.bind(var, std::move(t));
        return s;
    }

    void bind(const std::string& var, Term t) {
        if (t.is_variable() && t.name() == var) return;
        if (t.contains_variable(var))
            throw std::invalid_argument("occurs check violated: " + var + " -> " + t.to_string());
        bindings_.insert_or_assign(var, std::move(t));
    }

    const Term* lookup(const std::string& var) const {
        auto it = bindings_.find(var);
        return it == bindings_.end() ? nullptr : &it->second;
    }

    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }
    const std::map<std::string, Term>& bindings() const { return bindings_; }

    bool operator==(const Substitution& o) const { return bindings_ == o.bindings_; }
    bool operator!=(const Substitution& o) const { return bindings_ != o.bindings_; }

    /// Bindings whose variable passes the filter.
    template <typename Pred>
    Substitution restricted(Pred keep) const {
        Substitution out;
        for (const auto& [v, t] : bindings_)
            if (keep(v)) out.bindings_.insert_or_assign(v, t);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [v, t] : bindings_) {
            if (!first) s += ", ";
            first = false;
            s += t.to_string() + "/" + v;
        }
        return s + "}";
    }

private:
    std::map<std::string, Term> bindings_;
};

inline Term apply(const Substitution& s, const Term& t) {
    if (t.is_variable()) {
        if (const Term* bound = s.lookup(t.name())) return *bound;
        return t;
    }
    if (t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(apply(s, a));
    return Term::function(t.name(), std::move(args));
}

inline Literal apply(const Substitution& s, const Literal& l) {
    if (l.args().empty()) return l;
    std::vector<Term> args;
    args.reserve(l.args().size());
    for (const Term& a : l.args()) args.push_back(apply(s, a));
    return Literal(l.positive(), l.predicate(), std::move(args));
}

/**
 * Sequential composition: apply(compose(s1, s2), t) == apply(s2, apply(s1, t)).
 * Throws if the composed bindings would violate the occurs check.
 */
inline Substitution compose(const Substitution& s1, const Substitution& s2) {
    Substitution out;
    for (const auto& [v, t] : s1.bindings()) out.bind(v, apply(s2, t));
    for (const auto& [v, t] : s2.bindings())
        if (!s1.lookup(v)) out.bind(v, t);
    return out;
}

} // namespace cse

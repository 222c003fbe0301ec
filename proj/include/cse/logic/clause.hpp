#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cse/logic/literal.hpp"
#include "cse/logic/substitution.hpp"

namespace cse {

/**
 * A duplicate-free set of literals, kept sorted so literal-set equality is
 * plain vector equality. The empty clause is falsum.
 */
class Clause {
public:
    struct Origin {
        bool derived = false;
        int step_id = 0; // id of the deduction step that produced this clause

        static Origin input() { return {}; }
        static Origin from_step(int step_id) { return {true, step_id}; }
    };

    Clause() = default;

    explicit Clause(std::vector<Literal> literals, int id = 0, Origin origin = Origin::input())
        : literals_(std::move(literals)), id_(id), origin_(origin) {
        std::sort(literals_.begin(), literals_.end());
        literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
    }

    const std::vector<Literal>& literals() const { return literals_; }
    bool empty() const { return literals_.empty(); }
    std::size_t size() const { return literals_.size(); }

    int id() const { return id_; }
    const Origin& origin() const { return origin_; }

    Clause with_id(int id) const {
        Clause c = *this;
        c.id_ = id;
        return c;
    }
    Clause with_origin(Origin o) const {
        Clause c = *this;
        c.origin_ = o;
        return c;
    }

    bool contains(const Literal& l) const {
        return std::binary_search(literals_.begin(), literals_.end(), l);
    }

    /// Literal-set equality; ids and origins are bookkeeping, not identity.
    bool same_literals(const Clause& o) const { return literals_ == o.literals_; }

    Clause without(const std::vector<Literal>& drop) const {
        std::vector<Literal> kept;
        kept.reserve(literals_.size());
        for (const Literal& l : literals_)
            if (std::find(drop.begin(), drop.end(), l) == drop.end()) kept.push_back(l);
        return Clause(std::move(kept), id_, origin_);
    }

    bool is_ground() const {
        for (const Literal& l : literals_)
            if (!l.is_ground()) return false;
        return true;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const Literal& l : literals_) l.collect_variables(vs);
        return vs;
    }

    std::size_t max_term_depth() const {
        std::size_t d = 0;
        for (const Literal& l : literals_) d = std::max(d, l.max_term_depth());
        return d;
    }

    std::string to_string() const {
        if (literals_.empty()) return "[]";
        std::string s;
        for (std::size_t i = 0; i < literals_.size(); ++i) {
            if (i) s += " | ";
            s += literals_[i].to_string();
        }
        return s;
    }

private:
    std::vector<Literal> literals_;
    int id_ = 0;
    Origin origin_;
};

/// Rewrites every literal under s; duplicates arising from the
/// instantiation are merged by clause construction.
inline Clause apply(const Substitution& s, const Clause& c) {
    if (s.empty()) return c;
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const Literal& l : c.literals()) lits.push_back(apply(s, l));
    return Clause(std::move(lits), c.id(), c.origin());
}

} // namespace cse

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cse/logic/term.hpp"

namespace cse {

/**
 * A predicate applied to terms, or its negation. Propositional atoms are
 * the 0-ary case.
 */
class Literal {
public:
    Literal(bool positive, std::string predicate, std::vector<Term> args = {})
        : positive_(positive), predicate_(std::move(predicate)), args_(std::move(args)) {}

    static Literal pos(std::string predicate, std::vector<Term> args = {}) {
        return Literal(true, std::move(predicate), std::move(args));
    }
    static Literal neg(std::string predicate, std::vector<Term> args = {}) {
        return Literal(false, std::move(predicate), std::move(args));
    }

    bool positive() const { return positive_; }
    const std::string& predicate() const { return predicate_; }
    const std::vector<Term>& args() const { return args_; }
    std::size_t arity() const { return args_.size(); }

    Literal complement() const { return Literal(!positive_, predicate_, args_); }

    /// Same predicate and arguments, either polarity.
    bool same_atom(const Literal& o) const {
        return predicate_ == o.predicate_ && args_ == o.args_;
    }
    bool is_complement_of(const Literal& o) const {
        return positive_ != o.positive_ && same_atom(o);
    }

    bool is_ground() const {
        for (const Term& t : args_)
            if (!t.is_ground()) return false;
        return true;
    }

    std::size_t max_term_depth() const {
        std::size_t d = 0;
        for (const Term& t : args_) d = std::max(d, t.depth());
        return d;
    }

    void collect_variables(std::set<std::string>& out) const {
        for (const Term& t : args_) t.collect_variables(out);
    }
    std::set<std::string> variables() const {
        std::set<std::string> vs;
        collect_variables(vs);
        return vs;
    }

    int compare(const Literal& o) const {
        if (int c = predicate_.compare(o.predicate_); c != 0) return c < 0 ? -1 : 1;
        if (positive_ != o.positive_) return positive_ ? -1 : 1;
        const std::size_t n = std::min(args_.size(), o.args_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = args_[i].compare(o.args_[i]); c != 0) return c;
        if (args_.size() != o.args_.size())
            return args_.size() < o.args_.size() ? -1 : 1;
        return 0;
    }

    bool operator==(const Literal& o) const { return compare(o) == 0; }
    bool operator!=(const Literal& o) const { return compare(o) != 0; }
    bool operator<(const Literal& o) const { return compare(o) < 0; }

    std::string to_string() const {
        std::string s = positive_ ? "" : "~";
        s += predicate_;
        if (!args_.empty()) {
            s += '(';
            for (std::size_t i = 0; i < args_.size(); ++i) {
                if (i) s += ',';
                s += args_[i].to_string();
            }
            s += ')';
        }
        return s;
    }

private:
    bool positive_;
    std::string predicate_;
    std::vector<Term> args_;
};

/// Polarity flip; predicate and arguments unchanged.
inline Literal complement(const Literal& l) { return l.complement(); }

} // namespace cse

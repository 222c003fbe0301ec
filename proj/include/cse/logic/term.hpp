#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cse {

/**
 * First-order term: a variable or a function application.
 *
 * Constants are the 0-ary function case; Term::constant("a") and
 * Term::function("a", {}) build the same value.
 */
class Term {
public:
    enum class Kind { variable, function };

    static Term variable(std::string name) {
        return Term(Kind::variable, std::move(name), {});
    }
    static Term constant(std::string name) {
        return Term(Kind::function, std::move(name), {});
    }
    static Term function(std::string name, std::vector<Term> args) {
        return Term(Kind::function, std::move(name), std::move(args));
    }

    Kind kind() const { return kind_; }
    bool is_variable() const { return kind_ == Kind::variable; }
    bool is_function() const { return kind_ == Kind::function; }
    bool is_constant() const { return kind_ == Kind::function && args_.empty(); }

    const std::string& name() const { return name_; }
    const std::vector<Term>& args() const { return args_; }
    std::size_t arity() const { return args_.size(); }

    bool is_ground() const {
        if (is_variable()) return false;
        for (const Term& a : args_)
            if (!a.is_ground()) return false;
        return true;
    }

    /// Nesting depth; variables and constants have depth 1.
    std::size_t depth() const {
        std::size_t d = 0;
        for (const Term& a : args_) d = std::max(d, a.depth());
        return d + 1;
    }

    bool contains_variable(const std::string& var) const {
        if (is_variable()) return name_ == var;
        for (const Term& a : args_)
            if (a.contains_variable(var)) return true;
        return false;
    }

    void collect_variables(std::set<std::string>& out) const {
        if (is_variable()) {
            out.insert(name_);
            return;
        }
        for (const Term& a : args_) a.collect_variables(out);
    }

    int compare(const Term& o) const {
        if (kind_ != o.kind_) return kind_ == Kind::variable ? -1 : 1;
        if (int c = name_.compare(o.name_); c != 0) return c < 0 ? -1 : 1;
        const std::size_t n = std::min(args_.size(), o.args_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = args_[i].compare(o.args_[i]); c != 0) return c;
        if (args_.size() != o.args_.size())
            return args_.size() < o.args_.size() ? -1 : 1;
        return 0;
    }

    bool operator==(const Term& o) const { return compare(o) == 0; }
    bool operator!=(const Term& o) const { return compare(o) != 0; }
    bool operator<(const Term& o) const { return compare(o) < 0; }

    std::string to_string() const {
        std::string s = name_;
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
    Term(Kind kind, std::string name, std::vector<Term> args)
        : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

    Kind kind_;
    std::string name_;
    std::vector<Term> args_;
};

} // namespace cse

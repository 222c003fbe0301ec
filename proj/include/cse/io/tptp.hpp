#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "cse/io/dimacs.hpp" // ParseError, ProblemFile
#include "cse/logic/clause_set.hpp"

namespace cse {
namespace io {

struct UnsupportedFeatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class TptpLexer {
public:
    explicit TptpLexer(const std::string& text) : text_(text) {}

    void skip_space() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                if (text_[pos_] == '\n') ++line_;
                ++pos_;
            }
            if (pos_ < text_.size() && text_[pos_] == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            return;
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", line_);
        ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected an identifier", line_);
        return text_.substr(start, pos_ - start);
    }

    int line() const { return line_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

inline Term parse_term(TptpLexer& lex) {
    const std::string name = lex.word();
    if (std::isupper(static_cast<unsigned char>(name[0]))) return Term::variable(name);
    if (!lex.accept('(')) return Term::constant(name);
    std::vector<Term> args;
    args.push_back(parse_term(lex));
    while (lex.accept(',')) args.push_back(parse_term(lex));
    lex.expect(')');
    return Term::function(name, std::move(args));
}

inline Literal parse_literal(TptpLexer& lex) {
    const bool negated = lex.accept('~');
    const Term atom = parse_term(lex);
    if (lex.peek() == '=' || lex.peek() == '!')
        throw UnsupportedFeatureError("equality atoms are not supported (line " +
                                      std::to_string(lex.line()) + ")");
    if (atom.is_variable())
        throw ParseError("predicate must start lowercase: " + atom.name(), lex.line());
    return Literal(!negated, atom.name(), atom.args());
}

} // namespace detail

/**
 * TPTP clause-normal-form subset: lines of
 * `cnf(name, role, literal | ... | literal).` with optional parentheses
 * around the disjunction. Uppercase-initial names are variables, scoped to
 * their clause. Equality and full first-order formulas are out of the
 * subset and reported as unsupported features rather than parse errors.
 */
inline ProblemFile parse_tptp_cnf(const std::string& text, std::string name = "") {
    ProblemFile out;
    out.format = Format::tptp_cnf;
    out.name = std::move(name);

    detail::TptpLexer lex(text);
    ClauseSet parsed;
    while (!lex.eof()) {
        const std::string keyword = lex.word();
        if (keyword == "fof" || keyword == "tff" || keyword == "thf")
            throw UnsupportedFeatureError(keyword + " formulas are not supported (line " +
                                          std::to_string(lex.line()) + ")");
        if (keyword != "cnf")
            throw ParseError("expected 'cnf', found '" + keyword + "'", lex.line());
        lex.expect('(');
        const std::string clause_name = lex.word();
        lex.expect(',');
        lex.word(); // role, recorded nowhere: not semantically used
        lex.expect(',');
        const bool parenthesized = lex.accept('(');
        std::vector<Literal> literals;
        if (lex.accept('$')) {
            if (lex.word() != "false")
                throw ParseError("unknown $-token", lex.line());
        } else {
            literals.push_back(detail::parse_literal(lex));
            while (lex.accept('|')) literals.push_back(detail::parse_literal(lex));
        }
        if (parenthesized) lex.expect(')');
        lex.expect(')');
        lex.expect('.');
        (void)clause_name;
        parsed.add(Clause(std::move(literals)));
    }

    // per-clause fresh variables: scope each clause's names apart
    out.clauses = rename_apart(parsed);
    return out;
}

inline std::string serialize_tptp(const ClauseSet& s, const std::string& role = "axiom") {
    std::string out;
    int index = 1;
    for (const Clause& c : s.clauses()) {
        out += "cnf(c" + std::to_string(index++) + ", " + role + ", ";
        if (c.empty()) {
            out += "$false";
        } else {
            const auto& lits = c.literals();
            for (std::size_t i = 0; i < lits.size(); ++i) {
                if (i) out += " | ";
                out += lits[i].to_string();
            }
        }
        out += ").\n";
    }
    return out;
}

/// Format detection: a DIMACS header wins, otherwise TPTP.
inline Format sniff_format(const std::string& text) {
    for (std::size_t i = 0; i < text.size();) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        if (text[i] == 'c' || text[i] == '%') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (text[i] == 'p') return Format::dimacs;
        return Format::tptp_cnf;
    }
    return Format::tptp_cnf;
}

inline ProblemFile parse_problem(const std::string& text, const std::string& name = "") {
    return sniff_format(text) == Format::dimacs ? parse_dimacs(text, name)
                                                : parse_tptp_cnf(text, name);
}

} // namespace io
} // namespace cse

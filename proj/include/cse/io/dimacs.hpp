#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cse/logic/clause_set.hpp"

namespace cse {
namespace io {

struct ParseError : std::runtime_error {
    int line;
    ParseError(std::string msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + std::move(msg)),
          line(line) {}
};

enum class Format { dimacs, tptp_cnf };

struct ProblemFile {
    Format format = Format::dimacs;
    ClauseSet clauses;
    std::string name;
    int declared_variables = 0;
    int declared_clauses = 0;
    std::vector<std::string> warnings;
};

/**
 * DIMACS CNF: comment lines start with 'c', the header is
 * "p cnf <variables> <clauses>", clauses are signed integers terminated
 * by 0. A count mismatch against the header is recorded as a warning, not
 * an error.
 */
inline ProblemFile parse_dimacs(const std::string& text, std::string name = "") {
    ProblemFile out;
    out.format = Format::dimacs;
    out.name = std::move(name);

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<Literal> pending;
    int max_var = 0;
    int clause_count = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            if (header_seen) throw ParseError("duplicate header", line_no);
            std::string kind;
            if (!(ls >> kind) || kind != "cnf")
                throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
            if (!(ls >> out.declared_variables >> out.declared_clauses))
                throw ParseError("malformed header counts", line_no);
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("clause data before 'p cnf' header", line_no);

        ls.clear();
        ls.str(line);
        long value;
        while (ls >> value) {
            if (value == 0) {
                out.clauses.add(Clause(std::move(pending)));
                pending.clear();
                ++clause_count;
                continue;
            }
            const long var = value < 0 ? -value : value;
            max_var = std::max<int>(max_var, static_cast<int>(var));
            pending.emplace_back(value > 0, "v" + std::to_string(var));
        }
        if (!ls.eof()) throw ParseError("non-integer token in clause data", line_no);
    }
    if (!header_seen) throw ParseError("missing 'p cnf' header", 1);
    if (!pending.empty())
        throw ParseError("clause not terminated by 0", line_no);

    if (clause_count != out.declared_clauses)
        out.warnings.push_back("header declares " + std::to_string(out.declared_clauses) +
                               " clauses, file has " + std::to_string(clause_count));
    if (max_var > out.declared_variables)
        out.warnings.push_back("header declares " + std::to_string(out.declared_variables) +
                               " variables, file uses v" + std::to_string(max_var));
    return out;
}

inline std::string serialize_dimacs(const ClauseSet& s) {
    int max_var = 0;
    for (const auto& [name, arity] : s.predicate_arities())
        if (name.size() > 1 && name[0] == 'v')
            max_var = std::max(max_var, std::atoi(name.c_str() + 1));
    std::string out = "p cnf " + std::to_string(max_var) + " " + std::to_string(s.size()) + "\n";
    for (const Clause& c : s.clauses()) {
        for (const Literal& l : c.literals()) {
            const int var = std::atoi(l.predicate().c_str() + 1);
            out += (l.positive() ? "" : "-") + std::to_string(var) + " ";
        }
        out += "0\n";
    }
    return out;
}

} // namespace io
} // namespace cse

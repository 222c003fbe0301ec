#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cse/engine/fol_engine.hpp"
#include "cse/engine/prop_engine.hpp"
#include "cse/io/dimacs.hpp"
#include "cse/io/documents.hpp"
#include "cse/io/tptp.hpp"
#include "cse/oracle/proof_checker.hpp"

using namespace cse;

namespace {

bool sets_equal(const ClauseSet& a, const ClauseSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].same_literals(b[i])) return false;
    return true;
}

} // namespace

TEST_CASE("dimacs basics") {
    const auto pf = io::parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n");
    REQUIRE(pf.clauses.size() == 2);
    CHECK(pf.clauses[0].same_literals(Clause({Literal::pos("v1"), Literal::neg("v2")})));
    CHECK(pf.clauses[1].same_literals(Clause({Literal::pos("v2")})));
    CHECK(pf.warnings.empty());

    const auto commented = io::parse_dimacs("c comment\np cnf 1 1\n1 0\n");
    REQUIRE(commented.clauses.size() == 1);
    CHECK(commented.clauses[0].same_literals(Clause({Literal::pos("v1")})));
}

TEST_CASE("dimacs count mismatch warns but parses") {
    const auto pf = io::parse_dimacs("p cnf 2 3\n1 0\n2 0\n");
    CHECK(pf.clauses.size() == 2);
    REQUIRE(pf.warnings.size() == 1);
    CHECK(pf.warnings[0].find("3 clauses") != std::string::npos);
}

TEST_CASE("dimacs errors carry line numbers") {
    CHECK_THROWS_AS(io::parse_dimacs("p dnf 1 1\n1 0\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_dimacs("p cnf 1 1\n1 x 0\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_dimacs("p cnf 1 1\n1\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_dimacs("1 0\n"), io::ParseError);
    try {
        io::parse_dimacs("p cnf 1 1\n1 x 0\n");
    } catch (const io::ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("tptp cnf subset") {
    const auto pf = io::parse_tptp_cnf("cnf(c1, axiom, p(X) | ~q(X)).\n");
    REQUIRE(pf.clauses.size() == 1);
    REQUIRE(pf.clauses[0].size() == 2);
    // one variable shared by both literals, renamed canonically
    CHECK(pf.clauses[0].variables().size() == 1);

    // per-clause variable scoping: X in two clauses is two variables
    const auto two = io::parse_tptp_cnf("cnf(c1, axiom, p(X)).\ncnf(c2, axiom, q(X)).\n");
    REQUIRE(two.clauses.size() == 2);
    for (const auto& v : two.clauses[0].variables())
        CHECK(two.clauses[1].variables().count(v) == 0);
}

TEST_CASE("tptp parses the five-clause relational set") {
    const std::string text = "cnf(c1, axiom, p(a1)).\n"
                             "cnf(c2, axiom, ~d(X21) | l(a1, X22)).\n"
                             "cnf(c3, axiom, ~p(X31) | ~q(X32) | ~l(X31, X32)).\n"
                             "cnf(c4, axiom, d(a2)).\n"
                             "cnf(c5, axiom, q(a2)).\n";
    const auto pf = io::parse_tptp_cnf(text);
    REQUIRE(pf.clauses.size() == 5);
    CHECK(pf.clauses[0].same_literals(Clause({Literal::pos("p", {Term::constant("a1")})})));
    CHECK(pf.clauses[2].size() == 3);
    CHECK(pf.clauses.predicate_arities().at("l") == 2);
}

TEST_CASE("tptp unsupported features are explicit") {
    CHECK_THROWS_AS(io::parse_tptp_cnf("cnf(c1, axiom, X = Y).\n"), io::UnsupportedFeatureError);
    CHECK_THROWS_AS(io::parse_tptp_cnf("fof(f1, axiom, ![X]: p(X)).\n"),
                    io::UnsupportedFeatureError);
    CHECK_THROWS_AS(io::parse_tptp_cnf("cnf(c1, axiom, p(a) | b = c).\n"),
                    io::UnsupportedFeatureError);
}

TEST_CASE("round trip: generated corpus reparses identically") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> nc(1, 6), nl(1, 3), pv(0, 3), pol(0, 1);

    for (int i = 0; i < 100; ++i) {
        ClauseSet s;
        const int n = nc(rng);
        for (int j = 0; j < n; ++j) {
            std::vector<Literal> lits;
            const int m = nl(rng);
            for (int k = 0; k < m; ++k)
                lits.emplace_back(pol(rng) == 1, "v" + std::to_string(pv(rng) + 1));
            s.add(Clause(std::move(lits)));
        }
        const auto parsed = io::parse_dimacs(io::serialize_dimacs(s));
        CHECK(sets_equal(parsed.clauses, s));
        const auto reparsed = io::parse_dimacs(io::serialize_dimacs(parsed.clauses));
        CHECK(sets_equal(reparsed.clauses, parsed.clauses));
    }

    // first-order corpus with constants, functions, variables
    std::uniform_int_distribution<int> tkind(0, 2), pred(0, 2);
    for (int i = 0; i < 100; ++i) {
        ClauseSet s;
        const int n = nc(rng);
        for (int j = 0; j < n; ++j) {
            std::vector<Literal> lits;
            const int m = nl(rng);
            for (int k = 0; k < m; ++k) {
                const std::string p = "p" + std::to_string(pred(rng));
                std::vector<Term> args;
                switch (tkind(rng)) {
                    case 0: args.push_back(Term::variable("X" + std::to_string(k + 1))); break;
                    case 1: args.push_back(Term::constant("a")); break;
                    default:
                        args.push_back(
                            Term::function("f", {Term::variable("X" + std::to_string(k + 1))}));
                }
                lits.emplace_back(pol(rng) == 1, p, std::move(args));
            }
            s.add(Clause(std::move(lits)));
        }
        const ClauseSet canonical = rename_apart(s);
        const auto parsed = io::parse_tptp_cnf(io::serialize_tptp(canonical));
        const auto reparsed = io::parse_tptp_cnf(io::serialize_tptp(parsed.clauses));
        CHECK(sets_equal(reparsed.clauses, parsed.clauses));
    }
}

TEST_CASE("proof documents round trip losslessly") {
    const auto pf = io::parse_dimacs("p cnf 5 6\n1 5 0\n-1 2 0\n-1 -2 3 0\n-1 -3 4 0\n"
                                     "-1 -2 -4 0\n1 -5 0\n");
    const PropVerdict v = saturate(pf.clauses);
    REQUIRE(v.kind == VerdictKind::unsat);
    REQUIRE(oracle::check_proof(v.proof, pf.clauses).ok);

    const std::string doc = io::proof_to_json(v.proof, "chain6", "prop");
    const Proof parsed = io::proof_from_json(doc);
    CHECK(oracle::check_proof(parsed, pf.clauses).ok ==
          oracle::check_proof(v.proof, pf.clauses).ok);
    // a second serialization of the parsed proof is byte-identical
    CHECK(io::proof_to_json(parsed, "chain6", "prop") == doc);
}

TEST_CASE("proof documents with substitutions round trip") {
    const std::string text = "cnf(c1, axiom, p(a1)).\n"
                             "cnf(c2, axiom, ~d(X21) | l(a1, X22)).\n"
                             "cnf(c3, axiom, ~p(X31) | ~q(X32) | ~l(X31, X32)).\n"
                             "cnf(c4, axiom, d(a2)).\n"
                             "cnf(c5, axiom, q(a2)).\n";
    const auto pf = io::parse_tptp_cnf(text);
    const FolVerdict v = saturate_fol(pf.clauses);
    REQUIRE(v.kind == VerdictKind::unsat);
    const std::string doc = io::proof_to_json(v.proof, "rel5", "fol");
    const Proof parsed = io::proof_from_json(doc);
    CHECK(oracle::check_proof(parsed, pf.clauses).ok);
    CHECK(io::proof_to_json(parsed, "rel5", "fol") == doc);
}

TEST_CASE("engine runs are deterministic documents") {
    const auto pf = io::parse_dimacs("p cnf 5 6\n1 5 0\n-1 2 0\n-1 -2 3 0\n-1 -3 4 0\n"
                                     "-1 -2 -4 0\n1 -5 0\n");
    StrategyConfig cfg;
    cfg.seed = 7;
    const PropVerdict a = saturate(pf.clauses, cfg);
    const PropVerdict b = saturate(pf.clauses, cfg);
    REQUIRE(a.kind == VerdictKind::unsat);
    CHECK(io::proof_to_json(a.proof, "x", "prop") == io::proof_to_json(b.proof, "x", "prop"));
}

TEST_CASE("format sniffing") {
    CHECK(io::sniff_format("c hi\np cnf 1 1\n1 0\n") == io::Format::dimacs);
    CHECK(io::sniff_format("% hi\ncnf(c1, axiom, p).\n") == io::Format::tptp_cnf);
    CHECK(io::sniff_format("cnf(c1, axiom, p).\n") == io::Format::tptp_cnf);
}

TEST_CASE("model documents") {
    const std::vector<Literal> model = {Literal::pos("v1"), Literal::neg("v2")};
    const std::string doc = io::model_to_json(model, "toy");
    const auto parsed = io::model_from_json(doc);
    CHECK(parsed == model);
}

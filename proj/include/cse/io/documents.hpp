#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cse/engine/proof.hpp"
#include "cse/io/tptp.hpp"

namespace cse {
namespace io {

inline constexpr const char* kProofFormatTag = "cse-proof/1";
inline constexpr const char* kModelFormatTag = "cse-model/1";

namespace detail {

// literals and terms travel as TPTP-style text; the lexer reads them back
inline Literal literal_from_text(const std::string& text) {
    TptpLexer lex(text);
    return parse_literal(lex);
}

inline Term term_from_text(const std::string& text) {
    TptpLexer lex(text);
    return parse_term(lex);
}

inline nlohmann::json clause_to_json(const Clause& c) {
    nlohmann::json lits = nlohmann::json::array();
    for (const Literal& l : c.literals()) lits.push_back(l.to_string());
    return lits;
}

inline Clause clause_from_json(const nlohmann::json& j, int id) {
    std::vector<Literal> lits;
    for (const auto& item : j) lits.push_back(literal_from_text(item.get<std::string>()));
    return Clause(std::move(lits), id);
}

inline nlohmann::json substitution_to_json(const Substitution& s) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [var, term] : s.bindings()) j[var] = term.to_string();
    return j;
}

inline Substitution substitution_from_json(const nlohmann::json& j) {
    Substitution s;
    for (auto it = j.begin(); it != j.end(); ++it)
        s.bind(it.key(), term_from_text(it.value().get<std::string>()));
    return s;
}

} // namespace detail

/// Serializes a refutation with full provenance. Key order is canonical,
/// so equal proofs serialize byte-identically.
inline std::string proof_to_json(const Proof& proof, const std::string& problem_name,
                                 const std::string& mode) {
    nlohmann::ordered_json doc;
    doc["format"] = kProofFormatTag;
    doc["problem"] = problem_name;
    doc["mode"] = mode;
    doc["status"] = "unsatisfiable";
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const DeductionStep& step : proof.steps) {
        nlohmann::ordered_json js;
        js["id"] = step.id;
        js["clause"] = detail::clause_to_json(step.csc);
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const StepParticipant& p : step.participants) {
            nlohmann::ordered_json jp;
            jp["source"] = p.source_id;
            jp["substitution"] = detail::substitution_to_json(p.sigma);
            jp["main"] = p.main ? nlohmann::ordered_json(p.main->to_string())
                                : nlohmann::ordered_json(nullptr);
            jp["secondary"] = p.secondary ? nlohmann::ordered_json(p.secondary->to_string())
                                          : nlohmann::ordered_json(nullptr);
            nlohmann::ordered_json absorbed = nlohmann::ordered_json::array();
            for (const Literal& a : p.absorbed) absorbed.push_back(a.to_string());
            jp["absorbed"] = absorbed;
            parts.push_back(std::move(jp));
        }
        js["participants"] = std::move(parts);
        steps.push_back(std::move(js));
    }
    doc["steps"] = std::move(steps);
    return doc.dump(2) + "\n";
}

inline Proof proof_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("format") || doc["format"] != kProofFormatTag)
        throw ParseError("not a recognized proof document", 1);
    Proof proof;
    for (const auto& js : doc["steps"]) {
        DeductionStep step;
        step.id = js["id"].get<int>();
        step.csc = detail::clause_from_json(js["clause"], step.id)
                       .with_origin(Clause::Origin::from_step(step.id));
        for (const auto& jp : js["participants"]) {
            StepParticipant p;
            p.source_id = jp["source"].get<int>();
            p.sigma = detail::substitution_from_json(jp["substitution"]);
            if (!jp["main"].is_null())
                p.main = detail::literal_from_text(jp["main"].get<std::string>());
            if (!jp["secondary"].is_null())
                p.secondary = detail::literal_from_text(jp["secondary"].get<std::string>());
            for (const auto& a : jp["absorbed"])
                p.absorbed.push_back(detail::literal_from_text(a.get<std::string>()));
            step.participants.push_back(std::move(p));
        }
        proof.steps.push_back(std::move(step));
    }
    return proof;
}

/// Propositional model document: the satisfying literal set.
inline std::string model_to_json(const std::vector<Literal>& model,
                                 const std::string& problem_name) {
    nlohmann::ordered_json doc;
    doc["format"] = kModelFormatTag;
    doc["problem"] = problem_name;
    doc["mode"] = "prop";
    doc["status"] = "satisfiable";
    nlohmann::ordered_json lits = nlohmann::ordered_json::array();
    for (const Literal& l : model) lits.push_back(l.to_string());
    doc["literals"] = std::move(lits);
    return doc.dump(2) + "\n";
}

/// First-order witness document: selected literals, construction case,
/// domain, and the predicate-level truth assignment.
inline std::string sketch_to_json(const InterpretationSketch& sketch,
                                  const std::string& problem_name) {
    nlohmann::ordered_json doc;
    doc["format"] = kModelFormatTag;
    doc["problem"] = problem_name;
    doc["mode"] = "fol";
    doc["status"] = "satisfiable";
    doc["case"] = sketch.construction == InterpretationSketch::Case::disjoint_predicates
                      ? "disjoint-predicates"
                      : "ground-distinct";
    nlohmann::ordered_json selected = nlohmann::ordered_json::object();
    for (const auto& [id, lit] : sketch.selected)
        selected[std::to_string(id)] = lit.to_string();
    doc["selected_literals"] = std::move(selected);
    nlohmann::ordered_json domain = nlohmann::ordered_json::array();
    for (const Term& t : sketch.domain) domain.push_back(t.to_string());
    doc["domain"] = std::move(domain);
    nlohmann::ordered_json truth = nlohmann::ordered_json::object();
    for (const auto& [pred, pa] : sketch.truth) {
        nlohmann::ordered_json jp;
        jp["default"] = pa.default_value;
        nlohmann::ordered_json exceptions = nlohmann::ordered_json::array();
        for (const auto& [args, value] : pa.exceptions) {
            nlohmann::ordered_json je;
            nlohmann::ordered_json ja = nlohmann::ordered_json::array();
            for (const Term& t : args) ja.push_back(t.to_string());
            je["args"] = std::move(ja);
            je["value"] = value;
            exceptions.push_back(std::move(je));
        }
        jp["exceptions"] = std::move(exceptions);
        truth[pred] = std::move(jp);
    }
    doc["truth_assignment"] = std::move(truth);
    doc["verified"] = sketch.verified;
    return doc.dump(2) + "\n";
}

inline std::vector<Literal> model_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("format") || doc["format"] != kModelFormatTag)
        throw ParseError("not a recognized model document", 1);
    std::vector<Literal> model;
    if (doc.contains("literals"))
        for (const auto& l : doc["literals"])
            model.push_back(detail::literal_from_text(l.get<std::string>()));
    return model;
}

} // namespace io
} // namespace cse

/*
 * Copyright 2026 the prefcalc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "prefcalc/desirability.hpp"
#include "prefcalc/norms.hpp"
#include "prefcalc/preference.hpp"
#include "prefcalc/report.hpp"
#include "prefcalc/similarity.hpp"
#include "prefcalc/worlds.hpp"

namespace prefcalc {

/// The input document could not be read or is not well-formed JSON.
class SpecParseError : public std::runtime_error {
public:
    explicit SpecParseError(const std::string& message) : std::runtime_error(message) {}
};

/// The document is well-formed JSON but violates the problem-spec contract.
/// `path()` names the offending field, dotted and indexed ("constraints[2].values").
class SpecValidationError : public std::runtime_error {
public:
    SpecValidationError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// ---------------------------------------------------------------------------
// Formula text.  Grammar, loosest binding first:
//   implication := disjunction ('->' implication)?        (right-associative)
//   disjunction := conjunction ('|' conjunction)*
//   conjunction := negation ('&' negation)*
//   negation    := '!' negation | primary
//   primary     := identifier | '(' implication ')'
// Identifiers match [A-Za-z_][A-Za-z0-9_]*.
// ---------------------------------------------------------------------------

namespace detail {

struct FormulaToken {
    enum class Kind { identifier, bang, amp, pipe, arrow, lparen, rparen, end };
    Kind kind;
    std::string text;
    size_t position;
};

inline std::vector<FormulaToken> lex_formula(const std::string& text) {
    std::vector<FormulaToken> tokens;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '!') {
            tokens.push_back({FormulaToken::Kind::bang, "!", i++});
        } else if (c == '&') {
            tokens.push_back({FormulaToken::Kind::amp, "&", i++});
        } else if (c == '|') {
            tokens.push_back({FormulaToken::Kind::pipe, "|", i++});
        } else if (c == '(') {
            tokens.push_back({FormulaToken::Kind::lparen, "(", i++});
        } else if (c == ')') {
            tokens.push_back({FormulaToken::Kind::rparen, ")", i++});
        } else if (c == '-') {
            if (i + 1 >= text.size() || text[i + 1] != '>')
                throw std::invalid_argument("position " + std::to_string(i) +
                                            ": '-' must begin '->'");
            tokens.push_back({FormulaToken::Kind::arrow, "->", i});
            i += 2;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            tokens.push_back(
                {FormulaToken::Kind::identifier, text.substr(start, i - start), start});
        } else {
            throw std::invalid_argument("position " + std::to_string(i) +
                                        ": unexpected character '" + std::string(1, c) + "'");
        }
    }
    tokens.push_back({FormulaToken::Kind::end, "", text.size()});
    return tokens;
}

class FormulaParser {
public:
    explicit FormulaParser(std::vector<FormulaToken> tokens) : tokens_(std::move(tokens)) {}

    Formula parse() {
        Formula f = implication();
        if (peek().kind != FormulaToken::Kind::end)
            throw std::invalid_argument("position " + std::to_string(peek().position) +
                                        ": unexpected '" + peek().text + "'");
        return f;
    }

private:
    const FormulaToken& peek() const { return tokens_[at_]; }
    const FormulaToken& take() { return tokens_[at_++]; }

    Formula implication() {
        Formula lhs = disjunction();
        if (peek().kind == FormulaToken::Kind::arrow) {
            take();
            return Formula::make_implies(std::move(lhs), implication());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (peek().kind == FormulaToken::Kind::pipe) {
            take();
            f = Formula::make_or(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = negation();
        while (peek().kind == FormulaToken::Kind::amp) {
            take();
            f = Formula::make_and(std::move(f), negation());
        }
        return f;
    }

    Formula negation() {
        if (peek().kind == FormulaToken::Kind::bang) {
            take();
            return Formula::make_not(negation());
        }
        return primary();
    }

    Formula primary() {
        const FormulaToken& t = take();
        if (t.kind == FormulaToken::Kind::identifier) return Formula::make_atom(t.text);
        if (t.kind == FormulaToken::Kind::lparen) {
            Formula f = implication();
            if (peek().kind != FormulaToken::Kind::rparen)
                throw std::invalid_argument("position " + std::to_string(peek().position) +
                                            ": expected ')'");
            take();
            return f;
        }
        throw std::invalid_argument("position " + std::to_string(t.position) +
                                    ": expected an identifier, '!' or '('");
    }

    std::vector<FormulaToken> tokens_;
    size_t at_ = 0;
};

} // namespace detail

inline Formula parse_formula(const std::string& text) {
    return detail::FormulaParser(detail::lex_formula(text)).parse();
}

// ---------------------------------------------------------------------------
// Problem-spec document model.
// ---------------------------------------------------------------------------

enum class ConstraintKind { crisp, table, interval };

struct ConstraintSpec {
    std::string name;
    ConstraintKind kind = ConstraintKind::crisp;
    std::string formula;                    // crisp
    std::vector<double> values;             // table
    std::vector<double> lower, upper;       // interval
};

/// One requested readout.  `kind` is "rank", "similarity", "prefer" (of over
/// given) or "bounds" (of, optionally given).
struct QuerySpec {
    std::string kind;
    std::string of;
    std::string given;
};

struct ProblemSpec {
    std::vector<std::string> atoms;
    std::vector<std::map<std::string, bool>> explicit_worlds;  // empty: enumerate all
    std::string profile_name = "min";
    NormProfile profile = NormProfile::min_profile();
    std::vector<ConstraintSpec> constraints;
    std::string aggregate;
    std::vector<QuerySpec> queries;
};

namespace detail {

inline const nlohmann::json& require_member(const nlohmann::json& j, const char* key,
                                            const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw SpecValidationError(path.empty() ? key : path + "." + key,
                                                 "missing required field");
    return *it;
}

inline std::string require_string(const nlohmann::json& j, const std::string& path) {
    if (!j.is_string()) throw SpecValidationError(path, "expected a string");
    return j.get<std::string>();
}

inline double require_unit_value(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number()) throw SpecValidationError(path, "expected a number");
    double v = j.get<double>();
    if (!(v >= 0.0 && v <= 1.0))
        throw SpecValidationError(path, "value " + std::to_string(v) + " outside [0, 1]");
    return v;
}

inline std::vector<double> require_unit_array(const nlohmann::json& j, size_t expected,
                                              const std::string& path) {
    if (!j.is_array()) throw SpecValidationError(path, "expected an array");
    if (j.size() != expected)
        throw SpecValidationError(path, "expected " + std::to_string(expected) +
                                            " entries, got " + std::to_string(j.size()));
    std::vector<double> out;
    out.reserve(expected);
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(require_unit_value(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline Formula parse_formula_at(const std::string& text, const std::string& path) {
    try {
        return parse_formula(text);
    } catch (const std::invalid_argument& e) {
        throw SpecValidationError(path, std::string("formula error at ") + e.what());
    }
}

} // namespace detail

/// Validate a parsed JSON document into a ProblemSpec.  Every failure names
/// the offending field.
inline ProblemSpec parse_spec(const nlohmann::json& doc) {
    if (!doc.is_object()) throw SpecValidationError("$", "spec must be a JSON object");
    ProblemSpec spec;

    {
        const auto& atoms = detail::require_member(doc, "atoms", "");
        if (!atoms.is_array() || atoms.empty())
            throw SpecValidationError("atoms", "expected a non-empty array");
        for (size_t i = 0; i < atoms.size(); ++i)
            spec.atoms.push_back(
                detail::require_string(atoms[i], "atoms[" + std::to_string(i) + "]"));
    }

    if (doc.contains("worlds")) {
        const auto& worlds = doc["worlds"];
        if (!worlds.is_array() || worlds.empty())
            throw SpecValidationError("worlds", "expected a non-empty array");
        for (size_t i = 0; i < worlds.size(); ++i) {
            const std::string path = "worlds[" + std::to_string(i) + "]";
            if (!worlds[i].is_object()) throw SpecValidationError(path, "expected an object");
            std::map<std::string, bool> valuation;
            for (const auto& [key, value] : worlds[i].items()) {
                if (!value.is_boolean())
                    throw SpecValidationError(path + "." + key, "expected a boolean");
                valuation[key] = value.get<bool>();
            }
            spec.explicit_worlds.push_back(std::move(valuation));
        }
    }

    if (doc.contains("profile")) {
        spec.profile_name = detail::require_string(doc["profile"], "profile");
        try {
            spec.profile = profile_by_name(spec.profile_name);
        } catch (const std::invalid_argument& e) {
            throw SpecValidationError("profile", e.what());
        }
    }

    {
        const auto& constraints = detail::require_member(doc, "constraints", "");
        if (!constraints.is_array() || constraints.empty())
            throw SpecValidationError("constraints", "expected a non-empty array");
        size_t world_count = spec.explicit_worlds.empty()
                                 ? (static_cast<size_t>(1) << spec.atoms.size())
                                 : spec.explicit_worlds.size();
        for (size_t i = 0; i < constraints.size(); ++i) {
            const std::string path = "constraints[" + std::to_string(i) + "]";
            const auto& c = constraints[i];
            if (!c.is_object()) throw SpecValidationError(path, "expected an object");
            ConstraintSpec out;
            out.name = detail::require_string(detail::require_member(c, "name", path),
                                              path + ".name");
            for (const auto& prior : spec.constraints)
                if (prior.name == out.name)
                    throw SpecValidationError(path + ".name",
                                              "duplicate constraint name '" + out.name + "'");
            std::string kind = detail::require_string(detail::require_member(c, "kind", path),
                                                      path + ".kind");
            if (kind == "crisp") {
                out.kind = ConstraintKind::crisp;
                out.formula = detail::require_string(
                    detail::require_member(c, "formula", path), path + ".formula");
                detail::parse_formula_at(out.formula, path + ".formula");
            } else if (kind == "table") {
                out.kind = ConstraintKind::table;
                out.values = detail::require_unit_array(
                    detail::require_member(c, "values", path), world_count, path + ".values");
            } else if (kind == "interval") {
                out.kind = ConstraintKind::interval;
                out.lower = detail::require_unit_array(
                    detail::require_member(c, "lower", path), world_count, path + ".lower");
                out.upper = detail::require_unit_array(
                    detail::require_member(c, "upper", path), world_count, path + ".upper");
                for (size_t w = 0; w < world_count; ++w)
                    if (out.lower[w] > out.upper[w] + kTolerance)
                        throw SpecValidationError(
                            path + ".lower[" + std::to_string(w) + "]",
                            "lower bound exceeds upper bound");
            } else {
                throw SpecValidationError(path + ".kind",
                                          "unknown kind '" + kind +
                                              "' (expected crisp, table or interval)");
            }
            spec.constraints.push_back(std::move(out));
        }
    }

    {
        spec.aggregate = detail::require_string(detail::require_member(doc, "aggregate", ""),
                                                "aggregate");
        Formula f = detail::parse_formula_at(spec.aggregate, "aggregate");
        std::vector<std::string> referenced;
        f.collect_atoms(referenced);
        for (const auto& name : referenced) {
            bool known = std::any_of(spec.constraints.begin(), spec.constraints.end(),
                                     [&](const ConstraintSpec& c) { return c.name == name; });
            if (!known)
                throw SpecValidationError("aggregate",
                                          "unknown constraint name '" + name + "'");
        }
    }

    if (doc.contains("queries")) {
        const auto& queries = doc["queries"];
        if (!queries.is_array()) throw SpecValidationError("queries", "expected an array");
        for (size_t i = 0; i < queries.size(); ++i) {
            const std::string path = "queries[" + std::to_string(i) + "]";
            const auto& q = queries[i];
            if (!q.is_object()) throw SpecValidationError(path, "expected an object");
            QuerySpec out;
            out.kind = detail::require_string(detail::require_member(q, "kind", path),
                                              path + ".kind");
            if (out.kind == "rank" || out.kind == "similarity") {
                // No arguments.
            } else if (out.kind == "prefer" || out.kind == "bounds") {
                out.of = detail::require_string(detail::require_member(q, "of", path),
                                                path + ".of");
                detail::parse_formula_at(out.of, path + ".of");
                if (q.contains("given")) {
                    out.given = detail::require_string(q["given"], path + ".given");
                    detail::parse_formula_at(out.given, path + ".given");
                } else if (out.kind == "prefer") {
                    throw SpecValidationError(path, "prefer queries need a 'given' formula");
                }
            } else {
                throw SpecValidationError(
                    path + ".kind",
                    "unknown kind '" + out.kind +
                        "' (expected rank, prefer, similarity or bounds)");
            }
            spec.queries.push_back(std::move(out));
        }
    }

    return spec;
}

inline ProblemSpec load_spec(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw SpecParseError("cannot read spec file: " + file_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_spec(doc);
}

// ---------------------------------------------------------------------------
// Evaluation pipeline.
// ---------------------------------------------------------------------------

struct RankEntry {
    int world = 0;
    std::vector<bool> valuation;
    double lower = 0.0;
    /// Equals `lower` on the exact path.
    double upper = 0.0;
};

/// Propositional readout.  With no `given` formula this is the desirability
/// enclosure of the proposition; with one, the pairwise preference aggregates
/// and the resemblance bounds.
struct BoundsResult {
    std::string of;
    std::string given;
    bool pairwise = false;

    double lower = 0.0;
    double upper = 1.0;

    double pref_lower_of_given = 0.0;
    double pref_upper_of_given = 0.0;
    double pref_lower_given_of = 0.0;
    double pref_upper_given_of = 0.0;
    double resemblance_lower = 0.0;
    double resemblance_upper = 1.0;
};

struct EvaluationReport {
    UniversePtr universe;
    NormProfile profile;
    /// True when any constraint is an interval; the *_interval fields are
    /// populated instead of the exact ones.
    bool interval = false;

    std::optional<DesirabilityMeasure> aggregate;
    std::optional<DesirabilityInterval> aggregate_interval;
    std::optional<PreferenceRelation> preference;
    std::optional<PreferenceInterval> preference_interval;
    /// Transitive envelope of the tightened preference upper bound
    /// (interval path only).
    std::optional<PreferenceRelation> preference_upper_envelope;
    std::optional<SimilarityRelation> similarity;
    std::optional<SimilarityInterval> similarity_interval;

    std::vector<RankEntry> ranking;
    std::vector<AxiomReport> axiom_reports;
    std::vector<BoundsResult> query_results;
};

namespace detail {

inline DesirabilityMeasure aggregate_exact(const ProblemSpec& spec, const UniversePtr& universe,
                                           const Formula& f,
                                           const std::map<std::string, DesirabilityMeasure>& by_name) {
    switch (f.kind) {
        case Formula::Kind::atom: return by_name.at(f.atom);
        case Formula::Kind::negation:
            return not_measure(spec.profile,
                               aggregate_exact(spec, universe, f.children[0], by_name));
        case Formula::Kind::conjunction:
            return and_measures(spec.profile,
                                aggregate_exact(spec, universe, f.children[0], by_name),
                                aggregate_exact(spec, universe, f.children[1], by_name));
        case Formula::Kind::disjunction:
            return or_measures(spec.profile,
                               aggregate_exact(spec, universe, f.children[0], by_name),
                               aggregate_exact(spec, universe, f.children[1], by_name));
        case Formula::Kind::implication:
            return implies_measures(spec.profile,
                                    aggregate_exact(spec, universe, f.children[0], by_name),
                                    aggregate_exact(spec, universe, f.children[1], by_name));
    }
    throw std::logic_error("unreachable formula kind");
}

inline DesirabilityInterval aggregate_interval(
    const ProblemSpec& spec, const UniversePtr& universe, const Formula& f,
    const std::map<std::string, DesirabilityInterval>& by_name) {
    switch (f.kind) {
        case Formula::Kind::atom: return by_name.at(f.atom);
        case Formula::Kind::negation:
            return interval_not(spec.profile,
                                aggregate_interval(spec, universe, f.children[0], by_name));
        case Formula::Kind::conjunction:
            return interval_and(spec.profile,
                                aggregate_interval(spec, universe, f.children[0], by_name),
                                aggregate_interval(spec, universe, f.children[1], by_name));
        case Formula::Kind::disjunction:
            return interval_or(spec.profile,
                               aggregate_interval(spec, universe, f.children[0], by_name),
                               aggregate_interval(spec, universe, f.children[1], by_name));
        case Formula::Kind::implication:
            return interval_implies(spec.profile,
                                    aggregate_interval(spec, universe, f.children[0], by_name),
                                    aggregate_interval(spec, universe, f.children[1], by_name));
    }
    throw std::logic_error("unreachable formula kind");
}

inline AxiomReport keep_checks(AxiomReport report, const std::vector<std::string>& axioms) {
    AxiomReport out;
    out.subject = std::move(report.subject);
    out.notes = std::move(report.notes);
    for (auto& chk : report.checks)
        if (std::find(axioms.begin(), axioms.end(), chk.axiom) != axioms.end())
            out.checks.push_back(std::move(chk));
    return out;
}

} // namespace detail

/// Desirability measure of one named constraint over the universe.
inline DesirabilityMeasure constraint_measure_lower(const ConstraintSpec& c,
                                                    const UniversePtr& universe) {
    switch (c.kind) {
        case ConstraintKind::crisp:
            return crisp_measure(eval_formula(universe, parse_formula(c.formula)));
        case ConstraintKind::table: return DesirabilityMeasure(universe, c.values);
        case ConstraintKind::interval: return DesirabilityMeasure(universe, c.lower);
    }
    throw std::logic_error("unreachable constraint kind");
}

inline DesirabilityMeasure constraint_measure_upper(const ConstraintSpec& c,
                                                    const UniversePtr& universe) {
    if (c.kind == ConstraintKind::interval) return DesirabilityMeasure(universe, c.upper);
    return constraint_measure_lower(c, universe);
}

inline BoundsResult compute_bounds(const EvaluationReport& report, const std::string& of,
                                   const std::string& given);

/// Run the whole pipeline: build the universe, lift constraints to measures,
/// fold the aggregate formula, derive preference and similarity, rank worlds
/// and answer the spec's queries.  Axiom reports cover exactly the properties
/// each derivation promises, so a report failure indicates a defect rather
/// than an unlucky input.
inline EvaluationReport evaluate(const ProblemSpec& spec) {
    EvaluationReport report;
    report.profile = spec.profile;

    try {
        report.universe = spec.explicit_worlds.empty()
                              ? build_universe(spec.atoms)
                              : build_universe(spec.atoms, spec.explicit_worlds);
    } catch (const std::invalid_argument& e) {
        throw SpecValidationError(spec.explicit_worlds.empty() ? "atoms" : "worlds", e.what());
    }
    const UniversePtr& universe = report.universe;

    report.interval = std::any_of(spec.constraints.begin(), spec.constraints.end(),
                                  [](const ConstraintSpec& c) {
                                      return c.kind == ConstraintKind::interval;
                                  });

    Formula aggregate_formula = parse_formula(spec.aggregate);

    if (!report.interval) {
        std::map<std::string, DesirabilityMeasure> by_name;
        for (const auto& c : spec.constraints) {
            try {
                by_name.emplace(c.name, constraint_measure_lower(c, universe));
            } catch (const std::invalid_argument& e) {
                throw SpecValidationError("constraints." + c.name, e.what());
            }
        }
        report.aggregate = detail::aggregate_exact(spec, universe, aggregate_formula, by_name);
        report.preference = from_desirability(*report.aggregate, spec.profile.conorm);
        report.similarity = from_preference(*report.preference);

        AxiomReport pref_report = verify_axioms(*report.preference);
        pref_report.subject = "preference";
        report.axiom_reports.push_back(std::move(pref_report));
        AxiomReport sim_report = verify_similarity(*report.similarity);
        sim_report.subject = "similarity";
        report.axiom_reports.push_back(std::move(sim_report));
    } else {
        std::map<std::string, DesirabilityInterval> by_name;
        for (const auto& c : spec.constraints) {
            try {
                by_name.emplace(c.name,
                                DesirabilityInterval(constraint_measure_lower(c, universe),
                                                     constraint_measure_upper(c, universe)));
            } catch (const std::invalid_argument& e) {
                throw SpecValidationError("constraints." + c.name, e.what());
            }
        }
        report.aggregate_interval =
            detail::aggregate_interval(spec, universe, aggregate_formula, by_name);
        report.preference_interval =
            interval_pref_from_desirability(*report.aggregate_interval, spec.profile.conorm);
        report.preference_upper_envelope =
            transitive_envelope(report.preference_interval->upper_tightened());
        report.similarity_interval = interval_similarity(*report.preference_interval);

        // Only the properties the interval construction promises are
        // reported: the lower bound is reflexive and antisymmetric, while the
        // transitive envelope of the tightened upper bound adds transitivity.
        AxiomReport lower_report =
            detail::keep_checks(verify_axioms(report.preference_interval->lower_relation()),
                                {"P1", "P2"});
        lower_report.subject = "preference lower bound";
        report.axiom_reports.push_back(std::move(lower_report));

        AxiomReport envelope_report =
            detail::keep_checks(verify_axioms(*report.preference_upper_envelope), {"P1", "P3"});
        envelope_report.subject = "preference upper envelope";
        report.axiom_reports.push_back(std::move(envelope_report));

        AxiomReport sim_report =
            verify_similarity(from_preference(*report.preference_upper_envelope));
        sim_report.subject = "similarity lower bound";
        report.axiom_reports.push_back(std::move(sim_report));
    }

    // Ranking: by guaranteed value, then by best-case value, then world id.
    const int n = universe->size();
    report.ranking.reserve(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) {
        RankEntry entry;
        entry.world = w;
        entry.valuation = universe->worlds()[static_cast<size_t>(w)].valuation;
        if (report.interval) {
            entry.lower = report.aggregate_interval->lower()(w);
            entry.upper = report.aggregate_interval->upper()(w);
        } else {
            entry.lower = (*report.aggregate)(w);
            entry.upper = entry.lower;
        }
        report.ranking.push_back(std::move(entry));
    }
    std::stable_sort(report.ranking.begin(), report.ranking.end(),
                     [](const RankEntry& a, const RankEntry& b) {
                         if (a.lower != b.lower) return a.lower > b.lower;
                         if (a.upper != b.upper) return a.upper > b.upper;
                         return a.world < b.world;
                     });

    for (const auto& q : spec.queries) {
        if (q.kind == "rank" || q.kind == "similarity") continue;
        report.query_results.push_back(compute_bounds(report, q.of, q.given));
    }

    return report;
}

/// Propositional bounds against an evaluation.  `given` empty requests the
/// desirability enclosure of `of`; otherwise the pairwise preference and
/// resemblance readout.  Throws std::invalid_argument when a formula selects
/// no worlds.
inline BoundsResult compute_bounds(const EvaluationReport& report, const std::string& of,
                                   const std::string& given) {
    BoundsResult result;
    result.of = of;
    result.given = given;

    Proposition p = eval_formula(report.universe, parse_formula(of));
    if (p.empty())
        throw std::invalid_argument("proposition '" + of + "' selects no worlds");

    if (given.empty()) {
        if (report.interval) {
            result.lower = prop_lower(report.aggregate_interval->lower(), p);
            result.upper = prop_upper(report.aggregate_interval->upper(), p);
        } else {
            result.lower = prop_lower(*report.aggregate, p);
            result.upper = prop_upper(*report.aggregate, p);
        }
        return result;
    }

    Proposition q = eval_formula(report.universe, parse_formula(given));
    if (q.empty())
        throw std::invalid_argument("proposition '" + given + "' selects no worlds");
    result.pairwise = true;

    if (report.interval) {
        PreferenceRelation lower = report.preference_interval->lower_relation();
        PreferenceRelation upper = report.preference_interval->upper_tightened();
        result.pref_lower_of_given = prop_pref_lower(lower, p, q);
        result.pref_upper_of_given = prop_pref_upper(upper, p, q);
        result.pref_lower_given_of = prop_pref_lower(lower, q, p);
        result.pref_upper_given_of = prop_pref_upper(upper, q, p);
        ResemblanceBounds res = resemblance_bounds(*report.preference_interval, p, q);
        result.resemblance_lower = res.lower;
        result.resemblance_upper = res.upper;
    } else {
        const PreferenceRelation& rel = *report.preference;
        result.pref_lower_of_given = prop_pref_lower(rel, p, q);
        result.pref_upper_of_given = prop_pref_upper(rel, p, q);
        result.pref_lower_given_of = prop_pref_lower(rel, q, p);
        result.pref_upper_given_of = prop_pref_upper(rel, q, p);
        ResemblanceBounds res = resemblance_bounds(rel, p, q);
        result.resemblance_lower = res.lower;
        result.resemblance_upper = res.upper;
    }
    return result;
}

} // namespace prefcalc

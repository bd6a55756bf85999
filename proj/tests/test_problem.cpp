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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "prefcalc/problem.hpp"

using namespace prefcalc;
using prefcalc::testing::nearly;

namespace {

std::string write_temp_spec(const std::string& name, const std::string& content) {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / ("prefcalc_test_" + name);
    std::ofstream out(path);
    out << content;
    return path.string();
}

void expect_invalid(const std::string& doc_text, const std::string& path,
                    const std::string& message_part = "") {
    nlohmann::json doc = nlohmann::json::parse(doc_text);
    try {
        parse_spec(doc);
        FAIL("expected a validation error at " << path);
    } catch (const SpecValidationError& e) {
        CHECK(e.path() == path);
        if (!message_part.empty()) {
            CAPTURE(e.what());
            CHECK(std::string(e.what()).find(message_part) != std::string::npos);
        }
    }
}

void expect_formula_error(const std::string& text, const std::string& message_part) {
    try {
        parse_formula(text);
        FAIL("expected a parse error for: " << text);
    } catch (const std::invalid_argument& e) {
        CAPTURE(text, e.what());
        CHECK(std::string(e.what()).find(message_part) != std::string::npos);
    }
}

} // namespace

TEST_CASE("formula parsing honours precedence") {
    UniversePtr u = build_universe({"a", "b", "c", "d"});
    // '!' binds tightest, then '&', then '|', then '->'
    Proposition got = eval_formula(u, parse_formula("!a & b | c -> d"));
    for (int w = 0; w < u->size(); ++w) {
        const auto& val = u->worlds()[size_t(w)].valuation;
        bool a = val[0], b = val[1], c = val[2], d = val[3];
        bool expected = !((!a && b) || c) || d;
        CAPTURE(w);
        CHECK(got.contains(w) == expected);
    }
}

TEST_CASE("implication associates to the right") {
    UniversePtr u = build_universe({"a", "b", "c"});
    CHECK(eval_formula(u, parse_formula("a -> b -> c")) ==
          eval_formula(u, parse_formula("a -> (b -> c)")));
    CHECK_FALSE(eval_formula(u, parse_formula("a -> b -> c")) ==
                eval_formula(u, parse_formula("(a -> b) -> c")));
}

TEST_CASE("parentheses and identifier characters") {
    UniversePtr u = build_universe({"x_1", "Y2"});
    Proposition got = eval_formula(u, parse_formula("( x_1 | Y2 ) & !( x_1 & Y2 )"));
    for (int w = 0; w < 4; ++w) {
        const auto& val = u->worlds()[size_t(w)].valuation;
        CHECK(got.contains(w) == (val[0] != val[1]));
    }
}

TEST_CASE("formula errors carry the offending position") {
    expect_formula_error("a -", "position 2");
    expect_formula_error("a @", "unexpected character '@'");
    expect_formula_error("(a", "expected ')'");
    expect_formula_error("a b", "position 2: unexpected 'b'");
    expect_formula_error("", "position 0");
    expect_formula_error("a &", "expected an identifier");
    expect_formula_error("-> a", "position 0");
}

TEST_CASE("minimal spec parses with defaults") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "constraints": [{"name": "x", "kind": "crisp", "formula": "a"}],
        "aggregate": "x"
    })"));
    CHECK(spec.atoms == std::vector<std::string>{"a"});
    CHECK(spec.explicit_worlds.empty());
    CHECK(spec.profile_name == "min");
    CHECK(spec.profile.conorm == ConormFamily::maximum);
    CHECK(spec.constraints.size() == 1);
    CHECK(spec.constraints[0].kind == ConstraintKind::crisp);
    CHECK(spec.queries.empty());
}

TEST_CASE("full spec parses every field") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"__({
        "atoms": ["a", "b"],
        "worlds": [{"a": false, "b": false}, {"a": true, "b": false}, {"a": true, "b": true}],
        "profile": "lukasiewicz",
        "constraints": [
            {"name": "c1", "kind": "crisp", "formula": "a -> b"},
            {"name": "c2", "kind": "table", "values": [0.2, 0.5, 1.0]},
            {"name": "c3", "kind": "interval", "lower": [0, 0.1, 0.2], "upper": [0.5, 0.1, 1.0]}
        ],
        "aggregate": "c1 & (c2 | c3)",
        "queries": [
            {"kind": "rank"},
            {"kind": "similarity"},
            {"kind": "prefer", "of": "a", "given": "!a"},
            {"kind": "bounds", "of": "b"}
        ]
    })__"));
    CHECK(spec.explicit_worlds.size() == 3);
    CHECK(spec.profile.conorm == ConormFamily::bounded_sum);
    CHECK(spec.constraints[1].values.size() == 3);
    CHECK(spec.constraints[2].upper[2] == 1.0);
    REQUIRE(spec.queries.size() == 4);
    CHECK(spec.queries[2].of == "a");
    CHECK(spec.queries[2].given == "!a");
    CHECK(spec.queries[3].given.empty());
}

TEST_CASE("spec validation names the offending field") {
    expect_invalid(R"([])", "$", "object");
    expect_invalid(R"({})", "atoms", "missing required field");
    expect_invalid(R"({"atoms": "a"})", "atoms", "non-empty array");
    expect_invalid(R"({"atoms": []})", "atoms", "non-empty array");
    expect_invalid(R"({"atoms": ["a", 3]})", "atoms[1]", "expected a string");

    const std::string tail =
        R"(, "constraints": [{"name": "x", "kind": "crisp", "formula": "a"}], "aggregate": "x"})";
    expect_invalid(R"({"atoms": ["a"], "worlds": {})" + tail, "worlds");
    expect_invalid(R"({"atoms": ["a"], "worlds": [3])" + tail, "worlds[0]", "object");
    expect_invalid(R"({"atoms": ["a"], "worlds": [{"a": 1}])" + tail, "worlds[0].a", "boolean");
    expect_invalid(R"({"atoms": ["a"], "profile": "zadeh")" + tail, "profile", "lukasiewicz");
    expect_invalid(R"({"atoms": ["a"], "profile": 7)" + tail, "profile", "expected a string");
}

TEST_CASE("constraint validation names the offending field") {
    expect_invalid(R"({"atoms": ["a"]})", "constraints", "missing required field");
    expect_invalid(R"({"atoms": ["a"], "constraints": []})", "constraints", "non-empty");
    expect_invalid(R"({"atoms": ["a"], "constraints": [5]})", "constraints[0]", "object");
    expect_invalid(R"({"atoms": ["a"], "constraints": [{"kind": "crisp"}]})",
                   "constraints[0].name", "missing");
    expect_invalid(R"({"atoms": ["a"], "constraints": [{"name": "x"}]})",
                   "constraints[0].kind", "missing");
    expect_invalid(
        R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "fuzzy"}]})",
        "constraints[0].kind", "unknown kind 'fuzzy'");
    expect_invalid(R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "crisp"}]})",
                   "constraints[0].formula", "missing");
    expect_invalid(
        R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "crisp", "formula": "a |"}]})",
        "constraints[0].formula", "formula error at position");
    expect_invalid(
        R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "table", "values": [0.5]}]})",
        "constraints[0].values", "expected 2 entries");
    expect_invalid(
        R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "table", "values": [0.5, 1.2]}]})",
        "constraints[0].values[1]", "outside [0, 1]");
    expect_invalid(
        R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "table", "values": ["hi", 1]}]})",
        "constraints[0].values[0]", "expected a number");
    expect_invalid(
        R"({"atoms": ["a"],
            "constraints": [{"name": "x", "kind": "interval", "lower": [0, 0]}]})",
        "constraints[0].upper", "missing");
    expect_invalid(
        R"({"atoms": ["a"],
            "constraints": [{"name": "x", "kind": "interval",
                             "lower": [0.8, 0], "upper": [0.4, 1]}]})",
        "constraints[0].lower[0]", "exceeds");
    expect_invalid(
        R"({"atoms": ["a"],
            "constraints": [{"name": "x", "kind": "crisp", "formula": "a"},
                            {"name": "x", "kind": "crisp", "formula": "!a"}]})",
        "constraints[1].name", "duplicate");
}

TEST_CASE("aggregate and query validation") {
    const std::string head =
        R"({"atoms": ["a"], "constraints": [{"name": "x", "kind": "crisp", "formula": "a"}])";
    expect_invalid(head + "}", "aggregate", "missing");
    expect_invalid(head + R"(, "aggregate": "x &"})", "aggregate", "formula error");
    expect_invalid(head + R"(, "aggregate": "x & zz"})", "aggregate",
                   "unknown constraint name 'zz'");
    expect_invalid(head + R"(, "aggregate": "x", "queries": 3})", "queries", "array");
    expect_invalid(head + R"(, "aggregate": "x", "queries": [{"of": "a"}]})",
                   "queries[0].kind", "missing");
    expect_invalid(head + R"(, "aggregate": "x", "queries": [{"kind": "sort"}]})",
                   "queries[0].kind", "unknown kind 'sort'");
    expect_invalid(head + R"(, "aggregate": "x", "queries": [{"kind": "prefer"}]})",
                   "queries[0].of", "missing");
    expect_invalid(head + R"(, "aggregate": "x", "queries": [{"kind": "prefer", "of": "a"}]})",
                   "queries[0]", "prefer queries need a 'given' formula");
    expect_invalid(
        head + R"(, "aggregate": "x", "queries": [{"kind": "bounds", "of": "a !"}]})",
        "queries[0].of", "formula error");
}

TEST_CASE("table length follows the explicit world list") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a", "b"],
        "worlds": [{"a": false, "b": true}, {"a": true, "b": true}, {"a": true, "b": false}],
        "constraints": [{"name": "t", "kind": "table", "values": [0.1, 0.5, 0.9]}],
        "aggregate": "t"
    })"));
    CHECK(spec.constraints[0].values.size() == 3);
    expect_invalid(R"({
        "atoms": ["a", "b"],
        "worlds": [{"a": false, "b": true}, {"a": true, "b": true}, {"a": true, "b": false}],
        "constraints": [{"name": "t", "kind": "table", "values": [0.1, 0.5, 0.9, 0.2]}],
        "aggregate": "t"
    })", "constraints[0].values", "expected 3 entries");
}

TEST_CASE("spec loading distinguishes parse failures") {
    CHECK_THROWS_AS(load_spec("/nonexistent/never/spec.json"), SpecParseError);
    try {
        load_spec("/nonexistent/never/spec.json");
    } catch (const SpecParseError& e) {
        CHECK(std::string(e.what()).find("cannot read") != std::string::npos);
    }

    std::string broken = write_temp_spec("broken.json", "{ this is not json");
    CHECK_THROWS_AS(load_spec(broken), SpecParseError);
    try {
        load_spec(broken);
    } catch (const SpecParseError& e) {
        CHECK(std::string(e.what()).find("invalid JSON") != std::string::npos);
    }

    std::string good = write_temp_spec("good.json", R"({
        "atoms": ["a"],
        "constraints": [{"name": "x", "kind": "table", "values": [0.3, 0.8]}],
        "aggregate": "x"
    })");
    ProblemSpec spec = load_spec(good);
    CHECK(spec.constraints[0].values == std::vector<double>{0.3, 0.8});
}

TEST_CASE("exact evaluation pipeline end to end") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "constraints": [
            {"name": "t1", "kind": "table", "values": [0.4, 0.9]},
            {"name": "t2", "kind": "table", "values": [0.6, 0.2]}
        ],
        "aggregate": "t1 & t2"
    })"));
    EvaluationReport report = evaluate(spec);

    CHECK_FALSE(report.interval);
    REQUIRE(report.aggregate.has_value());
    CHECK(nearly((*report.aggregate)(0), 0.4));
    CHECK(nearly((*report.aggregate)(1), 0.2));

    REQUIRE(report.ranking.size() == 2);
    CHECK(report.ranking[0].world == 0);
    CHECK(nearly(report.ranking[0].lower, 0.4));
    CHECK(report.ranking[0].upper == report.ranking[0].lower);
    CHECK(report.ranking[1].world == 1);

    REQUIRE(report.preference.has_value());
    CHECK(nearly((*report.preference)(0, 1), 0.4));
    CHECK((*report.preference)(1, 0) == 0.0);
    REQUIRE(report.similarity.has_value());
    CHECK(nearly((*report.similarity)(0, 1), 0.6));

    REQUIRE(report.axiom_reports.size() == 2);
    CHECK(report.axiom_reports[0].subject == "preference");
    CHECK(report.axiom_reports[0].all_pass());
    CHECK(report.axiom_reports[1].subject == "similarity");
    CHECK(report.axiom_reports[1].all_pass());
}

TEST_CASE("crisp specs rank models above non-models") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a", "b"],
        "profile": "product",
        "constraints": [{"name": "c1", "kind": "crisp", "formula": "a | b"}],
        "aggregate": "c1"
    })"));
    EvaluationReport report = evaluate(spec);
    REQUIRE(report.ranking.size() == 4);
    // worlds 1, 2, 3 satisfy "a | b"; ties break by world id
    CHECK(report.ranking[0].world == 1);
    CHECK(report.ranking[1].world == 2);
    CHECK(report.ranking[2].world == 3);
    CHECK(report.ranking[3].world == 0);
    CHECK(report.ranking[0].lower == 1.0);
    CHECK(report.ranking[3].lower == 0.0);
}

TEST_CASE("explicit world lists drive the pipeline") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "worlds": [{"a": false}, {"a": true}, {"a": false}],
        "constraints": [{"name": "t", "kind": "table", "values": [0.1, 0.5, 0.2]}],
        "aggregate": "t"
    })"));
    EvaluationReport report = evaluate(spec);
    CHECK(report.universe->size() == 3);
    CHECK(report.ranking[0].world == 1);
    CHECK(report.ranking[1].world == 2);
    CHECK(report.ranking[2].world == 0);
}

TEST_CASE("universe construction failures carry a field path") {
    ProblemSpec dup = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a", "a"],
        "constraints": [{"name": "t", "kind": "table", "values": [0.1, 0.2, 0.3, 0.4]}],
        "aggregate": "t"
    })"));
    try {
        evaluate(dup);
        FAIL("expected a validation error");
    } catch (const SpecValidationError& e) {
        CHECK(e.path() == "atoms");
    }

    ProblemSpec bad_world = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "worlds": [{"b": true}],
        "constraints": [{"name": "t", "kind": "table", "values": [0.5]}],
        "aggregate": "t"
    })"));
    try {
        evaluate(bad_world);
        FAIL("expected a validation error");
    } catch (const SpecValidationError& e) {
        CHECK(e.path() == "worlds");
    }
}

TEST_CASE("interval evaluation pipeline end to end") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "profile": "lukasiewicz",
        "constraints": [
            {"name": "k", "kind": "interval", "lower": [0.2, 0.1], "upper": [0.7, 0.5]}
        ],
        "aggregate": "k",
        "queries": [{"kind": "bounds", "of": "a"}]
    })"));
    EvaluationReport report = evaluate(spec);

    CHECK(report.interval);
    REQUIRE(report.aggregate_interval.has_value());
    CHECK(nearly(report.aggregate_interval->lower()(0), 0.2));
    CHECK(nearly(report.aggregate_interval->upper()(1), 0.5));

    REQUIRE(report.ranking.size() == 2);
    CHECK(report.ranking[0].world == 0);
    CHECK(nearly(report.ranking[0].lower, 0.2));
    CHECK(nearly(report.ranking[0].upper, 0.7));

    REQUIRE(report.preference_interval.has_value());
    const PreferenceInterval& pref = *report.preference_interval;
    CHECK(nearly(pref.upper(0, 1), 0.6));
    CHECK(nearly(pref.upper(1, 0), 0.3));
    // raw upper diagonal keeps the width of the value interval
    CHECK(nearly(pref.upper(0, 0), 0.5));
    CHECK(pref.upper_tightened()(0, 0) == 0.0);
    CHECK(pref.lower(0, 1) == 0.0);

    REQUIRE(report.preference_upper_envelope.has_value());
    CHECK(report.preference_upper_envelope->same_values(pref.upper_tightened()));
    REQUIRE(report.similarity_interval.has_value());

    REQUIRE(report.axiom_reports.size() == 3);
    const AxiomReport& low = report.axiom_reports[0];
    CHECK(low.subject == "preference lower bound");
    CHECK(low.find("P1") != nullptr);
    CHECK(low.find("P2") != nullptr);
    CHECK(low.find("P3") == nullptr);
    const AxiomReport& env = report.axiom_reports[1];
    CHECK(env.subject == "preference upper envelope");
    CHECK(env.find("P2") == nullptr);
    CHECK(env.find("P3") != nullptr);
    const AxiomReport& sim = report.axiom_reports[2];
    CHECK(sim.subject == "similarity lower bound");
    CHECK(sim.checks.size() == 3);
    for (const auto& r : report.axiom_reports) CHECK(r.all_pass());

    REQUIRE(report.query_results.size() == 1);
    CHECK_FALSE(report.query_results[0].pairwise);
    CHECK(nearly(report.query_results[0].lower, 0.1));
    CHECK(nearly(report.query_results[0].upper, 0.5));
}

TEST_CASE("crisp constraints mix into interval pipelines") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "profile": "lukasiewicz",
        "constraints": [
            {"name": "c", "kind": "crisp", "formula": "a"},
            {"name": "k", "kind": "interval", "lower": [0.2, 0.1], "upper": [0.7, 0.5]}
        ],
        "aggregate": "c & k"
    })"));
    EvaluationReport report = evaluate(spec);
    CHECK(report.interval);
    CHECK(report.aggregate_interval->lower()(0) == 0.0);
    CHECK(report.aggregate_interval->upper()(0) == 0.0);
    CHECK(nearly(report.aggregate_interval->lower()(1), 0.1));
    CHECK(nearly(report.aggregate_interval->upper()(1), 0.5));
    CHECK(report.ranking[0].world == 1);
}

TEST_CASE("propositional bounds on an exact evaluation") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a"],
        "constraints": [
            {"name": "t1", "kind": "table", "values": [0.4, 0.9]},
            {"name": "t2", "kind": "table", "values": [0.6, 0.2]}
        ],
        "aggregate": "t1 & t2"
    })"));
    EvaluationReport report = evaluate(spec);

    BoundsResult plain = compute_bounds(report, "a | !a", "");
    CHECK_FALSE(plain.pairwise);
    CHECK(nearly(plain.lower, 0.2));
    CHECK(nearly(plain.upper, 0.4));

    BoundsResult single = compute_bounds(report, "a", "");
    CHECK(nearly(single.lower, 0.2));
    CHECK(nearly(single.upper, 0.2));

    BoundsResult pair = compute_bounds(report, "a", "!a");
    CHECK(pair.pairwise);
    CHECK(pair.pref_lower_of_given == 0.0);
    CHECK(pair.pref_upper_of_given == 0.0);
    CHECK(nearly(pair.pref_lower_given_of, 0.4));
    CHECK(nearly(pair.pref_upper_given_of, 0.4));
    CHECK(nearly(pair.resemblance_lower, 0.6));
    CHECK(nearly(pair.resemblance_upper, 0.6));

    CHECK_THROWS_AS(compute_bounds(report, "a & !a", ""), std::invalid_argument);
    try {
        compute_bounds(report, "a", "a & !a");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("selects no worlds") != std::string::npos);
    }
}

TEST_CASE("queries populate the evaluation report") {
    ProblemSpec spec = parse_spec(nlohmann::json::parse(R"({
        "atoms": ["a", "b"],
        "constraints": [{"name": "t", "kind": "table", "values": [0.1, 0.4, 0.6, 0.9]}],
        "aggregate": "t",
        "queries": [
            {"kind": "rank"},
            {"kind": "prefer", "of": "a & b", "given": "!a & !b"},
            {"kind": "bounds", "of": "a"}
        ]
    })"));
    EvaluationReport report = evaluate(spec);
    REQUIRE(report.query_results.size() == 2);
    CHECK(report.query_results[0].pairwise);
    CHECK(report.query_results[0].of == "a & b");
    CHECK_FALSE(report.query_results[1].pairwise);
    // preference of w3 over w0 under the max conorm: 0.9 since 0.9 > 0.1
    CHECK(nearly(report.query_results[0].pref_lower_of_given, 0.9));
    CHECK(report.query_results[0].pref_lower_given_of == 0.0);
    // desirability of "a": worlds 2 and 3
    CHECK(nearly(report.query_results[1].lower, 0.6));
    CHECK(nearly(report.query_results[1].upper, 0.9));
}

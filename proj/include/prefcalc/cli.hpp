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
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "prefcalc/problem.hpp"

namespace prefcalc {

// Exit codes of the command-line surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationError = 3;
inline constexpr int kExitInternalError = 4;

namespace cli {

/// Fixed-point rendering with 9 decimal digits and trailing zeros trimmed.
/// Both output formats use it, so they encode identical numbers.
inline std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    std::string s(buf);
    size_t dot = s.find('.');
    size_t last = s.find_last_not_of('0');
    s.erase(last > dot ? last + 1 : dot);
    if (s == "-0") s = "0";
    return s;
}

inline std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string json_string(const std::string& text) {
    return "\"" + json_escape(text) + "\"";
}

inline std::string json_number_array(const std::vector<double>& values) {
    std::string s = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += format_number(values[i]);
    }
    return s + "]";
}

inline std::string json_bool_array(const std::vector<bool>& values) {
    std::string s = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += values[i] ? "true" : "false";
    }
    return s + "]";
}

inline std::string json_int_array(const std::vector<int>& values) {
    std::string s = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s + "]";
}

/// Row-major n x n matrix as an array of row arrays.
inline std::string json_matrix(const std::vector<double>& flat, int n) {
    std::string s = "[";
    for (int r = 0; r < n; ++r) {
        if (r) s += ",";
        std::vector<double> row(flat.begin() + static_cast<long>(r) * n,
                                flat.begin() + static_cast<long>(r + 1) * n);
        s += json_number_array(row);
    }
    return s + "]";
}

inline std::string json_string_array(const std::vector<std::string>& values) {
    std::string s = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += json_string(values[i]);
    }
    return s + "]";
}

/// Columns are padded to their widest cell with two-space gutters; the last
/// cell of each row is never padded, so lines carry no trailing whitespace.
inline void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size(), ' ');
        }
        out << line << "\n";
    }
}

/// Interpretation choices every report relies on, stated once so consumers
/// can audit them.
inline std::vector<std::string> output_conventions() {
    return {
        "propositional lower bounds take the infimum and upper bounds the supremum over the "
        "selected worlds",
        "similarity transitivity is checked as S(w,w3) >= T(S(w,w2), S(w2,w3))",
        "interval preference matrices report the raw upper diagonal; derived similarity and "
        "transitive-envelope checks use the zero-diagonal tightening",
    };
}

inline std::string json_axiom_check(const AxiomCheck& check) {
    std::string s = "{\"axiom\":" + json_string(check.axiom) +
                    ",\"pass\":" + (check.pass ? "true" : "false");
    if (!check.pass) {
        s += ",\"witness_worlds\":" + json_int_array(check.witness_worlds);
        s += ",\"witness_values\":" + json_number_array(check.witness_values);
        s += ",\"detail\":" + json_string(check.detail);
    }
    return s + "}";
}

inline std::string json_axiom_report(const AxiomReport& report) {
    std::string s = "{\"subject\":" + json_string(report.subject) +
                    ",\"pass\":" + (report.all_pass() ? "true" : "false") + ",\"checks\":[";
    for (size_t i = 0; i < report.checks.size(); ++i) {
        if (i) s += ",";
        s += json_axiom_check(report.checks[i]);
    }
    s += "],\"notes\":" + json_string_array(report.notes);
    return s + "}";
}

// ---------------------------------------------------------------------------
// Subcommand renderers.
// ---------------------------------------------------------------------------

inline void print_rank(std::ostream& out, const EvaluationReport& report,
                       const std::string& format) {
    if (format == "json") {
        std::string s = "[";
        for (size_t i = 0; i < report.ranking.size(); ++i) {
            const RankEntry& e = report.ranking[i];
            if (i) s += ",";
            s += "{\"world\":" + std::to_string(e.world) +
                 ",\"valuation\":" + json_bool_array(e.valuation);
            if (report.interval)
                s += ",\"lower\":" + format_number(e.lower) +
                     ",\"upper\":" + format_number(e.upper);
            else
                s += ",\"value\":" + format_number(e.lower);
            s += "}";
        }
        out << s << "]\n";
        return;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"world"};
    for (const auto& atom : report.universe->atoms()) header.push_back(atom);
    if (report.interval) {
        header.push_back("lower");
        header.push_back("upper");
    } else {
        header.push_back("value");
    }
    rows.push_back(std::move(header));
    for (const RankEntry& e : report.ranking) {
        std::vector<std::string> row{std::to_string(e.world)};
        for (bool b : e.valuation) row.push_back(b ? "T" : "F");
        row.push_back(format_number(e.lower));
        if (report.interval) row.push_back(format_number(e.upper));
        rows.push_back(std::move(row));
    }
    write_table(out, rows);
}

namespace detail {

inline void matrix_table_block(std::ostream& out, const std::string& title,
                               const std::vector<double>& flat, int n) {
    out << title << "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{""};
    for (int c = 0; c < n; ++c) header.push_back("w" + std::to_string(c));
    rows.push_back(std::move(header));
    for (int r = 0; r < n; ++r) {
        std::vector<std::string> row{"w" + std::to_string(r)};
        for (int c = 0; c < n; ++c)
            row.push_back(format_number(flat[static_cast<size_t>(r) * n + c]));
        rows.push_back(std::move(row));
    }
    write_table(out, rows);
}

} // namespace detail

inline void print_matrix(std::ostream& out, const EvaluationReport& report,
                         const std::string& kind, const std::string& format) {
    const int n = report.universe->size();
    if (kind == "preference") {
        std::string conorm = to_string(report.profile.conorm);
        if (!report.interval) {
            if (format == "json") {
                out << "{\"kind\":\"preference\",\"worlds\":" << n
                    << ",\"conorm\":" << json_string(conorm)
                    << ",\"values\":" << json_matrix(report.preference->values(), n) << "}\n";
            } else {
                detail::matrix_table_block(out, "preference matrix (conorm " + conorm + ")",
                                           report.preference->values(), n);
            }
            return;
        }
        std::vector<double> tightened = report.preference_interval->upper_tightened().values();
        if (format == "json") {
            out << "{\"kind\":\"preference\",\"worlds\":" << n
                << ",\"conorm\":" << json_string(conorm)
                << ",\"lower\":" << json_matrix(report.preference_interval->lower_relation().values(), n)
                << ",\"upper\":" << json_matrix(report.preference_interval->upper_relation().values(), n)
                << ",\"upper_tightened\":" << json_matrix(tightened, n) << "}\n";
        } else {
            detail::matrix_table_block(out, "preference lower bound (conorm " + conorm + ")",
                                       report.preference_interval->lower_relation().values(), n);
            out << "\n";
            detail::matrix_table_block(out, "preference upper bound, raw",
                                       report.preference_interval->upper_relation().values(), n);
            out << "\n";
            detail::matrix_table_block(out, "preference upper bound, zero diagonal", tightened,
                                       n);
        }
        return;
    }

    // Similarity.
    if (!report.interval) {
        std::string tn = to_string(report.similarity->tnorm_family());
        if (format == "json") {
            out << "{\"kind\":\"similarity\",\"worlds\":" << n << ",\"tnorm\":" << json_string(tn)
                << ",\"values\":" << json_matrix(report.similarity->values(), n) << "}\n";
        } else {
            detail::matrix_table_block(out, "similarity matrix (tnorm " + tn + ")",
                                       report.similarity->values(), n);
        }
        return;
    }
    std::string tn = to_string(report.similarity_interval->lower.tnorm_family());
    if (format == "json") {
        out << "{\"kind\":\"similarity\",\"worlds\":" << n << ",\"tnorm\":" << json_string(tn)
            << ",\"lower\":" << json_matrix(report.similarity_interval->lower.values(), n)
            << ",\"upper\":" << json_matrix(report.similarity_interval->upper.values(), n)
            << "}\n";
    } else {
        detail::matrix_table_block(out, "similarity lower bound (tnorm " + tn + ")",
                                   report.similarity_interval->lower.values(), n);
        out << "\n";
        detail::matrix_table_block(out, "similarity upper bound",
                                   report.similarity_interval->upper.values(), n);
    }
}

inline void print_bounds(std::ostream& out, const BoundsResult& result,
                         const std::string& format) {
    if (format == "json") {
        std::string s = "{\"of\":" + json_string(result.of);
        if (!result.pairwise) {
            s += ",\"lower\":" + format_number(result.lower) +
                 ",\"upper\":" + format_number(result.upper);
        } else {
            s += ",\"given\":" + json_string(result.given);
            s += ",\"preference\":{\"of_over_given\":{\"lower\":" +
                 format_number(result.pref_lower_of_given) +
                 ",\"upper\":" + format_number(result.pref_upper_of_given) +
                 "},\"given_over_of\":{\"lower\":" + format_number(result.pref_lower_given_of) +
                 ",\"upper\":" + format_number(result.pref_upper_given_of) + "}}";
            s += ",\"resemblance\":{\"lower\":" + format_number(result.resemblance_lower) +
                 ",\"upper\":" + format_number(result.resemblance_upper) + "}";
        }
        out << s << "}\n";
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"of", result.of});
    if (!result.pairwise) {
        rows.push_back({"lower", format_number(result.lower)});
        rows.push_back({"upper", format_number(result.upper)});
    } else {
        rows.push_back({"given", result.given});
        rows.push_back(
            {"preference lower (of over given)", format_number(result.pref_lower_of_given)});
        rows.push_back(
            {"preference upper (of over given)", format_number(result.pref_upper_of_given)});
        rows.push_back(
            {"preference lower (given over of)", format_number(result.pref_lower_given_of)});
        rows.push_back(
            {"preference upper (given over of)", format_number(result.pref_upper_given_of)});
        rows.push_back({"resemblance lower", format_number(result.resemblance_lower)});
        rows.push_back({"resemblance upper", format_number(result.resemblance_upper)});
    }
    write_table(out, rows);
}

inline bool print_check(std::ostream& out, const EvaluationReport& report,
                        const std::string& profile_name, int grid_denominator,
                        const std::string& format) {
    std::vector<AxiomReport> reports;
    reports.push_back(verify_profile(report.profile, grid_denominator));
    for (const auto& r : report.axiom_reports) reports.push_back(r);

    bool pass = std::all_of(reports.begin(), reports.end(),
                            [](const AxiomReport& r) { return r.all_pass(); });

    if (format == "json") {
        std::string s = "{\"profile\":" + json_string(profile_name) +
                        ",\"grid_denominator\":" + std::to_string(grid_denominator) +
                        ",\"pass\":" + (pass ? "true" : "false") + ",\"reports\":[";
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) s += ",";
            s += json_axiom_report(reports[i]);
        }
        s += "],\"conventions\":" + json_string_array(output_conventions()) + "}";
        out << s << "\n";
        return pass;
    }

    out << "profile: " << profile_name << "  grid: 1/" << grid_denominator << "\n\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"subject", "check", "result"});
    size_t total = 0, failed = 0;
    for (const auto& r : reports)
        for (const auto& c : r.checks) {
            ++total;
            if (!c.pass) ++failed;
            rows.push_back({r.subject, c.axiom, c.pass ? "pass" : "FAIL"});
        }
    write_table(out, rows);

    bool any_failure_detail = false;
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            if (!c.pass) {
                if (!any_failure_detail) {
                    out << "\nfailures:\n";
                    any_failure_detail = true;
                }
                out << "  - " << r.subject << " / " << c.axiom << ": " << c.detail;
                if (!c.witness_worlds.empty()) {
                    out << " (worlds:";
                    for (int w : c.witness_worlds) out << " " << w;
                    out << ")";
                }
                if (!c.witness_values.empty()) {
                    out << " (values:";
                    for (double v : c.witness_values) out << " " << format_number(v);
                    out << ")";
                }
                out << "\n";
            }

    bool any_note = false;
    for (const auto& r : reports)
        for (const auto& note : r.notes) {
            if (!any_note) {
                out << "\nnotes:\n";
                any_note = true;
            }
            out << "  - " << r.subject << ": " << note << "\n";
        }

    out << "\nconventions:\n";
    for (const auto& line : output_conventions()) out << "  - " << line << "\n";
    out << "\nresult: " << total << " checks, "
        << (failed == 0 ? std::string("all passed") : std::to_string(failed) + " failed")
        << "\n";
    return pass;
}

/// "1/N" or bare "N" with 2 <= N <= 128.
inline std::optional<int> parse_grid(const std::string& text) {
    std::string digits = text;
    if (digits.rfind("1/", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.size() > 3 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    int n = std::stoi(digits);
    if (n < 2 || n > 128) return std::nullopt;
    return n;
}

} // namespace cli

/// Command-line entry point.  `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graded constraint satisfaction over finite world universes"};
    app.name("prefcalc");
    app.require_subcommand(1);

    std::string format = "table";
    std::string profile_override;
    std::string grid = "1/16";
    app.add_option("--format", format, "output format (default table)")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--profile", profile_override, "override the spec's norm profile")
        ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
    app.add_option("--grid", grid, "verification grid step 1/N for check (default 1/16)");

    std::string rank_spec, check_spec, matrix_spec, bounds_spec;
    std::string matrix_kind, bounds_of, bounds_given;

    CLI::App* rank = app.add_subcommand("rank", "rank worlds by aggregate desirability");
    rank->fallthrough();
    rank->add_option("spec", rank_spec, "problem spec file")->required();

    CLI::App* check = app.add_subcommand("check", "verify connective laws and relation axioms");
    check->fallthrough();
    check->add_option("spec", check_spec, "problem spec file")->required();

    CLI::App* matrix = app.add_subcommand("matrix", "print a derived relation matrix");
    matrix->fallthrough();
    matrix->add_option("spec", matrix_spec, "problem spec file")->required();
    matrix->add_option("--kind", matrix_kind, "which matrix to print")
        ->required()
        ->check(CLI::IsMember({"preference", "similarity"}));

    CLI::App* bounds = app.add_subcommand("bounds", "propositional bounds readout");
    bounds->fallthrough();
    bounds->add_option("spec", bounds_spec, "problem spec file")->required();
    bounds->add_option("--of", bounds_of, "proposition formula")->required();
    bounds->add_option("--given", bounds_given, "reference proposition formula");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (rank->parsed()) {
            ProblemSpec spec = load_spec(rank_spec);
            if (!profile_override.empty()) {
                spec.profile_name = profile_override;
                spec.profile = profile_by_name(profile_override);
            }
            cli::print_rank(out, evaluate(spec), format);
            return kExitOk;
        }
        if (check->parsed()) {
            std::optional<int> grid_n = cli::parse_grid(grid);
            if (!grid_n) {
                err << "error: --grid expects 1/N with 2 <= N <= 128\n";
                return kExitParseError;
            }
            ProblemSpec spec = load_spec(check_spec);
            if (!profile_override.empty()) {
                spec.profile_name = profile_override;
                spec.profile = profile_by_name(profile_override);
            }
            bool pass = cli::print_check(out, evaluate(spec), spec.profile_name, *grid_n, format);
            return pass ? kExitOk : kExitCheckFailed;
        }
        if (matrix->parsed()) {
            ProblemSpec spec = load_spec(matrix_spec);
            if (!profile_override.empty()) {
                spec.profile_name = profile_override;
                spec.profile = profile_by_name(profile_override);
            }
            cli::print_matrix(out, evaluate(spec), matrix_kind, format);
            return kExitOk;
        }
        if (bounds->parsed()) {
            ProblemSpec spec = load_spec(bounds_spec);
            if (!profile_override.empty()) {
                spec.profile_name = profile_override;
                spec.profile = profile_by_name(profile_override);
            }
            EvaluationReport report = evaluate(spec);
            cli::print_bounds(out, compute_bounds(report, bounds_of, bounds_given), format);
            return kExitOk;
        }
        err << "error: no command\n";
        return kExitParseError;
    } catch (const SpecParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const SpecValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

} // namespace prefcalc

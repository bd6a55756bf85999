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

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prefcalc/desirability.hpp"
#include "prefcalc/norms.hpp"
#include "prefcalc/report.hpp"
#include "prefcalc/worlds.hpp"

namespace prefcalc {

/// A graded preference relation: value(w, w2) quantifies how much of one's
/// resources one would spend to be in world w rather than in w2.
///
/// The axioms of a well-formed relation are
///   P1  value(w, w) = 0,
///   P2  value(w, w2) > 0 implies value(w2, w) = 0,
///   P3  value(w, w3) <= conorm(value(w, w2), value(w2, w3)),
/// with transitivity bounded by the relation's own conorm.  Construction does
/// not enforce them (planted violations and bound matrices are legitimate
/// values here); verify_axioms reports on them.
class PreferenceRelation {
public:
    PreferenceRelation(UniversePtr universe, ConormFamily conorm, std::vector<double> values)
        : universe_(std::move(universe)), conorm_(conorm), values_(std::move(values)) {
        if (!universe_) throw std::invalid_argument("relation needs a universe");
        const size_t n = static_cast<size_t>(universe_->size());
        if (values_.size() != n * n)
            throw std::invalid_argument("relation has " + std::to_string(values_.size()) +
                                        " entries for " + std::to_string(n) + " worlds");
        for (double v : values_)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::domain_error("relation value " + std::to_string(v) +
                                        " outside [0, 1]");
    }

    static PreferenceRelation zero(UniversePtr universe, ConormFamily conorm) {
        const size_t n = static_cast<size_t>(universe->size());
        return PreferenceRelation(std::move(universe), conorm, std::vector<double>(n * n, 0.0));
    }

    const UniversePtr& universe() const { return universe_; }
    ConormFamily conorm_family() const { return conorm_; }
    int size() const { return universe_->size(); }
    const std::vector<double>& values() const { return values_; }

    /// Preference of `preferred` over `over`.
    double operator()(int preferred, int over) const {
        return values_[static_cast<size_t>(preferred) * static_cast<size_t>(size()) +
                       static_cast<size_t>(over)];
    }

    bool same_values(const PreferenceRelation& other, double tol = kTolerance) const {
        if (values_.size() != other.values_.size()) return false;
        for (size_t i = 0; i < values_.size(); ++i)
            if (std::fabs(values_[i] - other.values_[i]) > tol) return false;
        return true;
    }

private:
    UniversePtr universe_;
    ConormFamily conorm_;
    std::vector<double> values_;
};

/// A family of desirability measures presented as joint criteria: the
/// sup-of-differences over the family regenerates a preference relation.
struct GeneratingFamily {
    UniversePtr universe;
    std::vector<DesirabilityMeasure> generators;
};

namespace detail {

inline void require_same_relation_space(const PreferenceRelation& a,
                                        const PreferenceRelation& b) {
    if (!same_universe(a.universe(), b.universe()))
        throw std::invalid_argument("relations live in different universes");
    if (a.conorm_family() != b.conorm_family())
        throw std::invalid_argument("relations use different conorms");
}

} // namespace detail

/// Derive the preference relation induced by a single desirability measure:
/// the conorm-pseudoinverse gap value(w, w2) = D(w) "minus" D(w2).  The
/// result always satisfies P1-P3.
inline PreferenceRelation from_desirability(const DesirabilityMeasure& d, ConormFamily conorm) {
    const int n = d.size();
    std::vector<double> values(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int w = 0; w < n; ++w)
        for (int w2 = 0; w2 < n; ++w2)
            values[static_cast<size_t>(w) * static_cast<size_t>(n) + static_cast<size_t>(w2)] =
                conorm_pseudoinverse(conorm, d(w), d(w2));
    return PreferenceRelation(d.universe(), conorm, std::move(values));
}

/// Exhaustive P1/P2/P3 check with a witness for the first violation of each
/// axiom.
inline AxiomReport verify_axioms(const PreferenceRelation& rel) {
    AxiomReport report;
    report.subject = "preference";
    const int n = rel.size();

    {
        AxiomCheck chk;
        chk.axiom = "P1";
        for (int w = 0; w < n && chk.pass; ++w)
            if (std::fabs(rel(w, w)) > kTolerance) {
                chk.pass = false;
                chk.witness_worlds = {w};
                chk.witness_values = {rel(w, w)};
                chk.detail = "nonzero self-preference";
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk;
        chk.axiom = "P2";
        for (int w = 0; w < n && chk.pass; ++w)
            for (int w2 = 0; w2 < n && chk.pass; ++w2)
                if (rel(w, w2) > kTolerance && rel(w2, w) > kTolerance) {
                    chk.pass = false;
                    chk.witness_worlds = {w, w2};
                    chk.witness_values = {rel(w, w2), rel(w2, w)};
                    chk.detail = "mutual positive preference";
                }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk;
        chk.axiom = "P3";
        for (int w = 0; w < n && chk.pass; ++w)
            for (int w2 = 0; w2 < n && chk.pass; ++w2)
                for (int w3 = 0; w3 < n && chk.pass; ++w3) {
                    double bound = conorm(rel.conorm_family(), rel(w, w2), rel(w2, w3));
                    if (rel(w, w3) > bound + kTolerance) {
                        chk.pass = false;
                        chk.witness_worlds = {w, w2, w3};
                        chk.witness_values = {rel(w, w3), bound};
                        chk.detail = "transitivity bound exceeded";
                    }
                }
        report.checks.push_back(std::move(chk));
    }
    return report;
}

/// World-indexed generating columns D_w(w2) = value(w2, w), one generator per
/// world, no deduplication.  This indexing is what the relation-level
/// combinators pair on.
inline GeneratingFamily valverde_columns(const PreferenceRelation& rel) {
    const int n = rel.size();
    GeneratingFamily family;
    family.universe = rel.universe();
    family.generators.reserve(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) {
        std::vector<double> column(static_cast<size_t>(n));
        for (int w2 = 0; w2 < n; ++w2) column[static_cast<size_t>(w2)] = rel(w2, w);
        family.generators.emplace_back(rel.universe(), std::move(column));
    }
    return family;
}

/// Canonical generating family of an axiom-satisfying relation: the
/// world-indexed columns with duplicates removed.  The family is frequently
/// much smaller than the universe.  Throws when the relation fails P1-P3.
inline GeneratingFamily valverde_family(const PreferenceRelation& rel) {
    AxiomReport axioms = verify_axioms(rel);
    if (!axioms.all_pass()) {
        for (const auto& c : axioms.checks)
            if (!c.pass)
                throw std::invalid_argument("relation violates " + c.axiom + ": " + c.detail);
    }

    GeneratingFamily columns = valverde_columns(rel);
    GeneratingFamily family;
    family.universe = rel.universe();

    // Deduplicate by column equality after rounding to 1e-12.
    auto key_of = [](const DesirabilityMeasure& m) {
        std::vector<std::int64_t> key;
        key.reserve(m.values().size());
        for (double v : m.values()) key.push_back(std::llround(v * 1e12));
        return key;
    };
    std::vector<std::vector<std::int64_t>> seen;
    for (const auto& gen : columns.generators) {
        auto key = key_of(gen);
        bool duplicate = false;
        for (const auto& k : seen)
            if (k == key) {
                duplicate = true;
                break;
            }
        if (!duplicate) {
            seen.push_back(std::move(key));
            family.generators.push_back(gen);
        }
    }
    return family;
}

/// Rebuild a preference relation as the sup of pseudoinverse gaps over the
/// family.  P1 holds by construction; P2 and P3 are not guaranteed for an
/// arbitrary family and should be read off verify_axioms.
inline PreferenceRelation regenerate(const GeneratingFamily& family, ConormFamily conorm) {
    if (family.generators.empty()) throw std::invalid_argument("empty generating family");
    for (const auto& g : family.generators)
        if (!same_universe(g.universe(), family.universe))
            throw std::invalid_argument("generator lives in a different universe");

    const int n = family.universe->size();
    std::vector<double> values(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    for (int w = 0; w < n; ++w)
        for (int w2 = 0; w2 < n; ++w2) {
            double best = 0.0;
            for (const auto& g : family.generators)
                best = std::max(best, conorm_pseudoinverse(conorm, g(w), g(w2)));
            values[static_cast<size_t>(w) * static_cast<size_t>(n) + static_cast<size_t>(w2)] =
                best;
        }
    return PreferenceRelation(family.universe, conorm, std::move(values));
}

/// Answer of the single-generator recovery problem.
struct SingleGeneratorResult {
    enum class Status { found, none, unknown };

    Status status = Status::unknown;
    std::optional<DesirabilityMeasure> generator;
    /// Range of constant shifts that keep the recovered measure in [0,1]
    /// while inducing the same relation (bounded-sum closed form only).
    std::optional<std::pair<double, double>> shift_range;
};

/// Try to recover one desirability measure whose induced relation equals the
/// input.
///
/// For the bounded-sum conorm a closed form applies: against reference world
/// 0, the difference value(w, 0) - value(0, w) pins D(w) - D(0), and any
/// constant shift keeping values inside [0,1] works.  The canonical
/// representative uses the smallest feasible shift.  For the other conorms a
/// grid search (step 1/32) runs on universes of at most 4 worlds; larger
/// instances answer "unknown".  Absence is a value, not an error.
inline SingleGeneratorResult single_generator(const PreferenceRelation& rel) {
    SingleGeneratorResult result;
    const int n = rel.size();

    // A single measure always induces a P1-P3 relation, so any axiom
    // violation rules recovery out immediately.
    if (!verify_axioms(rel).all_pass()) {
        result.status = SingleGeneratorResult::Status::none;
        return result;
    }

    if (rel.conorm_family() == ConormFamily::bounded_sum) {
        std::vector<double> delta(static_cast<size_t>(n));
        double lo = 0.0, hi = 0.0;
        for (int w = 0; w < n; ++w) {
            delta[static_cast<size_t>(w)] = rel(w, 0) - rel(0, w);
            lo = std::min(lo, delta[static_cast<size_t>(w)]);
            hi = std::max(hi, delta[static_cast<size_t>(w)]);
        }
        const double shift_min = -lo;
        const double shift_max = 1.0 - hi;
        if (shift_min > shift_max + kTolerance) {
            result.status = SingleGeneratorResult::Status::none;
            return result;
        }

        std::vector<double> values(static_cast<size_t>(n));
        for (int w = 0; w < n; ++w)
            values[static_cast<size_t>(w)] =
                std::clamp(shift_min + delta[static_cast<size_t>(w)], 0.0, 1.0);
        DesirabilityMeasure candidate(rel.universe(), std::move(values));
        if (from_desirability(candidate, rel.conorm_family()).same_values(rel)) {
            result.status = SingleGeneratorResult::Status::found;
            result.generator = std::move(candidate);
            result.shift_range = {shift_min, shift_max};
        } else {
            result.status = SingleGeneratorResult::Status::none;
        }
        return result;
    }

    // Grid search fallback for the remaining conorms.
    constexpr int kGridSteps = 32;
    constexpr int kMaxSearchWorlds = 4;
    if (n > kMaxSearchWorlds) {
        result.status = SingleGeneratorResult::Status::unknown;
        return result;
    }
    std::vector<int> idx(static_cast<size_t>(n), 0);
    std::vector<double> values(static_cast<size_t>(n), 0.0);
    while (true) {
        for (int w = 0; w < n; ++w)
            values[static_cast<size_t>(w)] =
                static_cast<double>(idx[static_cast<size_t>(w)]) / kGridSteps;
        DesirabilityMeasure candidate(rel.universe(), values);
        if (from_desirability(candidate, rel.conorm_family()).same_values(rel)) {
            result.status = SingleGeneratorResult::Status::found;
            result.generator = std::move(candidate);
            return result;
        }
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == kGridSteps) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    result.status = SingleGeneratorResult::Status::none;
    return result;
}

enum class PreferenceOp { conjunction, disjunction, negation, implication };

/// Combine generating families index-by-index with the measure-level
/// connective.  Both families must be world-indexed (same length).
inline GeneratingFamily combine_families(const NormProfile& profile, PreferenceOp op,
                                         const GeneratingFamily& a,
                                         const GeneratingFamily* b = nullptr) {
    GeneratingFamily out;
    out.universe = a.universe;
    if (op == PreferenceOp::negation) {
        if (b != nullptr)
            throw std::invalid_argument("negation combines a single family");
        for (const auto& g : a.generators) out.generators.push_back(not_measure(profile, g));
        return out;
    }
    if (b == nullptr) throw std::invalid_argument("binary combination needs two families");
    if (!same_universe(a.universe, b->universe))
        throw std::invalid_argument("families live in different universes");
    if (a.generators.size() != b->generators.size())
        throw std::invalid_argument("families must pair index-by-index");
    for (size_t i = 0; i < a.generators.size(); ++i) {
        switch (op) {
            case PreferenceOp::conjunction:
                out.generators.push_back(
                    and_measures(profile, a.generators[i], b->generators[i]));
                break;
            case PreferenceOp::disjunction:
                out.generators.push_back(or_measures(profile, a.generators[i], b->generators[i]));
                break;
            case PreferenceOp::implication:
                out.generators.push_back(
                    implies_measures(profile, a.generators[i], b->generators[i]));
                break;
            case PreferenceOp::negation:
                break;
        }
    }
    return out;
}

/// A combined relation together with the axiom report of the regenerated
/// result.  Sup-regeneration of mixed families can violate P2 (two criteria
/// may disagree on direction), so the status is surfaced instead of enforced.
struct CombinedPreference {
    PreferenceRelation relation;
    AxiomReport report;
};

/// Relation-level connective: pair the operands' world-indexed generating
/// columns, combine them with the measure-level connective, and regenerate.
inline CombinedPreference combine(const NormProfile& profile, PreferenceOp op,
                                  const PreferenceRelation& a,
                                  const PreferenceRelation* b = nullptr) {
    GeneratingFamily fa = valverde_columns(a);
    ConormFamily conorm = a.conorm_family();
    GeneratingFamily combined;
    if (op == PreferenceOp::negation) {
        if (b != nullptr) throw std::invalid_argument("negation combines a single relation");
        combined = combine_families(profile, op, fa);
    } else {
        if (b == nullptr) throw std::invalid_argument("binary combination needs two relations");
        detail::require_same_relation_space(a, *b);
        GeneratingFamily fb = valverde_columns(*b);
        combined = combine_families(profile, op, fa, &fb);
    }
    PreferenceRelation rel = regenerate(combined, conorm);
    AxiomReport report = verify_axioms(rel);
    report.subject = "combined preference";
    return CombinedPreference{std::move(rel), std::move(report)};
}

/// Guaranteed preference of every p-world over every q-world: the inf-inf
/// aggregation of the relation.
inline double prop_pref_lower(const PreferenceRelation& rel, const Proposition& p,
                              const Proposition& q) {
    if (!same_universe(rel.universe(), p.universe()) ||
        !same_universe(rel.universe(), q.universe()))
        throw std::invalid_argument("relation and propositions live in different universes");
    if (p.empty() || q.empty())
        throw std::invalid_argument("propositional preference over an empty proposition");
    double lo = 1.0;
    for (int w : p.members())
        for (int w2 : q.members()) lo = std::min(lo, rel(w, w2));
    return lo;
}

/// Best-case preference of a p-world over q-worlds: sup over p of the inf
/// over q.
inline double prop_pref_upper(const PreferenceRelation& rel, const Proposition& p,
                              const Proposition& q) {
    if (!same_universe(rel.universe(), p.universe()) ||
        !same_universe(rel.universe(), q.universe()))
        throw std::invalid_argument("relation and propositions live in different universes");
    if (p.empty() || q.empty())
        throw std::invalid_argument("propositional preference over an empty proposition");
    double best = 0.0;
    for (int w : p.members()) {
        double inner = 1.0;
        for (int w2 : q.members()) inner = std::min(inner, rel(w, w2));
        best = std::max(best, inner);
    }
    return best;
}

/// Pairwise lower/upper bounds on an incompletely known preference relation.
///
/// The lower diagonal is zero by construction.  The upper diagonal keeps its
/// raw formula value, which under ignorance can exceed zero even though every
/// relation in the enclosed family has a zero diagonal; upper_tightened()
/// exposes the diagonal-zeroed form, which stays a sound bound.
class PreferenceInterval {
public:
    PreferenceInterval(UniversePtr universe, ConormFamily conorm, std::vector<double> lower,
                       std::vector<double> upper)
        : universe_(std::move(universe)),
          conorm_(conorm),
          lower_(std::move(lower)),
          upper_(std::move(upper)) {
        if (!universe_) throw std::invalid_argument("preference interval needs a universe");
        const size_t n = static_cast<size_t>(universe_->size());
        if (lower_.size() != n * n || upper_.size() != n * n)
            throw std::invalid_argument("preference interval matrices do not cover the universe");
        for (size_t i = 0; i < lower_.size(); ++i) {
            if (!(lower_[i] >= 0.0 && lower_[i] <= 1.0) || !(upper_[i] >= 0.0 && upper_[i] <= 1.0))
                throw std::domain_error("preference bound outside [0, 1]");
            if (lower_[i] > upper_[i] + kTolerance)
                throw std::invalid_argument("preference lower bound exceeds upper bound");
        }
        for (size_t w = 0; w < n; ++w)
            if (lower_[w * n + w] > kTolerance)
                throw std::invalid_argument("preference lower bound has a nonzero diagonal");
    }

    const UniversePtr& universe() const { return universe_; }
    ConormFamily conorm_family() const { return conorm_; }
    int size() const { return universe_->size(); }

    double lower(int w, int w2) const {
        return lower_[static_cast<size_t>(w) * static_cast<size_t>(size()) +
                      static_cast<size_t>(w2)];
    }
    double upper(int w, int w2) const {
        return upper_[static_cast<size_t>(w) * static_cast<size_t>(size()) +
                      static_cast<size_t>(w2)];
    }

    PreferenceRelation lower_relation() const {
        return PreferenceRelation(universe_, conorm_, lower_);
    }
    /// Raw formula values, diagonal included.
    PreferenceRelation upper_relation() const {
        return PreferenceRelation(universe_, conorm_, upper_);
    }
    /// Upper bound with the diagonal forced to zero.  Sound, because every
    /// admissible relation has zero self-preference.
    PreferenceRelation upper_tightened() const {
        const size_t n = static_cast<size_t>(size());
        std::vector<double> values = upper_;
        for (size_t w = 0; w < n; ++w) values[w * n + w] = 0.0;
        return PreferenceRelation(universe_, conorm_, std::move(values));
    }

    bool contains(const PreferenceRelation& rel, double tol = kTolerance) const {
        if (!same_universe(rel.universe(), universe_)) return false;
        const int n = size();
        for (int w = 0; w < n; ++w)
            for (int w2 = 0; w2 < n; ++w2)
                if (rel(w, w2) < lower(w, w2) - tol || rel(w, w2) > upper(w, w2) + tol)
                    return false;
        return true;
    }

private:
    UniversePtr universe_;
    ConormFamily conorm_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Lift a desirability enclosure to a preference enclosure: the guaranteed
/// preference pairs the lower desirability of the preferred world against the
/// upper desirability of the other, and dually for the possible preference.
inline PreferenceInterval interval_pref_from_desirability(const DesirabilityInterval& interval,
                                                          ConormFamily conorm) {
    const int n = interval.universe()->size();
    std::vector<double> lower(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<double> upper(lower.size());
    for (int w = 0; w < n; ++w)
        for (int w2 = 0; w2 < n; ++w2) {
            const size_t at =
                static_cast<size_t>(w) * static_cast<size_t>(n) + static_cast<size_t>(w2);
            lower[at] = conorm_pseudoinverse(conorm, interval.lower()(w), interval.upper()(w2));
            upper[at] = conorm_pseudoinverse(conorm, interval.upper()(w), interval.lower()(w2));
        }
    return PreferenceInterval(interval.universe(), conorm, std::move(lower), std::move(upper));
}

/// Greatest conorm-transitive function pointwise below the input: semiring
/// shortest paths where a path's value is the conorm-sum of its edges and
/// competing paths take the min.  Floyd-Warshall sweeps repeat to a fixpoint.
/// The input models an upper bound, so its diagonal must already be zero.
inline PreferenceRelation transitive_envelope(const PreferenceRelation& upper) {
    const int n = upper.size();
    for (int w = 0; w < n; ++w)
        if (std::fabs(upper(w, w)) > kTolerance)
            throw std::invalid_argument("transitive envelope needs a zero diagonal");

    std::vector<double> m = upper.values();
    auto at = [n](int i, int j) {
        return static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double via = conorm(upper.conorm_family(), m[at(i, k)], m[at(k, j)]);
                    if (via < m[at(i, j)] - 1e-15) {
                        m[at(i, j)] = via;
                        changed = true;
                    }
                }
    }
    return PreferenceRelation(upper.universe(), upper.conorm_family(), std::move(m));
}

} // namespace prefcalc

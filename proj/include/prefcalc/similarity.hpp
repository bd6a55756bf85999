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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prefcalc/norms.hpp"
#include "prefcalc/preference.hpp"
#include "prefcalc/report.hpp"
#include "prefcalc/worlds.hpp"

namespace prefcalc {

/// A graded indistinguishability relation over worlds.  The axioms are
///   S1  value(w, w) = 1,
///   S2  value(w, w2) = value(w2, w),
///   S3  value(w, w3) >= tnorm(value(w, w2), value(w2, w3)).
/// As with preference relations, construction validates only the value range;
/// verify_similarity reports on the axioms.
class SimilarityRelation {
public:
    SimilarityRelation(UniversePtr universe, TnormFamily tnorm, std::vector<double> values)
        : universe_(std::move(universe)), tnorm_(tnorm), values_(std::move(values)) {
        if (!universe_) throw std::invalid_argument("similarity needs a universe");
        const size_t n = static_cast<size_t>(universe_->size());
        if (values_.size() != n * n)
            throw std::invalid_argument("similarity has " + std::to_string(values_.size()) +
                                        " entries for " + std::to_string(n) + " worlds");
        for (double v : values_)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::domain_error("similarity value " + std::to_string(v) +
                                        " outside [0, 1]");
    }

    const UniversePtr& universe() const { return universe_; }
    TnormFamily tnorm_family() const { return tnorm_; }
    int size() const { return universe_->size(); }
    const std::vector<double>& values() const { return values_; }

    double operator()(int w, int w2) const {
        return values_[static_cast<size_t>(w) * static_cast<size_t>(size()) +
                       static_cast<size_t>(w2)];
    }

private:
    UniversePtr universe_;
    TnormFamily tnorm_;
    std::vector<double> values_;
};

/// The t-norm matched to a conorm by the standard negation.
inline TnormFamily dual_tnorm(ConormFamily conorm) {
    switch (conorm) {
        case ConormFamily::maximum: return TnormFamily::minimum;
        case ConormFamily::probabilistic_sum: return TnormFamily::product;
        case ConormFamily::bounded_sum: return TnormFamily::bounded_difference;
    }
    throw std::logic_error("unreachable conorm family");
}

/// Indistinguishability induced by a preference relation: two worlds resemble
/// each other to the degree neither is preferred to the other,
///   value(w, w2) = min(1 - pref(w, w2), 1 - pref(w2, w)).
/// For a P1-P3 relation the result satisfies S1-S3 under the dual t-norm.
inline SimilarityRelation from_preference(const PreferenceRelation& rel) {
    const int n = rel.size();
    std::vector<double> values(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int w = 0; w < n; ++w)
        for (int w2 = 0; w2 < n; ++w2)
            values[static_cast<size_t>(w) * static_cast<size_t>(n) + static_cast<size_t>(w2)] =
                std::min(negate(NegationFamily::standard, rel(w, w2)),
                         negate(NegationFamily::standard, rel(w2, w)));
    return SimilarityRelation(rel.universe(), dual_tnorm(rel.conorm_family()),
                              std::move(values));
}

/// Direction of the transitivity inequality to check.  `standard` is the
/// lower-bound form S(w, w3) >= T(S(w, w2), S(w2, w3)); `inverted` flips the
/// comparison for exploratory use against upper-bound readings.
enum class TransitivityCheck { standard, inverted };

/// Exhaustive S1/S2/S3 check with a witness for the first violation of each
/// axiom.
inline AxiomReport verify_similarity(const SimilarityRelation& sim,
                                     TransitivityCheck direction = TransitivityCheck::standard) {
    AxiomReport report;
    report.subject = "similarity";
    const int n = sim.size();

    {
        AxiomCheck chk;
        chk.axiom = "S1";
        for (int w = 0; w < n && chk.pass; ++w)
            if (std::fabs(sim(w, w) - 1.0) > kTolerance) {
                chk.pass = false;
                chk.witness_worlds = {w};
                chk.witness_values = {sim(w, w)};
                chk.detail = "self-similarity below 1";
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk;
        chk.axiom = "S2";
        for (int w = 0; w < n && chk.pass; ++w)
            for (int w2 = w + 1; w2 < n && chk.pass; ++w2)
                if (std::fabs(sim(w, w2) - sim(w2, w)) > kTolerance) {
                    chk.pass = false;
                    chk.witness_worlds = {w, w2};
                    chk.witness_values = {sim(w, w2), sim(w2, w)};
                    chk.detail = "asymmetric similarity";
                }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk;
        chk.axiom = "S3";
        for (int w = 0; w < n && chk.pass; ++w)
            for (int w2 = 0; w2 < n && chk.pass; ++w2)
                for (int w3 = 0; w3 < n && chk.pass; ++w3) {
                    double bound = tnorm(sim.tnorm_family(), sim(w, w2), sim(w2, w3));
                    bool violated = direction == TransitivityCheck::standard
                                        ? sim(w, w3) < bound - kTolerance
                                        : sim(w, w3) > bound + kTolerance;
                    if (violated) {
                        chk.pass = false;
                        chk.witness_worlds = {w, w2, w3};
                        chk.witness_values = {sim(w, w3), bound};
                        chk.detail = direction == TransitivityCheck::standard
                                         ? "transitivity bound not reached"
                                         : "inverted transitivity bound exceeded";
                    }
                }
        if (direction == TransitivityCheck::inverted)
            report.notes.push_back("S3 checked in the inverted direction");
        report.checks.push_back(std::move(chk));
    }
    return report;
}

/// Two-sided resemblance estimate between propositions.
struct ResemblanceBounds {
    double lower = 0.0;
    double upper = 1.0;
};

/// Resemblance bounds from the four propositional preference aggregates.
/// Similarity negates preference, so possible preference caps resemblance
/// from above via the lower bound and guaranteed preference caps it from
/// below via the upper bound.
inline ResemblanceBounds resemblance_bounds(double pref_lower_pq, double pref_lower_qp,
                                            double pref_upper_pq, double pref_upper_qp) {
    for (double v : {pref_lower_pq, pref_lower_qp, pref_upper_pq, pref_upper_qp})
        detail::require_unit(v, "preference aggregate");
    ResemblanceBounds bounds;
    bounds.lower = std::min(negate(NegationFamily::standard, pref_upper_pq),
                            negate(NegationFamily::standard, pref_upper_qp));
    bounds.upper = std::min(negate(NegationFamily::standard, pref_lower_pq),
                            negate(NegationFamily::standard, pref_lower_qp));
    return bounds;
}

/// Resemblance bounds between two propositions under a fully known relation.
inline ResemblanceBounds resemblance_bounds(const PreferenceRelation& rel, const Proposition& p,
                                            const Proposition& q) {
    return resemblance_bounds(prop_pref_lower(rel, p, q), prop_pref_lower(rel, q, p),
                              prop_pref_upper(rel, p, q), prop_pref_upper(rel, q, p));
}

/// Resemblance bounds under an incompletely known relation.  The guaranteed
/// aggregates come from the interval's lower matrix and the possible ones
/// from the diagonal-tightened upper matrix.
inline ResemblanceBounds resemblance_bounds(const PreferenceInterval& interval,
                                            const Proposition& p, const Proposition& q) {
    PreferenceRelation lower = interval.lower_relation();
    PreferenceRelation upper = interval.upper_tightened();
    return resemblance_bounds(prop_pref_lower(lower, p, q), prop_pref_lower(lower, q, p),
                              prop_pref_upper(upper, p, q), prop_pref_upper(upper, q, p));
}

/// Pointwise similarity enclosure derived from a preference enclosure.
/// Negation is antitone, so the similarity lower bound comes from the
/// tightened preference upper bound and vice versa.
struct SimilarityInterval {
    SimilarityRelation lower;
    SimilarityRelation upper;
};

inline SimilarityInterval interval_similarity(const PreferenceInterval& interval) {
    return SimilarityInterval{from_preference(interval.upper_tightened()),
                              from_preference(interval.lower_relation())};
}

} // namespace prefcalc

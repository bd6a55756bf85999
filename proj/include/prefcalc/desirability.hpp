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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prefcalc/norms.hpp"
#include "prefcalc/worlds.hpp"

namespace prefcalc {

/// A fuzzy set over the universe: one grade in [0,1] per world, ranking how
/// well each world satisfies a single constraint.
class DesirabilityMeasure {
public:
    DesirabilityMeasure(UniversePtr universe, std::vector<double> values)
        : universe_(std::move(universe)), values_(std::move(values)) {
        if (!universe_) throw std::invalid_argument("measure needs a universe");
        if (values_.size() != static_cast<size_t>(universe_->size()))
            throw std::invalid_argument("measure has " + std::to_string(values_.size()) +
                                        " values for " + std::to_string(universe_->size()) +
                                        " worlds");
        for (double v : values_)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::domain_error("measure value " + std::to_string(v) +
                                        " outside [0, 1]");
    }

    static DesirabilityMeasure constant(UniversePtr universe, double value) {
        std::vector<double> v(static_cast<size_t>(universe->size()), value);
        return DesirabilityMeasure(std::move(universe), std::move(v));
    }

    const UniversePtr& universe() const { return universe_; }
    const std::vector<double>& values() const { return values_; }
    double operator()(int world) const { return values_[static_cast<size_t>(world)]; }
    int size() const { return static_cast<int>(values_.size()); }

private:
    UniversePtr universe_;
    std::vector<double> values_;
};

namespace detail {

inline void require_same_universe(const DesirabilityMeasure& a, const DesirabilityMeasure& b) {
    if (!same_universe(a.universe(), b.universe()))
        throw std::invalid_argument("measures live in different universes");
}

template <typename F>
DesirabilityMeasure pointwise(const DesirabilityMeasure& a, const DesirabilityMeasure& b, F op) {
    require_same_universe(a, b);
    std::vector<double> out(a.values().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = op(a.values()[i], b.values()[i]);
    return DesirabilityMeasure(a.universe(), std::move(out));
}

} // namespace detail

/// The characteristic function of a proposition: 1 on its worlds, 0 off.
inline DesirabilityMeasure crisp_measure(const Proposition& p) {
    std::vector<double> values(static_cast<size_t>(p.universe()->size()), 0.0);
    for (int id : p.members()) values[static_cast<size_t>(id)] = 1.0;
    return DesirabilityMeasure(p.universe(), std::move(values));
}

inline DesirabilityMeasure and_measures(const NormProfile& p, const DesirabilityMeasure& a,
                                        const DesirabilityMeasure& b) {
    return detail::pointwise(a, b, [&p](double x, double y) { return tnorm(p, x, y); });
}

inline DesirabilityMeasure or_measures(const NormProfile& p, const DesirabilityMeasure& a,
                                       const DesirabilityMeasure& b) {
    return detail::pointwise(a, b, [&p](double x, double y) { return conorm(p, x, y); });
}

inline DesirabilityMeasure not_measure(const NormProfile& p, const DesirabilityMeasure& a) {
    std::vector<double> out(a.values().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = negate(p, a.values()[i]);
    return DesirabilityMeasure(a.universe(), std::move(out));
}

/// Graded conditional: pointwise residuum of the antecedent into the
/// consequent.
inline DesirabilityMeasure implies_measures(const NormProfile& p,
                                            const DesirabilityMeasure& antecedent,
                                            const DesirabilityMeasure& consequent) {
    return detail::pointwise(antecedent, consequent,
                             [&p](double x, double y) { return residuum(p, x, y); });
}

/// Infimum of the measure over the worlds satisfying p.  Quantifies over
/// p-worlds that exist: the empty proposition is rejected rather than
/// defaulting to the inf-of-empty convention, which would mask modeling bugs.
inline double prop_lower(const DesirabilityMeasure& d, const Proposition& p) {
    if (!same_universe(d.universe(), p.universe()))
        throw std::invalid_argument("measure and proposition live in different universes");
    if (p.empty()) throw std::invalid_argument("propositional bound over an empty proposition");
    double lo = 1.0;
    for (int id : p.members()) lo = std::min(lo, d(id));
    return lo;
}

/// Supremum of the measure over the worlds satisfying p, the order dual of
/// prop_lower.
inline double prop_upper(const DesirabilityMeasure& d, const Proposition& p) {
    if (!same_universe(d.universe(), p.universe()))
        throw std::invalid_argument("measure and proposition live in different universes");
    if (p.empty()) throw std::invalid_argument("propositional bound over an empty proposition");
    double hi = 0.0;
    for (int id : p.members()) hi = std::max(hi, d(id));
    return hi;
}

/// Pointwise lower/upper bounds enclosing an incompletely known measure,
/// generalizing modal necessity and possibility.  Kept as two full measures
/// so every measure-level operation lifts uniformly.
class DesirabilityInterval {
public:
    DesirabilityInterval(DesirabilityMeasure lower, DesirabilityMeasure upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        detail::require_same_universe(lower_, upper_);
        for (size_t i = 0; i < lower_.values().size(); ++i)
            if (lower_.values()[i] > upper_.values()[i] + kTolerance)
                throw std::invalid_argument("interval lower bound exceeds upper bound at world " +
                                            std::to_string(i));
    }

    /// Degenerate interval pinning the measure exactly.
    static DesirabilityInterval exact(const DesirabilityMeasure& d) {
        return DesirabilityInterval(d, d);
    }

    /// Total ignorance: [0, 1] everywhere.
    static DesirabilityInterval vacuous(UniversePtr universe) {
        DesirabilityMeasure lower = DesirabilityMeasure::constant(universe, 0.0);
        return DesirabilityInterval(std::move(lower),
                                    DesirabilityMeasure::constant(std::move(universe), 1.0));
    }

    const DesirabilityMeasure& lower() const { return lower_; }
    const DesirabilityMeasure& upper() const { return upper_; }
    const UniversePtr& universe() const { return lower_.universe(); }

    bool contains(const DesirabilityMeasure& d, double tol = kTolerance) const {
        if (!same_universe(d.universe(), universe())) return false;
        for (size_t i = 0; i < d.values().size(); ++i)
            if (d.values()[i] < lower_.values()[i] - tol || d.values()[i] > upper_.values()[i] + tol)
                return false;
        return true;
    }

private:
    DesirabilityMeasure lower_;
    DesirabilityMeasure upper_;
};

/// Complement under an enclosure: from bounds on ~D derive bounds on D (and
/// vice versa, the map is an involution): [l, u] -> [~u, ~l].
inline DesirabilityInterval interval_not(const NormProfile& p, const DesirabilityInterval& i) {
    return DesirabilityInterval(not_measure(p, i.upper()), not_measure(p, i.lower()));
}

/// Conjunction of enclosures: lower bounds combine with the t-norm, upper
/// bounds likewise; monotonicity of the t-norm makes the result sound.
inline DesirabilityInterval interval_and(const NormProfile& p, const DesirabilityInterval& a,
                                         const DesirabilityInterval& b) {
    return DesirabilityInterval(and_measures(p, a.lower(), b.lower()),
                                and_measures(p, a.upper(), b.upper()));
}

inline DesirabilityInterval interval_or(const NormProfile& p, const DesirabilityInterval& a,
                                        const DesirabilityInterval& b) {
    return DesirabilityInterval(or_measures(p, a.lower(), b.lower()),
                                or_measures(p, a.upper(), b.upper()));
}

/// Conditional of enclosures.  The residuum is antitone in the antecedent:
/// the sound lower bound pairs the antecedent's upper bound with the
/// consequent's lower bound, and dually for the upper bound.
inline DesirabilityInterval interval_implies(const NormProfile& p,
                                             const DesirabilityInterval& antecedent,
                                             const DesirabilityInterval& consequent) {
    return DesirabilityInterval(implies_measures(p, antecedent.upper(), consequent.lower()),
                                implies_measures(p, antecedent.lower(), consequent.upper()));
}

/// Piecewise-constant interval from per-block bounds over a partition of the
/// universe: every world in block i is enclosed by [lowers[i], uppers[i]].
inline DesirabilityInterval interval_from_partition(const UniversePtr& universe,
                                                    const std::vector<Proposition>& partition,
                                                    const std::vector<double>& lowers,
                                                    const std::vector<double>& uppers) {
    if (partition.size() != lowers.size() || partition.size() != uppers.size())
        throw std::invalid_argument("partition and bound lists differ in length");
    if (!is_partition(universe, partition))
        throw std::invalid_argument("blocks do not partition the universe");
    for (size_t i = 0; i < partition.size(); ++i)
        if (lowers[i] > uppers[i] + kTolerance)
            throw std::invalid_argument("block " + std::to_string(i) +
                                        " has lower bound above upper bound");

    std::vector<double> lo(static_cast<size_t>(universe->size()), 0.0);
    std::vector<double> hi(static_cast<size_t>(universe->size()), 1.0);
    for (size_t i = 0; i < partition.size(); ++i)
        for (int id : partition[i].members()) {
            lo[static_cast<size_t>(id)] = lowers[i];
            hi[static_cast<size_t>(id)] = uppers[i];
        }
    return DesirabilityInterval(DesirabilityMeasure(universe, std::move(lo)),
                                DesirabilityMeasure(universe, std::move(hi)));
}

} // namespace prefcalc

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
#include <random>
#include <string>
#include <vector>

#include "prefcalc/desirability.hpp"
#include "prefcalc/norms.hpp"
#include "prefcalc/preference.hpp"
#include "prefcalc/worlds.hpp"

namespace prefcalc::testing {

/// Universe with `atom_count` atoms named a, b, c, ...
inline UniversePtr letters_universe(int atom_count) {
    std::vector<std::string> atoms;
    for (int i = 0; i < atom_count; ++i) atoms.push_back(std::string(1, char('a' + i)));
    return build_universe(atoms);
}

/// Universe of exactly `n` worlds: explicit valuations over one atom, so
/// sizes need not be powers of two.
inline UniversePtr sized_universe(int n) {
    std::vector<std::map<std::string, bool>> worlds;
    for (int i = 0; i < n; ++i) worlds.push_back({{"a", i % 2 == 0}});
    return build_universe({"a"}, worlds);
}

inline DesirabilityMeasure random_measure(const UniversePtr& universe, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> values(static_cast<size_t>(universe->size()));
    for (auto& v : values) v = unit(rng);
    return DesirabilityMeasure(universe, std::move(values));
}

inline DesirabilityInterval random_interval(const UniversePtr& universe, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> lower(static_cast<size_t>(universe->size()));
    std::vector<double> upper(lower.size());
    for (size_t i = 0; i < lower.size(); ++i) {
        double x = unit(rng), y = unit(rng);
        lower[i] = std::min(x, y);
        upper[i] = std::max(x, y);
    }
    return DesirabilityInterval(DesirabilityMeasure(universe, std::move(lower)),
                                DesirabilityMeasure(universe, std::move(upper)));
}

/// Exact measure drawn uniformly inside the interval.
inline DesirabilityMeasure sample_inside(const DesirabilityInterval& interval,
                                         std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> values(interval.lower().values().size());
    for (size_t i = 0; i < values.size(); ++i) {
        double lo = interval.lower().values()[i], hi = interval.upper().values()[i];
        values[i] = lo + (hi - lo) * unit(rng);
    }
    return DesirabilityMeasure(interval.universe(), std::move(values));
}

/// Axiom-satisfying relation: either induced by one random measure or, with
/// some luck, the sup of two single-measure relations that happens to keep
/// the antisymmetry axiom.  Rejection keeps variety without breaking the
/// P1-P3 guarantee.
inline PreferenceRelation random_valid_relation(const UniversePtr& universe, ConormFamily conorm,
                                                std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    if (coin(rng)) return from_desirability(random_measure(universe, rng), conorm);
    for (int attempt = 0; attempt < 40; ++attempt) {
        GeneratingFamily family;
        family.universe = universe;
        family.generators.push_back(random_measure(universe, rng));
        family.generators.push_back(random_measure(universe, rng));
        PreferenceRelation rel = regenerate(family, conorm);
        if (verify_axioms(rel).all_pass()) return rel;
    }
    return from_desirability(random_measure(universe, rng), conorm);
}

/// Random zero-diagonal matrix, a typical transitive-envelope input.
inline PreferenceRelation random_upper_matrix(const UniversePtr& universe, ConormFamily conorm,
                                              std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = universe->size();
    std::vector<double> values(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            values[static_cast<size_t>(i) * n + j] = i == j ? 0.0 : unit(rng);
    return PreferenceRelation(universe, conorm, std::move(values));
}

/// Oracle for the transitive envelope: minimum over every simple path of the
/// conorm-sum of its edges.  Conorms dominate max, so a repeated vertex never
/// helps and simple paths suffice.
inline double min_over_paths(const PreferenceRelation& rel, int from, int to) {
    const int n = rel.size();
    double best = rel(from, to);
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
        if (i != from && i != to) nodes.push_back(i);
    std::sort(nodes.begin(), nodes.end());
    // All ordered selections of intermediate nodes, every length.
    std::vector<int> path;
    auto extend = [&](auto&& self, double cost_so_far, int at) -> void {
        for (int next : nodes) {
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            double cost = conorm(rel.conorm_family(), cost_so_far, rel(at, next));
            double total = conorm(rel.conorm_family(), cost, rel(next, to));
            best = std::min(best, total);
            path.push_back(next);
            self(self, cost, next);
            path.pop_back();
        }
    };
    extend(extend, 0.0, from);
    return best;
}

inline bool nearly(double a, double b, double tol = kTolerance) {
    return std::fabs(a - b) <= tol;
}

} // namespace prefcalc::testing

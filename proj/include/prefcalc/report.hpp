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

#include <string>
#include <vector>

namespace prefcalc {

/// Result of checking one algebraic law or relation axiom.
///
/// A failed check carries a witness: the world ids and/or the input values
/// at which the law breaks, plus a short human-readable detail line.
struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::vector<int> witness_worlds;
    std::vector<double> witness_values;
    std::string detail;
};

/// All checks run against one subject (a norm profile, a relation, ...).
struct AxiomReport {
    std::string subject;
    std::vector<AxiomCheck> checks;
    std::vector<std::string> notes;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    /// First check with the given axiom name, or nullptr.
    const AxiomCheck* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
};

} // namespace prefcalc

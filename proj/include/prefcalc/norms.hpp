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
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "prefcalc/report.hpp"

namespace prefcalc {

/// Absolute tolerance for every numeric equality assertion in the library.
/// The shipped connective families are closed-form, so this sits far below
/// any grid resolution in use.
inline constexpr double kTolerance = 1e-9;

enum class TnormFamily { minimum, product, bounded_difference };
enum class ConormFamily { maximum, probabilistic_sum, bounded_sum };
enum class NegationFamily { standard };

inline std::string to_string(TnormFamily f) {
    switch (f) {
        case TnormFamily::minimum: return "minimum";
        case TnormFamily::product: return "product";
        case TnormFamily::bounded_difference: return "bounded_difference";
    }
    return "?";
}

inline std::string to_string(ConormFamily f) {
    switch (f) {
        case ConormFamily::maximum: return "maximum";
        case ConormFamily::probabilistic_sum: return "probabilistic_sum";
        case ConormFamily::bounded_sum: return "bounded_sum";
    }
    return "?";
}

inline std::string to_string(NegationFamily) { return "standard"; }

/// A t-norm / t-conorm / strong-negation triple.  Every graded connective in
/// the library is evaluated against one of these.  Families may be mixed
/// freely; the De Morgan law is only guaranteed (and only verified) for the
/// three matched dual pairs.
struct NormProfile {
    TnormFamily tnorm = TnormFamily::minimum;
    ConormFamily conorm = ConormFamily::maximum;
    NegationFamily negation = NegationFamily::standard;

    /// True when tnorm and conorm are duals under the standard negation.
    bool matched_pair() const {
        return (tnorm == TnormFamily::minimum && conorm == ConormFamily::maximum) ||
               (tnorm == TnormFamily::product && conorm == ConormFamily::probabilistic_sum) ||
               (tnorm == TnormFamily::bounded_difference && conorm == ConormFamily::bounded_sum);
    }

    static NormProfile min_profile() {
        return {TnormFamily::minimum, ConormFamily::maximum, NegationFamily::standard};
    }
    static NormProfile product_profile() {
        return {TnormFamily::product, ConormFamily::probabilistic_sum, NegationFamily::standard};
    }
    static NormProfile lukasiewicz_profile() {
        return {TnormFamily::bounded_difference, ConormFamily::bounded_sum, NegationFamily::standard};
    }
};

/// Resolve a profile from its configuration name ("min", "product",
/// "lukasiewicz").  Throws std::invalid_argument listing the valid names.
inline NormProfile profile_by_name(const std::string& name) {
    if (name == "min") return NormProfile::min_profile();
    if (name == "product") return NormProfile::product_profile();
    if (name == "lukasiewicz") return NormProfile::lukasiewicz_profile();
    throw std::invalid_argument("unknown profile \"" + name +
                                "\"; valid names: min, product, lukasiewicz");
}

inline TnormFamily tnorm_family_by_name(const std::string& name) {
    if (name == "minimum") return TnormFamily::minimum;
    if (name == "product") return TnormFamily::product;
    if (name == "bounded_difference") return TnormFamily::bounded_difference;
    throw std::invalid_argument("unknown t-norm \"" + name +
                                "\"; valid names: minimum, product, bounded_difference");
}

inline ConormFamily conorm_family_by_name(const std::string& name) {
    if (name == "maximum") return ConormFamily::maximum;
    if (name == "probabilistic_sum") return ConormFamily::probabilistic_sum;
    if (name == "bounded_sum") return ConormFamily::bounded_sum;
    throw std::invalid_argument("unknown conorm \"" + name +
                                "\"; valid names: maximum, probabilistic_sum, bounded_sum");
}

inline NegationFamily negation_family_by_name(const std::string& name) {
    if (name == "standard") return NegationFamily::standard;
    throw std::invalid_argument("unknown negation \"" + name + "\"; valid names: standard");
}

namespace detail {

inline void require_unit(double a, const char* what) {
    // !(a >= 0) also rejects NaN.
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error(std::string(what) + " argument " + std::to_string(a) +
                                " outside [0, 1]");
}

} // namespace detail

inline double tnorm(TnormFamily f, double a, double b) {
    detail::require_unit(a, "tnorm");
    detail::require_unit(b, "tnorm");
    switch (f) {
        case TnormFamily::minimum: return std::min(a, b);
        case TnormFamily::product: return a * b;
        case TnormFamily::bounded_difference: return std::max(0.0, a + b - 1.0);
    }
    return 0.0;
}

inline double conorm(ConormFamily f, double a, double b) {
    detail::require_unit(a, "conorm");
    detail::require_unit(b, "conorm");
    switch (f) {
        case ConormFamily::maximum: return std::max(a, b);
        case ConormFamily::probabilistic_sum: return a + b - a * b;
        case ConormFamily::bounded_sum: return std::min(1.0, a + b);
    }
    return 0.0;
}

inline double negate(NegationFamily, double a) {
    detail::require_unit(a, "negate");
    return 1.0 - a;
}

/// Residuum of the t-norm: sup{c : T(a, c) <= b}, the graded implication.
inline double residuum(TnormFamily f, double a, double b) {
    detail::require_unit(a, "residuum");
    detail::require_unit(b, "residuum");
    if (a <= b) return 1.0;
    switch (f) {
        case TnormFamily::minimum: return b;
        case TnormFamily::product: return b / a; // a > b >= 0, so a > 0
        case TnormFamily::bounded_difference: return std::min(1.0, 1.0 - a + b);
    }
    return 1.0;
}

/// Pseudoinverse of the conorm: inf{c : S(b, c) >= a}, the graded difference
/// "a minus b".  When b >= a the infimum is attained at 0 for every family,
/// which also covers the probabilistic-sum pole at b = 1.
inline double conorm_pseudoinverse(ConormFamily f, double a, double b) {
    detail::require_unit(a, "conorm_pseudoinverse");
    detail::require_unit(b, "conorm_pseudoinverse");
    if (b >= a) return 0.0;
    switch (f) {
        case ConormFamily::maximum: return a;
        case ConormFamily::probabilistic_sum: return (a - b) / (1.0 - b); // b < a <= 1, so b < 1
        case ConormFamily::bounded_sum: return std::max(0.0, a - b);
    }
    return 0.0;
}

// Profile-keyed overloads, for call sites that hold a whole profile.
inline double tnorm(const NormProfile& p, double a, double b) { return tnorm(p.tnorm, a, b); }
inline double conorm(const NormProfile& p, double a, double b) { return conorm(p.conorm, a, b); }
inline double negate(const NormProfile& p, double a) { return negate(p.negation, a); }
inline double residuum(const NormProfile& p, double a, double b) { return residuum(p.tnorm, a, b); }
inline double conorm_pseudoinverse(const NormProfile& p, double a, double b) {
    return conorm_pseudoinverse(p.conorm, a, b);
}

/// A bundle of connectives for the verification harness.  verify_profile
/// wraps a NormProfile here; test fixtures may plant deliberately broken
/// operations to confirm the harness catches them.
struct ConnectiveSet {
    std::function<double(double, double)> tnorm;
    std::function<double(double, double)> conorm;
    std::function<double(double)> negate;
    std::function<double(double, double)> residuum;
    std::function<double(double, double)> pseudoinverse;
    bool matched = true;
};

inline ConnectiveSet connectives_of(const NormProfile& p) {
    ConnectiveSet c;
    c.tnorm = [p](double a, double b) { return tnorm(p, a, b); };
    c.conorm = [p](double a, double b) { return conorm(p, a, b); };
    c.negate = [p](double a) { return negate(p, a); };
    c.residuum = [p](double a, double b) { return residuum(p, a, b); };
    c.pseudoinverse = [p](double a, double b) { return conorm_pseudoinverse(p, a, b); };
    c.matched = p.matched_pair();
    return c;
}

/// Check every connective axiom over the grid {0, 1/den, 2/den, ..., 1}.
/// Failures become report entries with witness values, never exceptions.
inline AxiomReport verify_connectives(const ConnectiveSet& c, int grid_denominator) {
    if (grid_denominator < 1)
        throw std::invalid_argument("grid denominator must be >= 1");

    AxiomReport report;
    report.subject = "connectives";

    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(grid_denominator) + 1);
    for (int i = 0; i <= grid_denominator; ++i)
        grid.push_back(static_cast<double>(i) / grid_denominator);

    auto eq = [](double x, double y) { return std::fabs(x - y) <= kTolerance; };

    auto add = [&report](const std::string& axiom, bool pass, std::vector<double> witness,
                         std::string detail) {
        AxiomCheck chk;
        chk.axiom = axiom;
        chk.pass = pass;
        if (!pass) {
            chk.witness_values = std::move(witness);
            chk.detail = std::move(detail);
        }
        report.checks.push_back(std::move(chk));
    };

    // Binary-law template shared by the t-norm and the conorm.
    auto check_binary = [&](const std::string& name,
                            const std::function<double(double, double)>& op, double identity) {
        bool comm = true, assoc = true, mono = true, ident = true;
        std::vector<double> w_comm, w_assoc, w_mono, w_ident;
        for (double a : grid) {
            if (!eq(op(identity, a), a) && ident) {
                ident = false;
                w_ident = {a, op(identity, a)};
            }
            for (double b : grid) {
                if (!eq(op(a, b), op(b, a)) && comm) {
                    comm = false;
                    w_comm = {a, b};
                }
                for (double cc : grid) {
                    if (!eq(op(a, op(b, cc)), op(op(a, b), cc)) && assoc) {
                        assoc = false;
                        w_assoc = {a, b, cc};
                    }
                    // monotonicity in the first argument; commutativity covers the second
                    if (a <= b && op(a, cc) > op(b, cc) + kTolerance && mono) {
                        mono = false;
                        w_mono = {a, b, cc};
                    }
                }
            }
        }
        add("commutativity(" + name + ")", comm, w_comm, "op(a,b) != op(b,a)");
        add("associativity(" + name + ")", assoc, w_assoc, "op(a,op(b,c)) != op(op(a,b),c)");
        add("monotonicity(" + name + ")", mono, w_mono, "a <= b but op(a,c) > op(b,c)");
        add("identity(" + name + ")", ident, w_ident,
            "op(" + std::to_string(identity) + ",a) != a");
    };

    check_binary("tnorm", c.tnorm, 1.0);
    check_binary("conorm", c.conorm, 0.0);

    {
        bool invol = true, bound = true, decr = true;
        std::vector<double> w_invol, w_bound, w_decr;
        if (!eq(c.negate(0.0), 1.0) || !eq(c.negate(1.0), 0.0)) {
            bound = false;
            w_bound = {c.negate(0.0), c.negate(1.0)};
        }
        for (double a : grid) {
            if (!eq(c.negate(c.negate(a)), a) && invol) {
                invol = false;
                w_invol = {a, c.negate(c.negate(a))};
            }
            for (double b : grid)
                if (a < b && c.negate(a) <= c.negate(b) && decr) {
                    decr = false;
                    w_decr = {a, b};
                }
        }
        add("involution(negation)", invol, w_invol, "~~a != a");
        add("boundary(negation)", bound, w_bound, "~0 != 1 or ~1 != 0");
        add("strictly_decreasing(negation)", decr, w_decr, "a < b but ~a <= ~b");
    }

    {
        // Residuation adjunction: T(a,c) <= b  <=>  c <= R(a,b).
        bool ok = true;
        std::vector<double> w;
        for (double a : grid)
            for (double b : grid)
                for (double cc : grid) {
                    bool lhs = c.tnorm(a, cc) <= b + kTolerance;
                    bool rhs = cc <= c.residuum(a, b) + kTolerance;
                    if (lhs != rhs && ok) {
                        ok = false;
                        w = {a, b, cc};
                    }
                }
        add("adjunction(residuum)", ok, w, "T(a,c) <= b and c <= R(a,b) disagree");
    }

    {
        // Pseudoinverse adjunction: P(a,b) <= c  <=>  a <= S(b,c).
        bool ok = true;
        std::vector<double> w;
        for (double a : grid)
            for (double b : grid)
                for (double cc : grid) {
                    bool lhs = c.pseudoinverse(a, b) <= cc + kTolerance;
                    bool rhs = a <= c.conorm(b, cc) + kTolerance;
                    if (lhs != rhs && ok) {
                        ok = false;
                        w = {a, b, cc};
                    }
                }
        add("adjunction(pseudoinverse)", ok, w, "P(a,b) <= c and a <= S(b,c) disagree");
    }

    {
        // Boolean degeneration on {0,1}.
        bool ok = true;
        std::vector<double> w;
        for (double a : {0.0, 1.0})
            for (double b : {0.0, 1.0}) {
                bool pand = eq(c.tnorm(a, b), (a > 0.5 && b > 0.5) ? 1.0 : 0.0);
                bool por = eq(c.conorm(a, b), (a > 0.5 || b > 0.5) ? 1.0 : 0.0);
                bool pimp = eq(c.residuum(a, b), (a > 0.5 && b < 0.5) ? 0.0 : 1.0);
                if (!(pand && por && pimp) && ok) {
                    ok = false;
                    w = {a, b};
                }
            }
        add("boolean_degeneration", ok, w, "connective disagrees with its crisp truth table");
    }

    if (c.matched) {
        bool ok = true;
        std::vector<double> w;
        for (double a : grid)
            for (double b : grid)
                if (!eq(c.negate(c.tnorm(a, b)), c.conorm(c.negate(a), c.negate(b))) && ok) {
                    ok = false;
                    w = {a, b};
                }
        add("de_morgan", ok, w, "~T(a,b) != S(~a,~b)");
    } else {
        report.notes.push_back(
            "mixed profile: t-norm and conorm are not a matched dual pair; De Morgan check skipped");
    }

    return report;
}

/// Axiom report for a profile's connectives over the grid with step
/// 1/grid_denominator.
inline AxiomReport verify_profile(const NormProfile& p, int grid_denominator = 16) {
    AxiomReport report = verify_connectives(connectives_of(p), grid_denominator);
    report.subject = "profile(" + to_string(p.tnorm) + ", " + to_string(p.conorm) + ", " +
                     to_string(p.negation) + ")";
    return report;
}

} // namespace prefcalc

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
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prefcalc {

/// One fully specified scenario: a total Boolean valuation over the
/// universe's atoms, in atom order.
struct World {
    int id = 0;
    std::vector<bool> valuation;
};

/// A finite set of possible worlds over a fixed list of atomic propositions.
/// World ids are dense (0..n-1).  Two distinct worlds may share a valuation:
/// desirabilities attach to worlds, not to valuations.
class Universe {
public:
    Universe(std::vector<std::string> atoms, std::vector<World> worlds)
        : atoms_(std::move(atoms)), worlds_(std::move(worlds)) {}

    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::vector<World>& worlds() const { return worlds_; }
    int size() const { return static_cast<int>(worlds_.size()); }

    /// Index of an atom, or -1 when unknown.
    int atom_index(const std::string& name) const {
        auto it = std::find(atoms_.begin(), atoms_.end(), name);
        return it == atoms_.end() ? -1 : static_cast<int>(it - atoms_.begin());
    }

    bool operator==(const Universe& other) const {
        if (atoms_ != other.atoms_ || worlds_.size() != other.worlds_.size()) return false;
        for (size_t i = 0; i < worlds_.size(); ++i)
            if (worlds_[i].valuation != other.worlds_[i].valuation) return false;
        return true;
    }

private:
    std::vector<std::string> atoms_;
    std::vector<World> worlds_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Same universe by identity or by structure.  Structural equality lets
/// values built against separately constructed but identical universes mix.
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (!a || !b) return false;
    return a.get() == b.get() || *a == *b;
}

inline constexpr int kMaxEnumeratedAtoms = 20; // enumeration cap: 2^20 worlds

/// Enumerate all 2^n valuations over the atoms, ordered lexicographically
/// with false < true and the first atom most significant.
inline UniversePtr build_universe(const std::vector<std::string>& atoms) {
    if (atoms.empty()) throw std::invalid_argument("universe needs at least one atom");
    for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i] == atoms[j])
                throw std::invalid_argument("duplicate atom \"" + atoms[i] + "\"");
    if (atoms.size() > static_cast<size_t>(kMaxEnumeratedAtoms))
        throw std::invalid_argument("enumerating " + std::to_string(atoms.size()) +
                                    " atoms exceeds the 2^" +
                                    std::to_string(kMaxEnumeratedAtoms) + " world cap");

    const int n = static_cast<int>(atoms.size());
    const int count = 1 << n;
    std::vector<World> worlds;
    worlds.reserve(static_cast<size_t>(count));
    for (int id = 0; id < count; ++id) {
        World w;
        w.id = id;
        w.valuation.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            w.valuation[static_cast<size_t>(i)] = ((id >> (n - 1 - i)) & 1) != 0;
        worlds.push_back(std::move(w));
    }
    return std::make_shared<Universe>(atoms, std::move(worlds));
}

/// Build a universe from explicitly listed valuations.  Every valuation must
/// be total over the atoms; ids follow list order.
inline UniversePtr build_universe(const std::vector<std::string>& atoms,
                                  const std::vector<std::map<std::string, bool>>& valuations) {
    if (atoms.empty()) throw std::invalid_argument("universe needs at least one atom");
    for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i] == atoms[j])
                throw std::invalid_argument("duplicate atom \"" + atoms[i] + "\"");
    if (valuations.empty()) throw std::invalid_argument("explicit world list is empty");

    std::vector<World> worlds;
    worlds.reserve(valuations.size());
    int id = 0;
    for (const auto& val : valuations) {
        World w;
        w.id = id++;
        w.valuation.reserve(atoms.size());
        for (const auto& atom : atoms) {
            auto it = val.find(atom);
            if (it == val.end())
                throw std::invalid_argument("world " + std::to_string(w.id) +
                                            " is missing atom \"" + atom + "\"");
            w.valuation.push_back(it->second);
        }
        if (val.size() != atoms.size())
            for (const auto& [name, _] : val)
                if (std::find(atoms.begin(), atoms.end(), name) == atoms.end())
                    throw std::invalid_argument("world " + std::to_string(w.id) +
                                                " mentions unknown atom \"" + name + "\"");
        worlds.push_back(std::move(w));
    }
    return std::make_shared<Universe>(atoms, std::move(worlds));
}

/// The subset of worlds where some condition holds, kept as a membership
/// mask aligned with world ids.
class Proposition {
public:
    Proposition(UniversePtr universe, std::vector<bool> mask)
        : universe_(std::move(universe)), mask_(std::move(mask)) {
        if (!universe_) throw std::invalid_argument("proposition needs a universe");
        if (mask_.size() != static_cast<size_t>(universe_->size()))
            throw std::invalid_argument("proposition mask does not cover the universe");
    }

    static Proposition of_worlds(UniversePtr universe, const std::vector<int>& ids) {
        if (!universe) throw std::invalid_argument("proposition needs a universe");
        std::vector<bool> mask(static_cast<size_t>(universe->size()), false);
        for (int id : ids) {
            if (id < 0 || id >= universe->size())
                throw std::invalid_argument("world id " + std::to_string(id) +
                                            " outside the universe");
            mask[static_cast<size_t>(id)] = true;
        }
        return Proposition(std::move(universe), std::move(mask));
    }

    static Proposition all(UniversePtr universe) {
        std::vector<bool> mask(static_cast<size_t>(universe->size()), true);
        return Proposition(std::move(universe), std::move(mask));
    }

    static Proposition none(UniversePtr universe) {
        std::vector<bool> mask(static_cast<size_t>(universe->size()), false);
        return Proposition(std::move(universe), std::move(mask));
    }

    const UniversePtr& universe() const { return universe_; }
    bool contains(int id) const { return mask_[static_cast<size_t>(id)]; }
    bool empty() const { return std::find(mask_.begin(), mask_.end(), true) == mask_.end(); }

    int count() const {
        return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
    }

    std::vector<int> members() const {
        std::vector<int> ids;
        for (size_t i = 0; i < mask_.size(); ++i)
            if (mask_[i]) ids.push_back(static_cast<int>(i));
        return ids;
    }

    Proposition complement() const {
        std::vector<bool> mask(mask_.size());
        for (size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
        return Proposition(universe_, std::move(mask));
    }

    Proposition intersect(const Proposition& other) const {
        check_peer(other);
        std::vector<bool> mask(mask_.size());
        for (size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] && other.mask_[i];
        return Proposition(universe_, std::move(mask));
    }

    Proposition unite(const Proposition& other) const {
        check_peer(other);
        std::vector<bool> mask(mask_.size());
        for (size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] || other.mask_[i];
        return Proposition(universe_, std::move(mask));
    }

    bool operator==(const Proposition& other) const {
        return same_universe(universe_, other.universe_) && mask_ == other.mask_;
    }

private:
    void check_peer(const Proposition& other) const {
        if (!same_universe(universe_, other.universe_))
            throw std::invalid_argument("propositions live in different universes");
    }

    UniversePtr universe_;
    std::vector<bool> mask_;
};

/// Boolean formula over atom names.  Parsing from text lives with the CLI;
/// this module only evaluates already-built trees.
struct Formula {
    enum class Kind { atom, negation, conjunction, disjunction, implication };

    Kind kind = Kind::atom;
    std::string atom;
    std::vector<Formula> children;

    static Formula make_atom(std::string name) {
        Formula f;
        f.kind = Kind::atom;
        f.atom = std::move(name);
        return f;
    }
    static Formula make_not(Formula a) {
        Formula f;
        f.kind = Kind::negation;
        f.children.push_back(std::move(a));
        return f;
    }
    static Formula make_and(Formula a, Formula b) {
        Formula f;
        f.kind = Kind::conjunction;
        f.children.push_back(std::move(a));
        f.children.push_back(std::move(b));
        return f;
    }
    static Formula make_or(Formula a, Formula b) {
        Formula f;
        f.kind = Kind::disjunction;
        f.children.push_back(std::move(a));
        f.children.push_back(std::move(b));
        return f;
    }
    static Formula make_implies(Formula a, Formula b) {
        Formula f;
        f.kind = Kind::implication;
        f.children.push_back(std::move(a));
        f.children.push_back(std::move(b));
        return f;
    }

    /// Atom names in first-occurrence order.
    void collect_atoms(std::vector<std::string>& out) const {
        if (kind == Kind::atom) {
            if (std::find(out.begin(), out.end(), atom) == out.end()) out.push_back(atom);
            return;
        }
        for (const auto& c : children) c.collect_atoms(out);
    }
};

namespace detail {

inline bool eval_world(const Formula& f, const Universe& u, const World& w) {
    switch (f.kind) {
        case Formula::Kind::atom: {
            int idx = u.atom_index(f.atom);
            if (idx < 0) throw std::invalid_argument("unknown atom \"" + f.atom + "\"");
            return w.valuation[static_cast<size_t>(idx)];
        }
        case Formula::Kind::negation:
            return !eval_world(f.children[0], u, w);
        case Formula::Kind::conjunction:
            return eval_world(f.children[0], u, w) && eval_world(f.children[1], u, w);
        case Formula::Kind::disjunction:
            return eval_world(f.children[0], u, w) || eval_world(f.children[1], u, w);
        case Formula::Kind::implication:
            return !eval_world(f.children[0], u, w) || eval_world(f.children[1], u, w);
    }
    return false;
}

} // namespace detail

/// Worlds whose valuation satisfies the formula, by classical semantics.
inline Proposition eval_formula(const UniversePtr& universe, const Formula& f) {
    if (!universe) throw std::invalid_argument("eval_formula needs a universe");
    std::vector<bool> mask(static_cast<size_t>(universe->size()));
    for (const World& w : universe->worlds())
        mask[static_cast<size_t>(w.id)] = detail::eval_world(f, *universe, w);
    return Proposition(universe, std::move(mask));
}

/// True iff the propositions are pairwise disjoint and jointly exhaustive.
inline bool is_partition(const UniversePtr& universe, const std::vector<Proposition>& props) {
    if (!universe) throw std::invalid_argument("is_partition needs a universe");
    std::vector<int> hits(static_cast<size_t>(universe->size()), 0);
    for (const auto& p : props) {
        if (!same_universe(p.universe(), universe))
            throw std::invalid_argument("partition block lives in a different universe");
        for (int id : p.members()) ++hits[static_cast<size_t>(id)];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

} // namespace prefcalc

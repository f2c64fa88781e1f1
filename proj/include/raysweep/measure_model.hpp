/*
   Copyright 2026 The raysweep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "raysweep/ray_system.hpp"

namespace raysweep {

struct Atom {
    complex z;
    double w;
};

/// Which part of a signed measure a query refers to.
enum class Variation { net, total, plus, minus };

const char* to_string(Variation v);
/// Accepts "signed", "total", "plus", "minus".
Variation parse_variation(const std::string& s);

/// Weight of an atom as seen by the given variation.
inline double weight_of(double w, Variation v)
{
    switch (v) {
    case Variation::net:
        return w;
    case Variation::total:
        return w < 0.0 ? -w : w;
    case Variation::plus:
        return w > 0.0 ? w : 0.0;
    case Variation::minus:
        return w < 0.0 ? -w : 0.0;
    }
    return w;
}

/**
 * Finite signed measure made of point masses. Duplicate locations are kept as
 * separate atoms; queries add their weights.
 */
class AtomicMeasure {
public:
    AtomicMeasure() = default;
    /// Rejects non-finite locations or weights and zero weights.
    explicit AtomicMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_mass(Variation v = Variation::net) const;
    double max_modulus() const;
    bool has_atom_at_origin() const;

    /// Atoms with nonzero weight under the variation, weights replaced by it.
    AtomicMeasure variation(Variation v) const;
    AtomicMeasure scaled(double c) const;
    /// Concatenation of the atom lists.
    AtomicMeasure operator+(const AtomicMeasure& other) const;

private:
    std::vector<Atom> atoms_;
};

/// Zeros of an entire function, repeated according to multiplicity.
struct ZeroSequence {
    std::vector<complex> points;

    /// Counting measure: unit weight at every listed zero.
    AtomicMeasure to_measure() const;
};

/**
 * Samples of a function on an increasing grid of radii.
 */
struct RadialProfile {
    std::vector<double> grid;
    std::vector<double> values;

    RadialProfile() = default;
    /// Needs at least two points, equal lengths, a strictly increasing
    /// positive grid and finite values.
    RadialProfile(std::vector<double> grid, std::vector<double> values);

    template <class F>
    static RadialProfile sample(const std::vector<double>& grid, F&& f)
    {
        std::vector<double> v;
        v.reserve(grid.size());
        for (double r : grid) {
            v.push_back(f(r));
        }
        return RadialProfile(grid, std::move(v));
    }

    bool non_decreasing() const;
};

/// r0, r0 q, r0 q^2, ... below r1, then r1 itself.
std::vector<double> geometric_grid(double r0, double r1, double ratio);

/// Mass of the closed disk of radius r for every r in `radii` (strictly
/// increasing, positive). Any number of radii.
std::vector<double> counting_values(const AtomicMeasure& m, const std::vector<double>& radii,
                                    Variation v = Variation::net);

/// Mass of the closed disk of radius r for every r in `radii` (strictly
/// increasing, positive).
RadialProfile radial_counting(const AtomicMeasure& m, const std::vector<double>& radii,
                              Variation v = Variation::net);

/// Signed distribution function on the real line: m([0, t]) for t >= 0 and
/// -m([t, 0)) for t < 0. Every atom must be real within 1e-12.
double distribution_on_R(const AtomicMeasure& m, double t);

} // namespace raysweep

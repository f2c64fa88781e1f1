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

#include "raysweep/measure_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "raysweep/errors.hpp"
#include "raysweep/summation.hpp"

namespace raysweep {

namespace {

constexpr double kRealTol = 1e-12;

void check_radii(const std::vector<double>& radii)
{
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) {
            throw InputError("radii must be positive and finite");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw InputError("radii must be strictly increasing");
        }
    }
}

} // namespace

const char* to_string(Variation v)
{
    switch (v) {
    case Variation::net:
        return "signed";
    case Variation::total:
        return "total";
    case Variation::plus:
        return "plus";
    case Variation::minus:
        return "minus";
    }
    return "signed";
}

Variation parse_variation(const std::string& s)
{
    if (s == "signed") {
        return Variation::net;
    }
    if (s == "total") {
        return Variation::total;
    }
    if (s == "plus") {
        return Variation::plus;
    }
    if (s == "minus") {
        return Variation::minus;
    }
    throw InputError("unknown variation '" + s + "'");
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms))
{
    for (const Atom& a : atoms_) {
        if (!std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()) || !std::isfinite(a.w)) {
            throw InputError("atom location and weight must be finite");
        }
        if (a.w == 0.0) {
            throw InputError("atom weight must be nonzero");
        }
    }
}

double AtomicMeasure::total_mass(Variation v) const
{
    std::vector<double> w;
    w.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
        w.push_back(weight_of(a.w, v));
    }
    return pairwise_sum(w);
}

double AtomicMeasure::max_modulus() const
{
    double m = 0.0;
    for (const Atom& a : atoms_) {
        m = std::max(m, std::abs(a.z));
    }
    return m;
}

bool AtomicMeasure::has_atom_at_origin() const
{
    return std::any_of(atoms_.begin(), atoms_.end(),
                       [](const Atom& a) { return a.z == complex(0.0, 0.0); });
}

AtomicMeasure AtomicMeasure::variation(Variation v) const
{
    std::vector<Atom> out;
    for (const Atom& a : atoms_) {
        const double w = weight_of(a.w, v);
        if (w != 0.0) {
            out.push_back({a.z, w});
        }
    }
    return AtomicMeasure(std::move(out));
}

AtomicMeasure AtomicMeasure::scaled(double c) const
{
    if (c == 0.0) {
        return {};
    }
    std::vector<Atom> out = atoms_;
    for (Atom& a : out) {
        a.w *= c;
    }
    return AtomicMeasure(std::move(out));
}

AtomicMeasure AtomicMeasure::operator+(const AtomicMeasure& other) const
{
    std::vector<Atom> out = atoms_;
    out.insert(out.end(), other.atoms_.begin(), other.atoms_.end());
    return AtomicMeasure(std::move(out));
}

AtomicMeasure ZeroSequence::to_measure() const
{
    std::vector<Atom> atoms;
    atoms.reserve(points.size());
    for (complex z : points) {
        atoms.push_back({z, 1.0});
    }
    return AtomicMeasure(std::move(atoms));
}

RadialProfile::RadialProfile(std::vector<double> g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v))
{
    if (grid.size() < 2 || grid.size() != values.size()) {
        throw InputError("profile needs at least two samples and matching lengths");
    }
    check_radii(grid);
    for (double x : values) {
        if (!std::isfinite(x)) {
            throw InputError("profile values must be finite");
        }
    }
}

bool RadialProfile::non_decreasing() const
{
    return std::is_sorted(values.begin(), values.end());
}

std::vector<double> geometric_grid(double r0, double r1, double ratio)
{
    if (!(r0 > 0.0) || !(r1 >= r0) || !(ratio > 1.0) || !std::isfinite(r1)) {
        throw InputError("geometric grid needs 0 < r0 <= r1 and ratio > 1");
    }
    std::vector<double> g;
    const double lq = std::log(ratio);
    for (std::size_t j = 0;; ++j) {
        const double r = r0 * std::exp(lq * static_cast<double>(j));
        if (r >= r1 * (1.0 - 1e-9)) {
            break;
        }
        g.push_back(r);
    }
    g.push_back(r1);
    return g;
}

std::vector<double> counting_values(const AtomicMeasure& m, const std::vector<double>& radii,
                                    Variation v)
{
    check_radii(radii);
    std::vector<std::pair<double, double>> by_radius;
    by_radius.reserve(m.size());
    for (const Atom& a : m.atoms()) {
        by_radius.emplace_back(std::abs(a.z), weight_of(a.w, v));
    }
    std::sort(by_radius.begin(), by_radius.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<double> values;
    values.reserve(radii.size());
    CompensatedSum acc;
    std::size_t k = 0;
    for (double r : radii) {
        while (k < by_radius.size() && by_radius[k].first <= r) {
            acc.add(by_radius[k].second);
            ++k;
        }
        values.push_back(acc.value());
    }
    return values;
}

RadialProfile radial_counting(const AtomicMeasure& m, const std::vector<double>& radii,
                              Variation v)
{
    return RadialProfile(radii, counting_values(m, radii, v));
}

double distribution_on_R(const AtomicMeasure& m, double t)
{
    CompensatedSum acc;
    for (const Atom& a : m.atoms()) {
        if (std::fabs(a.z.imag()) > kRealTol * std::max(1.0, std::fabs(a.z.real()))) {
            throw InputError("distribution on R needs real atoms");
        }
        const double x = a.z.real();
        if (t >= 0.0) {
            if (x >= 0.0 && x <= t) {
                acc.add(a.w);
            }
        } else if (x >= t && x < 0.0) {
            acc.add(-a.w);
        }
    }
    return acc.value();
}

} // namespace raysweep

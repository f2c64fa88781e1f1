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

#include "raysweep/ray_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "raysweep/errors.hpp"

namespace raysweep {

double normalize_angle(double theta)
{
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    // fmod of a value just below zero can round up to exactly 2pi
    if (t >= kTwoPi) {
        t = 0.0;
    }
    return t;
}

namespace {

double circular_distance(double a, double b)
{
    double d = std::fabs(normalize_angle(a) - normalize_angle(b));
    return std::min(d, kTwoPi - d);
}

} // namespace

Sector::Sector(double alpha, double beta) : alpha_(alpha), beta_(beta)
{
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw InputError("sector angles must be finite");
    }
    if (!(beta > alpha) || beta - alpha > kTwoPi + kAngleTol) {
        throw InputError("sector needs alpha < beta <= alpha + 2pi");
    }
}

double Sector::relative_angle(complex z) const
{
    if (z == complex(0.0, 0.0)) {
        return 0.0;
    }
    return normalize_angle(std::arg(z) - alpha_);
}

bool Sector::contains_open(complex z) const
{
    if (z == complex(0.0, 0.0)) {
        return false;
    }
    double phi = relative_angle(z);
    return phi > kAngleTol && phi < aperture() - kAngleTol && phi < kTwoPi - kAngleTol;
}

bool Sector::contains_closed(complex z) const
{
    if (z == complex(0.0, 0.0)) {
        return true;
    }
    double phi = relative_angle(z);
    return phi <= aperture() + kAngleTol || phi >= kTwoPi - kAngleTol;
}

complex Sector::reduce_to_half_plane(complex z) const
{
    if (z == complex(0.0, 0.0)) {
        return {0.0, 0.0};
    }
    const double ap = aperture();
    double phi = relative_angle(z);
    if (phi > ap + kAngleTol) {
        if (phi >= kTwoPi - kAngleTol) {
            phi = 0.0;
        } else {
            throw InputError("point lies outside the closed sector");
        }
    } else if (phi >= ap - kAngleTol) {
        phi = ap;
    } else if (phi <= kAngleTol) {
        phi = 0.0;
    }

    const double g = gamma();
    const double rho = std::pow(std::abs(z), g);
    if (phi == 0.0) {
        return {rho, 0.0};
    }
    if (phi == ap) {
        return {-rho, 0.0};
    }
    return std::polar(rho, g * phi);
}

complex Sector::boundary_point(Side side, double radius) const
{
    if (!(radius >= 0.0)) {
        throw InputError("boundary radius must be non-negative");
    }
    return std::polar(radius, side == Side::alpha ? alpha_ : beta_);
}

double Sector::reduced_boundary_coordinate(Side side, double radius) const
{
    if (!(radius >= 0.0)) {
        throw InputError("boundary radius must be non-negative");
    }
    if (std::isinf(radius)) {
        return side == Side::alpha ? radius : -radius;
    }
    const double t = std::pow(radius, gamma());
    return side == Side::alpha ? t : -t;
}

RaySystem::RaySystem(std::vector<double> directions_rad)
{
    if (directions_rad.empty()) {
        throw InputError("ray system needs at least one direction");
    }
    for (double& d : directions_rad) {
        if (!std::isfinite(d)) {
            throw InputError("ray direction must be finite");
        }
        d = normalize_angle(d);
    }
    std::sort(directions_rad.begin(), directions_rad.end());
    for (std::size_t i = 0; i < directions_rad.size(); ++i) {
        std::size_t j = (i + 1) % directions_rad.size();
        if (j != i && circular_distance(directions_rad[i], directions_rad[j]) <= kAngleTol) {
            throw InputError("duplicate ray direction " + std::to_string(directions_rad[i]));
        }
    }
    directions_ = std::move(directions_rad);
}

RaySystem RaySystem::equiangular(int n, double offset)
{
    if (n < 1) {
        throw InputError("equiangular system needs n >= 1");
    }
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        d.push_back(offset + kTwoPi * k / n);
    }
    return RaySystem(std::move(d));
}

std::vector<Sector> RaySystem::sectors() const
{
    std::vector<Sector> out;
    out.reserve(directions_.size());
    for (std::size_t i = 0; i + 1 < directions_.size(); ++i) {
        out.emplace_back(directions_[i], directions_[i + 1]);
    }
    out.emplace_back(directions_.back(), directions_.front() + kTwoPi);
    return out;
}

std::optional<std::size_t> RaySystem::ray_index(double theta) const
{
    for (std::size_t i = 0; i < directions_.size(); ++i) {
        if (circular_distance(theta, directions_[i]) <= kAngleTol) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> RaySystem::ray_of(complex z) const
{
    if (z == complex(0.0, 0.0)) {
        return 0;
    }
    return ray_index(std::arg(z));
}

std::optional<Sector> RaySystem::sector_of(complex z) const
{
    const auto i = sector_index_of(z);
    if (!i) {
        return std::nullopt;
    }
    return sectors()[*i];
}

std::optional<std::size_t> RaySystem::sector_index_of(complex z) const
{
    if (contains(z)) {
        return std::nullopt;
    }
    const std::vector<Sector> all = sectors();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].contains_open(z)) {
            return i;
        }
    }
    // unreachable for points off the system; kept for exhaustiveness
    throw InputError("point not attributed to any sector");
}

} // namespace raysweep

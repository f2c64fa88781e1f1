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

#include <optional>

#include "raysweep/ray_system.hpp"

namespace raysweep {

/// Interval [r_lo, r_hi] of radii on one of the two boundary rays of a sector.
struct IntervalOnRay {
    Sector sector;
    Side side;
    double r_lo;
    double r_hi;
};

/// Position of z relative to the semicircle with diameter [t1, t2].
enum class HalfPlaneRegime { boundary, outside_semicircle, on_semicircle, inside_semicircle };

const char* to_string(HalfPlaneRegime r);

HalfPlaneRegime classify_half_plane(complex z, double t1, double t2);

/**
 * Harmonic measure of [t1, t2] at z for the upper half-plane: the angle under
 * which the segment is seen from z, divided by pi.
 *
 * Real z is evaluated as a Dirac mass at z: 1 for t1 < z < t2, 0 otherwise
 * (endpoints carry no mass). Throws InputError for t1 > t2 or Im z < 0.
 */
double omega_half_plane(complex z, double t1, double t2);

/// Harmonic measure of the half-line [t, +inf) at z in the closed upper half-plane.
double omega_right_of(complex z, double t);
/// Harmonic measure of the half-line (-inf, t] at z in the closed upper half-plane.
double omega_left_of(complex z, double t);

/// Harmonic measure of a radial interval on a boundary ray of a sector.
/// Points on the sector boundary get the Dirac value.
double omega_sector_interval(complex z, const IntervalOnRay& iv);

enum class DiskPart { inside, outside };

/// Harmonic measure of the part of the sector boundary inside the closed disk
/// of radius r (or outside the open disk). z must be strictly inside.
double omega_sector_disk(complex z, const Sector& sector, double r, DiskPart part);

/// Mass density of the sector harmonic measure at the boundary point at
/// distance `radius` on `side`, with respect to arc length on that ray.
double omega_sector_density(complex z, const Sector& sector, Side side, double radius);

// ---------------------------------------------------------------------------
// Estimates. Each throws RegimeError when called outside the region where the
// estimate is valid.

/// Upper estimate (t2 - t1) / (pi (1 - a)^2) * Im(1/conj z), valid when
/// a |z| >= max(|t1|, |t2|).
double upper_bound_far(complex z, double t1, double t2, double a);

/// Upper estimate (t2 - t1) a^2 / (pi (1 - a)^2) * Im(1/conj z), valid when
/// a * min_{t in [t1, t2]} |t| >= |z|.
double upper_bound_near(complex z, double t1, double t2, double a);

/// Lower estimate (t2 - t1)(1 - a) / (8 pi) * Im(1/conj z), valid when
/// a |z| >= max(|t1|, |t2|).
double lower_bound_far(complex z, double t1, double t2, double a);

/// Lower estimate (b - 1)/(2 pi b) * x with x = (t2 - t1) Im z /
/// ((t1 - Re z)(t2 - Re z) + (Im z)^2), valid for |z - t0| >= b (t2 - t1)/2, b > 1.
double lower_bound_outside_disk(complex z, double t1, double t2, double b);
/// Coarser form of lower_bound_outside_disk with the denominator replaced by
/// (|z| + |t1|)(|z| + |t2|).
double lower_bound_outside_disk_coarse(complex z, double t1, double t2, double b);

/// Upper estimate (t2 - t1) / pi * Im(1/conj z) for a segment on one side of
/// the origin seen from the opposite quadrant (cos arg z <= 0 for t1 >= 0,
/// mirrored for t2 <= 0).
double upper_bound_opposite_quadrant(complex z, double t1, double t2);

/// Upper estimate (t2 - t1) Im z / (pi (|z| - sqrt(t1 t2))^2) for a segment
/// on one side of the origin, valid when cos of the angle between z and the
/// segment's half-axis is < 2 sqrt(t1 t2)/(t1 + t2).
double upper_bound_cone(complex z, double t1, double t2);

/// Upper estimate (t2 - t1) / (pi (1 - a^2)) * Im(1/conj z), valid when the
/// same cosine is <= 2 a sqrt(t1 t2)/(t1 + t2).
double upper_bound_cone_a(complex z, double t1, double t2, double a);

/// Lower estimate (t1/t2)(t2 - t1)/(8 pi) * Im(1/conj z) for 0 < t1 < t2
/// (or the mirror image) under the cone condition of upper_bound_cone and
/// |z| >= t1. Near the origin omega vanishes while Im(1/conj z) blows up, so
/// the cone condition alone is not enough; those points are refused.
double lower_bound_cone(complex z, double t1, double t2);

struct DiskBounds {
    double upper;
    std::optional<double> lower; ///< present only for |z - t0| < r
};

/// Bounds for the harmonic measure of [t0 - r, t0 + r] that are exact at the
/// apex of every upper semicircle centred at t0. Valid on the whole closed
/// upper half-plane.
DiskBounds sharp_disk_bounds(complex z, double t0, double r);

/// Region of the closed upper half-plane not covered by the far/near/cone
/// upper estimates for a given a in (0, 1).
bool in_uncovered_region(complex z, double t1, double t2, double a);

/// Upper estimate for omega_sector_disk(z, sector, r, inside) valid when
/// a |z| >= r.
double sector_disk_inside_bound(complex z, const Sector& sector, double r, double a);
/// Upper estimate for omega_sector_disk(z, sector, r, outside) valid when
/// a r >= |z|.
double sector_disk_outside_bound(complex z, const Sector& sector, double r, double a);

} // namespace raysweep

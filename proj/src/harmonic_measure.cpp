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

#include "raysweep/harmonic_measure.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"

namespace raysweep {

namespace {

// Relative width of the band around the semicircle |z - t0| = r inside which
// the value 1/2 is returned.
constexpr double kSemicircleTol = 1e-14;

void check_interval(double t1, double t2)
{
    if (std::isnan(t1) || std::isnan(t2) || t1 > t2) {
        throw InputError("interval needs t1 <= t2");
    }
}

void check_upper(complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError("point must be finite");
    }
    if (z.imag() < 0.0) {
        throw InputError("point must lie in the closed upper half-plane");
    }
}

void check_open_upper(complex z)
{
    check_upper(z);
    if (z.imag() == 0.0) {
        throw RegimeError("estimate needs Im z > 0");
    }
}

void check_a(double a)
{
    if (!(a > 0.0 && a < 1.0)) {
        throw RegimeError("parameter a must lie in (0, 1)");
    }
}

// Im(1 / conj z) = Im z / |z|^2
double im_inv_conj(complex z)
{
    return z.imag() / std::norm(z);
}

// (t1 - x)(t2 - x) + y^2, the stable form of |z|^2 - Re z (t1 + t2) + t1 t2
double semicircle_form(complex z, double t1, double t2)
{
    return (t1 - z.real()) * (t2 - z.real()) + z.imag() * z.imag();
}

double semicircle_scale2(complex z, double t1, double t2)
{
    double a = std::fabs(t1 - z.real());
    double b = std::fabs(t2 - z.real());
    double s = std::max({a, b, z.imag()});
    return s * s;
}

struct OneSided {
    complex z;
    double t1;
    double t2;
};

// Reflects a one-sided configuration so that the segment lies in [0, inf).
OneSided to_positive_side(complex z, double t1, double t2)
{
    if (t1 >= 0.0) {
        return {z, t1, t2};
    }
    if (t2 <= 0.0) {
        return {complex(-z.real(), z.imag()), -t2, -t1};
    }
    throw RegimeError("estimate needs the segment on one side of the origin");
}

double cos_arg(complex z)
{
    return z.real() / std::abs(z);
}

} // namespace

const char* to_string(HalfPlaneRegime r)
{
    switch (r) {
    case HalfPlaneRegime::boundary:
        return "boundary";
    case HalfPlaneRegime::outside_semicircle:
        return "outside_semicircle";
    case HalfPlaneRegime::on_semicircle:
        return "on_semicircle";
    case HalfPlaneRegime::inside_semicircle:
        return "inside_semicircle";
    }
    return "unknown";
}

HalfPlaneRegime classify_half_plane(complex z, double t1, double t2)
{
    check_interval(t1, t2);
    check_upper(z);
    if (z.imag() == 0.0) {
        return HalfPlaneRegime::boundary;
    }
    const double d = semicircle_form(z, t1, t2);
    if (std::fabs(d) <= kSemicircleTol * semicircle_scale2(z, t1, t2)) {
        return HalfPlaneRegime::on_semicircle;
    }
    return d > 0.0 ? HalfPlaneRegime::outside_semicircle : HalfPlaneRegime::inside_semicircle;
}

double omega_right_of(complex z, double t)
{
    check_upper(z);
    if (std::isnan(t)) {
        throw InputError("half-line endpoint is NaN");
    }
    if (z.imag() == 0.0) {
        return z.real() > t ? 1.0 : 0.0;
    }
    if (t == -INFINITY) {
        return 1.0;
    }
    if (t == INFINITY) {
        return 0.0;
    }
    return std::atan2(z.imag(), t - z.real()) / kPi;
}

double omega_left_of(complex z, double t)
{
    check_upper(z);
    if (std::isnan(t)) {
        throw InputError("half-line endpoint is NaN");
    }
    if (z.imag() == 0.0) {
        return z.real() < t ? 1.0 : 0.0;
    }
    if (t == INFINITY) {
        return 1.0;
    }
    if (t == -INFINITY) {
        return 0.0;
    }
    return std::atan2(z.imag(), z.real() - t) / kPi;
}

double omega_half_plane(complex z, double t1, double t2)
{
    check_interval(t1, t2);
    check_upper(z);
    if (z.imag() == 0.0) {
        const double x = z.real();
        return (x > t1 && x < t2) ? 1.0 : 0.0;
    }
    if (std::isinf(t1) || std::isinf(t2)) {
        if (t1 == t2) {
            return 0.0;
        }
        if (std::isinf(t1) && std::isinf(t2)) {
            return 1.0;
        }
        return std::isinf(t2) ? omega_right_of(z, t1) : omega_left_of(z, t2);
    }
    if (t1 == t2) {
        return 0.0;
    }
    const double num = (t2 - t1) * z.imag();
    const double den = semicircle_form(z, t1, t2);
    if (std::fabs(den) <= kSemicircleTol * semicircle_scale2(z, t1, t2)) {
        return 0.5;
    }
    // atan2 covers the outside (den > 0) and inside (den < 0, +pi) cases at once
    return std::atan2(num, den) / kPi;
}

double omega_sector_interval(complex z, const IntervalOnRay& iv)
{
    if (std::isnan(iv.r_lo) || std::isnan(iv.r_hi) || iv.r_lo < 0.0 || iv.r_lo > iv.r_hi) {
        throw InputError("ray interval needs 0 <= r_lo <= r_hi");
    }
    const Sector& s = iv.sector;
    if (!s.contains_closed(z)) {
        throw InputError("point lies outside the closed sector");
    }
    if (!s.contains_open(z)) {
        // Dirac mass at a boundary point; the open interval convention applies
        if (z == complex(0.0, 0.0)) {
            return 0.0;
        }
        const double ray = iv.side == Side::alpha ? s.alpha() : s.beta();
        const double d = std::fabs(normalize_angle(std::arg(z) - ray));
        const bool on_ray = std::min(d, kTwoPi - d) <= kAngleTol;
        const double r = std::abs(z);
        return (on_ray && r > iv.r_lo && r < iv.r_hi) ? 1.0 : 0.0;
    }
    const complex w = s.reduce_to_half_plane(z);
    const double a = s.reduced_boundary_coordinate(iv.side, iv.r_lo);
    const double b = s.reduced_boundary_coordinate(iv.side, iv.r_hi);
    return iv.side == Side::alpha ? omega_half_plane(w, a, b) : omega_half_plane(w, b, a);
}

double omega_sector_disk(complex z, const Sector& sector, double r, DiskPart part)
{
    if (!(r > 0.0)) {
        throw InputError("disk radius must be positive");
    }
    if (!sector.contains_open(z)) {
        throw InputError("point must lie strictly inside the sector");
    }
    const complex w = sector.reduce_to_half_plane(z);
    const double R = std::pow(r, sector.gamma());
    if (part == DiskPart::inside) {
        return omega_half_plane(w, -R, R);
    }
    return omega_right_of(w, R) + omega_left_of(w, -R);
}

double omega_sector_density(complex z, const Sector& sector, Side side, double radius)
{
    if (!(radius >= 0.0)) {
        throw InputError("boundary radius must be non-negative");
    }
    if (!sector.contains_open(z)) {
        throw InputError("point must lie strictly inside the sector");
    }
    const complex w = sector.reduce_to_half_plane(z);
    const double g = sector.gamma();
    const double tau = sector.reduced_boundary_coordinate(side, radius);
    const double dx = tau - w.real();
    const double y = w.imag();
    const double kernel = y / (kPi * (dx * dx + y * y));
    return kernel * g * std::pow(radius, g - 1.0);
}

double upper_bound_far(complex z, double t1, double t2, double a)
{
    check_interval(t1, t2);
    check_open_upper(z);
    check_a(a);
    if (a * std::abs(z) < std::max(std::fabs(t1), std::fabs(t2))) {
        throw RegimeError("far-point estimate needs a|z| >= max(|t1|, |t2|)");
    }
    return (t2 - t1) / (kPi * (1.0 - a) * (1.0 - a)) * im_inv_conj(z);
}

double upper_bound_near(complex z, double t1, double t2, double a)
{
    check_interval(t1, t2);
    check_open_upper(z);
    check_a(a);
    const double min_abs = (t1 <= 0.0 && t2 >= 0.0) ? 0.0 : std::min(std::fabs(t1), std::fabs(t2));
    if (a * min_abs < std::abs(z)) {
        throw RegimeError("near-point estimate needs a * min|t| >= |z|");
    }
    return (t2 - t1) * a * a / (kPi * (1.0 - a) * (1.0 - a)) * im_inv_conj(z);
}

double lower_bound_far(complex z, double t1, double t2, double a)
{
    check_interval(t1, t2);
    check_open_upper(z);
    check_a(a);
    if (a * std::abs(z) < std::max(std::fabs(t1), std::fabs(t2))) {
        throw RegimeError("far-point estimate needs a|z| >= max(|t1|, |t2|)");
    }
    return (t2 - t1) * (1.0 - a) / (8.0 * kPi) * im_inv_conj(z);
}

double lower_bound_outside_disk(complex z, double t1, double t2, double b)
{
    check_interval(t1, t2);
    check_open_upper(z);
    if (!(b > 1.0)) {
        throw RegimeError("outside-disk estimate needs b > 1");
    }
    const double t0 = 0.5 * (t1 + t2);
    if (std::abs(z - t0) < b * 0.5 * (t2 - t1)) {
        throw RegimeError("outside-disk estimate needs |z - t0| >= b (t2 - t1)/2");
    }
    const double x = (t2 - t1) * z.imag() / semicircle_form(z, t1, t2);
    return (b - 1.0) / (2.0 * kPi * b) * x;
}

double lower_bound_outside_disk_coarse(complex z, double t1, double t2, double b)
{
    check_interval(t1, t2);
    check_open_upper(z);
    if (!(b > 1.0)) {
        throw RegimeError("outside-disk estimate needs b > 1");
    }
    const double t0 = 0.5 * (t1 + t2);
    if (std::abs(z - t0) < b * 0.5 * (t2 - t1)) {
        throw RegimeError("outside-disk estimate needs |z - t0| >= b (t2 - t1)/2");
    }
    const double m = std::abs(z);
    const double den = (m + std::fabs(t1)) * (m + std::fabs(t2));
    return (b - 1.0) / (2.0 * kPi * b) * (t2 - t1) * z.imag() / den;
}

double upper_bound_opposite_quadrant(complex z, double t1, double t2)
{
    check_interval(t1, t2);
    check_open_upper(z);
    const OneSided o = to_positive_side(z, t1, t2);
    if (o.z.real() > 0.0) {
        throw RegimeError("opposite-quadrant estimate needs z on the far side of the imaginary axis");
    }
    return (t2 - t1) / kPi * im_inv_conj(z);
}

double upper_bound_cone(complex z, double t1, double t2)
{
    check_interval(t1, t2);
    check_open_upper(z);
    const OneSided o = to_positive_side(z, t1, t2);
    const double g = std::sqrt(o.t1 * o.t2);
    if (!(o.t2 > 0.0) || !(cos_arg(o.z) < 2.0 * g / (o.t1 + o.t2))) {
        throw RegimeError("cone estimate needs cos arg z < 2 sqrt(t1 t2)/(t1 + t2)");
    }
    const double d = std::abs(z) - g;
    return (t2 - t1) * z.imag() / (kPi * d * d);
}

double upper_bound_cone_a(complex z, double t1, double t2, double a)
{
    check_interval(t1, t2);
    check_open_upper(z);
    check_a(a);
    const OneSided o = to_positive_side(z, t1, t2);
    if (!(o.t2 > 0.0) || !(cos_arg(o.z) <= 2.0 * a * std::sqrt(o.t1 * o.t2) / (o.t1 + o.t2))) {
        throw RegimeError("cone estimate needs cos arg z <= 2a sqrt(t1 t2)/(t1 + t2)");
    }
    return (t2 - t1) / (kPi * (1.0 - a * a)) * im_inv_conj(z);
}

double lower_bound_cone(complex z, double t1, double t2)
{
    check_interval(t1, t2);
    check_open_upper(z);
    const OneSided o = to_positive_side(z, t1, t2);
    if (!(o.t1 > 0.0 && o.t1 < o.t2)) {
        throw RegimeError("cone lower estimate needs 0 < t1 < t2 (or the mirror image)");
    }
    if (!(cos_arg(o.z) < 2.0 * std::sqrt(o.t1 * o.t2) / (o.t1 + o.t2))) {
        throw RegimeError("cone estimate needs cos arg z < 2 sqrt(t1 t2)/(t1 + t2)");
    }
    // inside |z| < t1 the cone condition alone does not keep omega above the estimate
    if (std::abs(o.z) < o.t1) {
        throw RegimeError("cone lower estimate needs |z| >= min(|t1|, |t2|)");
    }
    return o.t1 / o.t2 * (t2 - t1) / (8.0 * kPi) * im_inv_conj(z);
}

DiskBounds sharp_disk_bounds(complex z, double t0, double r)
{
    check_upper(z);
    if (!(r > 0.0) || !std::isfinite(t0)) {
        throw InputError("disk bounds need r > 0 and finite centre");
    }
    const double rho = std::abs(z - t0);
    const bool on_circle = std::fabs(rho - r) <= kSemicircleTol * std::max(r, rho);
    if (on_circle && z.imag() > 0.0) {
        return {0.5, std::nullopt};
    }
    if (rho < r || on_circle) {
        // (r - rho)(r + rho) is r^2 - rho^2 without cancellation
        const double lower = 1.0 - std::atan2(2.0 * r * rho, (r - rho) * (r + rho)) / kPi;
        if (on_circle) {
            return {1.0, std::nullopt};
        }
        return {1.0, lower};
    }
    return {std::atan2(2.0 * r * rho, (rho - r) * (rho + r)) / kPi, std::nullopt};
}

bool in_uncovered_region(complex z, double t1, double t2, double a)
{
    check_interval(t1, t2);
    check_upper(z);
    check_a(a);
    if (t1 < 0.0 && t2 > 0.0) {
        return std::abs(z) < std::max(-t1, t2) / a;
    }
    const OneSided o = to_positive_side(z, t1, t2);
    const double m = std::abs(o.z);
    if (m == 0.0) {
        return a * o.t1 <= 0.0;
    }
    return a * o.t1 <= m && m < o.t2 / a &&
           cos_arg(o.z) >= 2.0 * a * std::sqrt(o.t1 * o.t2) / (o.t1 + o.t2);
}

double sector_disk_inside_bound(complex z, const Sector& sector, double r, double a)
{
    check_a(a);
    if (!(r > 0.0)) {
        throw InputError("disk radius must be positive");
    }
    if (!sector.contains_open(z)) {
        throw InputError("point must lie strictly inside the sector");
    }
    if (a * std::abs(z) < r) {
        throw RegimeError("inside-disk estimate needs a|z| >= r");
    }
    const double g = sector.gamma();
    const complex w = sector.reduce_to_half_plane(z);
    const double ag = 1.0 - std::pow(a, g);
    return 2.0 * std::pow(r, g) / (kPi * ag * ag) * im_inv_conj(w);
}

double sector_disk_outside_bound(complex z, const Sector& sector, double r, double a)
{
    check_a(a);
    if (!(r > 0.0)) {
        throw InputError("disk radius must be positive");
    }
    if (!sector.contains_open(z)) {
        throw InputError("point must lie strictly inside the sector");
    }
    if (a * r < std::abs(z)) {
        throw RegimeError("outside-disk estimate needs a r >= |z|");
    }
    const double g = sector.gamma();
    const complex w = sector.reduce_to_half_plane(z);
    const double ag = 1.0 - std::pow(a, g);
    return 2.0 * std::pow(r, -g) / (kPi * ag * ag) * w.imag();
}

} // namespace raysweep

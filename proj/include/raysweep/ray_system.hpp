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

#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace raysweep {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute angular tolerance for deciding that a point lies on a ray.
inline constexpr double kAngleTol = 1e-12;

/// z^n by repeated squaring; negative n inverts first.
inline complex int_power(complex z, int n)
{
    if (n < 0) {
        z = 1.0 / z;
        n = -n;
    }
    complex result(1.0, 0.0);
    while (n > 0) {
        if (n & 1) {
            result *= z;
        }
        z *= z;
        n >>= 1;
    }
    return result;
}

/// Maps an angle into [0, 2pi).
double normalize_angle(double theta);

enum class Side { alpha, beta };

/**
 * Open sector between the rays at angles alpha and beta, alpha < beta <=
 * alpha + 2pi, with vertex at the origin.
 *
 * The power map z -> (z e^{-i alpha})^gamma, gamma = pi / (beta - alpha),
 * sends the closed sector onto the closed upper half-plane: ray alpha goes to
 * the positive reals, ray beta to the negative reals. The branch is the one
 * that is positive on the positive reals after the rotation.
 */
class Sector {
public:
    Sector(double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double aperture() const { return beta_ - alpha_; }
    double gamma() const { return kPi / (beta_ - alpha_); }

    /// Angle of z measured from ray alpha, in [0, 2pi). Zero for z = 0.
    double relative_angle(complex z) const;

    /// True when z is strictly inside (further than kAngleTol from both rays).
    bool contains_open(complex z) const;
    /// True when z lies in the closed sector, within kAngleTol.
    bool contains_closed(complex z) const;

    /// Throws InputError when z is outside the closed sector.
    complex reduce_to_half_plane(complex z) const;

    /// radius * e^{i alpha} or radius * e^{i beta}; throws on negative radius.
    complex boundary_point(Side side, double radius) const;

    /// Image of the point at distance `radius` on the given boundary ray under
    /// the reduction: +radius^gamma for alpha, -radius^gamma for beta.
    double reduced_boundary_coordinate(Side side, double radius) const;

private:
    double alpha_;
    double beta_;
};

/**
 * Finite closed system of rays from the origin, stored as strictly increasing
 * directions in [0, 2pi).
 */
class RaySystem {
public:
    /// Normalizes the angles into [0, 2pi) and sorts them. Rejects empty
    /// input and directions that coincide within kAngleTol.
    explicit RaySystem(std::vector<double> directions_rad);

    static RaySystem real_axis() { return RaySystem({0.0, kPi}); }
    /// Rays at angles offset + 2 pi k / n, k = 0..n-1.
    static RaySystem equiangular(int n, double offset = 0.0);

    const std::vector<double>& directions() const { return directions_; }
    std::size_t size() const { return directions_.size(); }

    /// Complementary sectors between consecutive rays, wrapping at 2pi.
    /// Sector i lies between directions[i] and directions[i + 1].
    std::vector<Sector> sectors() const;

    /// Index of the ray carrying z (within kAngleTol), nullopt otherwise.
    /// The origin is on every ray and reports ray 0.
    std::optional<std::size_t> ray_of(complex z) const;
    bool contains(complex z) const { return ray_of(z).has_value(); }

    /// Complementary sector containing z, or nullopt when z is on the system.
    std::optional<Sector> sector_of(complex z) const;
    /// Index into sectors() of the sector containing z.
    std::optional<std::size_t> sector_index_of(complex z) const;

    /// Index of the ray whose direction matches theta within kAngleTol.
    std::optional<std::size_t> ray_index(double theta) const;

private:
    std::vector<double> directions_;
};

} // namespace raysweep

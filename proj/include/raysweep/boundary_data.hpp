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

#include <vector>

#include "raysweep/ray_system.hpp"

namespace raysweep {

/// Samples of a function along one ray, by distance from the origin.
struct RaySamples {
    std::vector<double> radii;
    std::vector<double> values;
};

/**
 * Function on a ray system given by samples on every ray. Between samples it
 * is linear in the radius, below the first sample it is constant, and beyond
 * the last sample R it follows the power tail c r^s with c = F(R) / R^s, so it
 * is continuous at R. A zero value at R therefore means compact support.
 */
class BoundaryData {
public:
    /// One entry per ray of the system, in the order of RaySystem::directions().
    BoundaryData(std::vector<RaySamples> rays, double tail_exponent);

    /// Samples f(r e^{i theta_j}) on the same radii for every ray.
    template <class F>
    static BoundaryData sample(const RaySystem& system, const std::vector<double>& radii, F&& f,
                               double tail_exponent)
    {
        std::vector<RaySamples> rays;
        for (double theta : system.directions()) {
            RaySamples s;
            s.radii = radii;
            for (double r : radii) {
                s.values.push_back(f(std::polar(r, theta)));
            }
            rays.push_back(std::move(s));
        }
        return BoundaryData(std::move(rays), tail_exponent);
    }

    std::size_t ray_count() const { return rays_.size(); }
    const RaySamples& samples(std::size_t ray) const { return rays_.at(ray); }
    double tail_exponent() const { return tail_exponent_; }
    double tail_coefficient(std::size_t ray) const { return tail_coeff_.at(ray); }
    double max_radius(std::size_t ray) const { return rays_.at(ray).radii.back(); }

    double value(std::size_t ray, double radius) const;

private:
    std::vector<RaySamples> rays_;
    std::vector<double> tail_coeff_;
    double tail_exponent_;
};

} // namespace raysweep

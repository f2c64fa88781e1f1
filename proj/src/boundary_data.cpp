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

#include "raysweep/boundary_data.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"

namespace raysweep {

BoundaryData::BoundaryData(std::vector<RaySamples> rays, double tail_exponent)
    : rays_(std::move(rays)), tail_exponent_(tail_exponent)
{
    if (rays_.empty()) {
        throw InputError("boundary data needs at least one ray");
    }
    if (!std::isfinite(tail_exponent)) {
        throw InputError("tail exponent must be finite");
    }
    for (const RaySamples& s : rays_) {
        if (s.radii.empty() || s.radii.size() != s.values.size()) {
            throw InputError("every ray needs at least one sample with matching lengths");
        }
        for (std::size_t i = 0; i < s.radii.size(); ++i) {
            if (!(s.radii[i] >= 0.0) || !std::isfinite(s.radii[i]) || !std::isfinite(s.values[i])) {
                throw InputError("boundary samples must be finite with non-negative radii");
            }
            if (i > 0 && !(s.radii[i] > s.radii[i - 1])) {
                throw InputError("boundary radii must be strictly increasing on each ray");
            }
        }
        const double R = s.radii.back();
        if (R == 0.0) {
            throw InputError("boundary samples must reach a positive radius");
        }
        tail_coeff_.push_back(s.values.back() / std::pow(R, tail_exponent));
    }
}

double BoundaryData::value(std::size_t ray, double radius) const
{
    const RaySamples& s = rays_.at(ray);
    if (radius <= s.radii.front()) {
        return s.values.front();
    }
    if (radius >= s.radii.back()) {
        return radius == s.radii.back() ? s.values.back()
                                        : tail_coeff_[ray] * std::pow(radius, tail_exponent_);
    }
    const auto it = std::upper_bound(s.radii.begin(), s.radii.end(), radius);
    const auto i = static_cast<std::size_t>(it - s.radii.begin());
    const double r0 = s.radii[i - 1];
    const double r1 = s.radii[i];
    const double u = (radius - r0) / (r1 - r0);
    return s.values[i - 1] + u * (s.values[i] - s.values[i - 1]);
}

} // namespace raysweep

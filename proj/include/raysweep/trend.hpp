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

namespace raysweep {

/// Verdict on whether a sampled trace settles as the radius grows.
enum class Trend { converging, diverging, inconclusive };

const char* to_string(Trend t);

struct TrendOptions {
    double window_decades = 2.0;      ///< only the last this-many decades of radii are used
    double sub_ratio = 3.1622776601683795; ///< oscillation measured on [r, sub_ratio * r]
    double converging_slope = -0.25;  ///< log-log slope of the oscillation at or below this converges
    double diverging_slope = -0.05;   ///< at or above this diverges
};

struct TrendResult {
    Trend trend = Trend::inconclusive;
    double slope = 0.0;        ///< fitted log-log slope of the oscillation; -inf when it vanishes
    double window_lo = 0.0;
    double window_hi = 0.0;
    double last_oscillation = 0.0;
};

/**
 * Cauchy-type test on a trace v(r) sampled at increasing radii. For every
 * radius r in the window the oscillation max - min of v over [r, Q r] is
 * recorded, and the least-squares slope of log(oscillation) against log r
 * decides: oscillations decaying like a negative power converge, those that
 * stay flat or grow diverge. Oscillations below 1e-16 times the trace scale
 * count as zero.
 */
TrendResult classify_limit(const std::vector<double>& radii, const std::vector<double>& values,
                           const TrendOptions& opt = {});

/// Boundedness test: classify_limit applied to the running maximum of |v|.
TrendResult classify_bounded(const std::vector<double>& radii, const std::vector<double>& values,
                             const TrendOptions& opt = {});

/// Least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace raysweep

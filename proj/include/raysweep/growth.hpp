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
#include <string>

#include "raysweep/measure_model.hpp"
#include "raysweep/trend.hpp"

namespace raysweep {

/// End of the radius axis a growth quantity refers to.
enum class Limit { infinity, zero };

const char* to_string(Limit at);
/// Accepts "inf", "infinity", "0", "zero".
Limit parse_limit(const std::string& s);

struct GrowthOptions {
    double window_decades = 2.0;
    TrendOptions trend = {};
};

struct OrderEstimate {
    double order = 0.0;      ///< least-squares slope of log+ f against log r, clamped at 0
    double ratio_sup = 0.0;  ///< max of log+ f(r) / log r over the window (r > 1)
    Trend trend = Trend::inconclusive; ///< diverging when the slope keeps increasing
    double first_half_slope = 0.0;
    double second_half_slope = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

/**
 * Windowed estimate of the order of growth of a profile. The grid must span
 * at least three decades; the estimate uses the last `window_decades`.
 */
OrderEstimate order_at_infinity(const RadialProfile& f, const GrowthOptions& opt = {});

struct TypeEstimate {
    double value = 0.0;      ///< max of f+(r) / r^p over the window
    TrendResult trend;       ///< boundedness trend of the ratio toward the limit
    double window_lo = 0.0;
    double window_hi = 0.0;
    bool finite() const { return trend.trend == Trend::converging; }
};

/// Windowed estimate of the type at order p: grid tail at infinity, grid head
/// at zero.
TypeEstimate type_at(const RadialProfile& f, double p, Limit at, const GrowthOptions& opt = {});

struct ClassIntegral {
    double value = 0.0;      ///< integral of f(t) / t^{p+1} over the whole grid
    TrendResult trend;       ///< trend of the partial integrals toward the limit
};

/**
 * Integral of f(t) / t^{p+1} over [grid.front(), grid.back()], with f
 * interpolated linearly between samples and the weight integrated exactly on
 * each panel. The trend looks at the partial integrals as the outer (at
 * infinity) or inner (at zero) limit moves.
 */
ClassIntegral convergence_class_integral(const RadialProfile& f, double p, Limit at,
                                         const GrowthOptions& opt = {});

struct PartsIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; ///< |lhs - rhs| / max(|lhs|, |rhs|, 1e-300)
};

/**
 * Integration-by-parts identities between the Stieltjes integral of t^{-p}
 * (or log t for p = 0 at zero) against df and the class integral, on
 * [a, b] = [grid.front(), grid.back()]:
 *
 *   at infinity: int t^-p df = f(b)/b^p - f(a)/a^p + p int f/t^{p+1} dt
 *   at zero, p > 0: int (f - f(a))/t^{p+1} dt = -(f(b) - f(a))/(p b^p) + (1/p) int t^-p df
 *   at zero, p = 0: int (f - f(a))/t dt = (f(b) - f(a)) log b - int log t df
 *
 * The Stieltjes side is a sum over grid increments tagged at geometric
 * midpoints; the other side uses the class-integral quadrature. f must be
 * non-decreasing.
 */
PartsIdentity check_parts_identity(const RadialProfile& f, double p, Limit at);

/**
 * Same identities for the counting function of |m| restricted to [a, b],
 * where every integral is evaluated exactly as a sum over the jumps.
 */
PartsIdentity check_parts_identity(const AtomicMeasure& m, double a, double b, double p,
                                   Limit at);

struct GrowthReport {
    double p = 0.0;
    Limit at = Limit::infinity;
    std::optional<OrderEstimate> order; ///< only at infinity
    TypeEstimate type;
    ClassIntegral class_integral;
};

GrowthReport growth_report(const RadialProfile& f, double p, Limit at,
                           const GrowthOptions& opt = {});

} // namespace raysweep

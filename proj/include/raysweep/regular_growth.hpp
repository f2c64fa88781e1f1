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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raysweep/balayage.hpp"
#include "raysweep/measure_model.hpp"
#include "raysweep/trend.hpp"

namespace raysweep {

/// A quantity traced over radii whose limit is being assessed.
struct LimitTrace {
    std::string name;
    std::vector<double> radii;
    std::vector<double> values;
    double estimate = 0.0; ///< value at the last radius
    TrendResult trend;
};

struct ComplexLimitTrace {
    std::string name;
    std::vector<double> radii;
    std::vector<complex> values;
    complex estimate{0.0, 0.0};
    Trend trend = Trend::inconclusive; ///< converging only if both parts converge
    TrendResult real_part;
    TrendResult imag_part;
};

struct CRGReport {
    std::vector<LimitTrace> limits;
    std::optional<ComplexLimitTrace> lindelof;
    std::optional<ConditionReport> class_A;
    std::vector<std::pair<std::string, double>> sums;
    std::vector<std::string> notes;
};

/// m(closed sector [alpha, beta] within the closed disk r) / r^p on every radius.
LimitTrace angular_density(const AtomicMeasure& m, double alpha, double beta, double p,
                           const std::vector<double>& radii);

/// Partial sums of w z^{-p} over 1 <= |z| <= r, tested for convergence.
ComplexLimitTrace regular_lindelof(const AtomicMeasure& m, int p, const std::vector<double>& radii);

/// Two-sided Blaschke sums of |Im 1/z_k| over |z_k| > r0: the Blaschke report
/// for the real axis.
ConditionReport class_A_report(const ZeroSequence& zeros, double r0 = 1.0,
                               std::vector<double> radii = {});

/**
 * Sweeps the counting measure of the zeros onto the real axis and traces
 *   density_plus(t)  = D(t) / t,
 *   density_minus(t) = D(-t) / (-t),
 *   lindelof_integral(t) = int_1^t (D(s) + D(-s)) / s ds,
 * with D the distribution function of the swept measure on the real axis.
 */
CRGReport example1_limits(const ZeroSequence& zeros, const std::vector<double>& radii,
                          double r0 = 1.0);

/**
 * Counting functions of zeros on the four bisector rays. For each t in radii:
 *   b_k(t) = 2 int_0^inf (n_k(s) + n_{k+1}(s)) s / (s^4 + t^2) ds,  n_4 = n_0,
 * the trace int_1^t sum_k i^{k+1} (b_k(u) / 2) du / u, and the indicator sums
 * b_0 + b_2 and b_1 + b_3. Each n_k is linear between samples, constant below
 * the first sample and follows c s^tail_exponent beyond the last one
 * (tail_exponent < 2).
 */
CRGReport example2_limits(const std::array<RadialProfile, 4>& counts, const std::vector<double>& radii,
                          double tail_exponent = 1.0);

/// b_k(t) for one pair of counting functions; exposed for tests.
double example2_density(const RadialProfile& nk, const RadialProfile& nk1, double t,
                        double tail_exponent);

} // namespace raysweep

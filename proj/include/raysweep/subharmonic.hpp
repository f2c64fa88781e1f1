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

#include <utility>
#include <vector>

#include "raysweep/balayage.hpp"
#include "raysweep/boundary_data.hpp"
#include "raysweep/measure_model.hpp"

namespace raysweep {

/**
 * Truncated logarithmic kernel
 *   K_q(zeta, z) = log|zeta - z| - log|zeta| + Re sum_{j=1..q} (z/zeta)^j / j,
 * with K_{-1}(zeta, z) = log|zeta - z|. Harmonic in z away from zeta.
 * Returns -inf at z = zeta. zeta = 0 is accepted only for q = -1.
 */
double kernel_eval(complex zeta, complex z, int q);

/**
 * Genus function t -> q(t): -1 on [0, 1], otherwise the value of the last
 * step whose threshold is <= t (or -1 before the first step). Thresholds are
 * >= 1 and strictly increasing, values non-negative and non-decreasing.
 */
class GenusFunction {
public:
    GenusFunction() = default;
    explicit GenusFunction(std::vector<std::pair<double, int>> steps);
    /// q(t) = q for every t > 1.
    static GenusFunction constant(int q);

    int operator()(double t) const;
    const std::vector<std::pair<double, int>>& steps() const { return steps_; }

private:
    std::vector<std::pair<double, int>> steps_;
};

struct KernelSpec {
    GenusFunction genus;
};

/**
 * Smallest constant genus q >= -1 for which sum |w| (t0/|z|)^{q+1} over atoms
 * with |z| > max(t0, 1) is below `budget`. Throws RegimeError when no q up to
 * q_max qualifies.
 */
KernelSpec auto_select_kernel(const AtomicMeasure& m, double budget, double t0 = 1.0,
                              int q_max = 64);

/**
 * sum_k w_k K_{q(|z_k|)}(z_k, z). If z carries atoms of positive net weight
 * the result is -inf, of negative net weight +inf.
 */
double potential(const AtomicMeasure& m, const KernelSpec& spec, complex z);

struct PoissonOptions {
    int panels_per_ray = 10000;
};

/**
 * Integral of boundary data against the harmonic measure of the sector of
 * ray-system complement containing z (the Poisson integral), or the data value
 * itself when z is on the system.
 *
 * In the half-plane picture the boundary line is cut into panels of equal
 * harmonic measure, refined at the origin and at every sample. On each panel
 * the data are replaced by their linear interpolant in the half-plane
 * coordinate and integrated exactly against the Poisson kernel. Beyond
 * T = max(R^gamma, 32 |z'|) the power tails are integrated term by term
 * through the expansion of the kernel at infinity. Tail terms that do not
 * decay must cancel between the two rays (their contributions are then taken
 * as a symmetric limit); otherwise RegimeError.
 */
double poisson_extend(const BoundaryData& f, const RaySystem& system, complex z,
                      const PoissonOptions& opt = {});

/**
 * Value of the swept potential of m: the potential is sampled on every ray at
 * `radii`, extended by the declared power tail and Poisson-extended off the
 * system. On the system the potential itself is returned.
 */
double sweep_function_value(const AtomicMeasure& riesz, const KernelSpec& spec,
                            const RaySystem& system, const std::vector<double>& radii,
                            double tail_exponent, complex z, const PoissonOptions& opt = {});

struct FubiniSides {
    double swept;    ///< integral of f against the balayage of m
    double poisson;  ///< sum of w_k times the Poisson extension of f at z_k
};

/// Both sides of the identity int f d(m swept) = int (Poisson extension of f) dm.
FubiniSides fubini_sides(const AtomicMeasure& m, const RaySystem& system, const BoundaryData& f,
                         const PoissonOptions& opt = {}, int cells_per_piece = 4096);

} // namespace raysweep

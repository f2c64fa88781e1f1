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
#include <utility>
#include <vector>

#include "raysweep/boundary_data.hpp"
#include "raysweep/growth.hpp"
#include "raysweep/harmonic_measure.hpp"
#include "raysweep/measure_model.hpp"
#include "raysweep/trend.hpp"

namespace raysweep {

/// Atom off the ray system together with the sector it sweeps onto.
struct SweptSource {
    complex z;
    double w;
    std::size_t sector;   ///< index into RaySystem::sectors()
    complex reduced;      ///< image of z in the upper half-plane
};

/**
 * Balayage of an atomic measure onto a ray system. Atoms already on the system
 * are kept; every other atom contributes its weight times the harmonic measure
 * of its sector. Masses are evaluated on demand from closed-form harmonic
 * measures, so no density grid is stored.
 */
class SweptMeasure {
public:
    SweptMeasure(RaySystem system, AtomicMeasure retained, std::vector<SweptSource> sources);

    const RaySystem& system() const { return system_; }
    const AtomicMeasure& retained() const { return retained_; }
    const std::vector<SweptSource>& sources() const { return sources_; }
    const std::vector<Sector>& sectors() const { return sectors_; }

    /**
     * Mass of the open radial interval (r_lo, r_hi) on the given ray, with
     * 0 <= r_lo <= r_hi <= inf. For total/plus/minus each source uses |w|,
     * w+ or w-, i.e. the balayage of the variation, which dominates the
     * variation of the balayage.
     */
    double interval_mass(std::size_t ray, double r_lo, double r_hi,
                         Variation v = Variation::net) const;
    /// Interval given as a side of a sector; the ray must belong to the system.
    double interval_mass(const IntervalOnRay& iv, Variation v = Variation::net) const;

    /// Mass of the closed disk of radius r (all rays plus the origin).
    double disk_mass(double r, Variation v = Variation::net) const;

    /// Density of the swept sources with respect to arc length at the given
    /// radius on a ray. Retained atoms are not included.
    double density(std::size_t ray, double radius, Variation v = Variation::net) const;

    /**
     * Integral of boundary data against the swept measure: midpoint rule on
     * exact cell masses, `cells_per_piece` cells between consecutive samples,
     * plus the retained atoms. A nonzero tail is integrated on geometric cells
     * up to 1e6 times the data range and cut off there.
     */
    double integrate_against(const BoundaryData& f, int cells_per_piece = 4096,
                             Variation v = Variation::net) const;

    /**
     * Partial sums of z^{-p} against the swept measure over r0 < |z| <= r for
     * every r in `radii`. Ray integrals use geometric cells with
     * `cells_per_decade` cells per decade and midpoint tags.
     */
    std::vector<complex> lindelof_trace(int p, double r0, const std::vector<double>& radii,
                                        int cells_per_decade = 200) const;

private:
    // (sector index, side) pairs whose boundary is the given ray
    std::vector<std::pair<std::size_t, Side>> sides_of(std::size_t ray) const;

    RaySystem system_;
    AtomicMeasure retained_;
    std::vector<SweptSource> sources_;
    std::vector<Sector> sectors_;
};

SweptMeasure sweep(const AtomicMeasure& m, const RaySystem& system);

/// Distribution function on the real line of a measure swept onto the real
/// axis: mass of [0, t] for t >= 0, minus the mass of [t, 0) for t < 0.
double swept_distribution_on_R(const SweptMeasure& sm, double t, Variation v = Variation::net);

enum class Verdict { satisfied, violated, inconclusive };
const char* to_string(Verdict v);

struct SectorEvidence {
    std::size_t index = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double sum = 0.0;
    bool wide = false;         ///< aperture >= pi / p (admissibility only)
    bool sparse = false;       ///< too few atoms in the trend window for a tail trend
    std::optional<TrendResult> trend;
};

/// Verdict plus the numeric evidence it was derived from.
struct ConditionReport {
    std::string kind;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::pair<std::string, double>> parameters;
    std::vector<double> radii;
    std::vector<double> partial_sums;          ///< real trace (modulus for complex traces)
    std::vector<complex> complex_partial_sums; ///< Lindelof traces only
    std::vector<SectorEvidence> sectors;
    double total = 0.0;
    TrendResult trend;
    std::vector<std::string> notes;
};

/**
 * Blaschke condition for every complementary sector: the sum of
 * |w| Im z' / |z'|^2 (z' the reduced atom) over atoms with |z| > r0, or, for
 * the version at zero, the same sum after the inversion z -> 1/conj(z) over
 * atoms with 0 < |z| < r0. Partial sums are traced on `radii` (a geometric
 * grid up to the farthest atom by default).
 */
ConditionReport blaschke_report(const AtomicMeasure& m, const RaySystem& system, double r0,
                                Limit at, std::vector<double> radii = {});

/// Boundedness of the partial sums of w z^{-p} over r0 < |z| <= r.
ConditionReport lindelof_report(const AtomicMeasure& m, int p, double r0,
                                std::vector<double> radii = {});

/**
 * Structural p-admissibility (every aperture < pi/p) and Blaschke evidence at
 * infinity in each wide sector. The order p is taken as declared; finite type
 * at order p is not measured.
 */
ConditionReport admissibility_report(const AtomicMeasure& m, const RaySystem& system, double p,
                                     double r0 = 1.0);

struct GrowthBound {
    double value = 0.0;
    double inner_mass = 0.0; ///< |m| of the closed disk of radius g
    double outer_sum = 0.0;  ///< sum over sectors of r^gamma times the Blaschke terms beyond g
};

/**
 * Upper bound for the radial counting function at r of the balayage of |m|:
 * |m|(closed disk g) + 2 / (pi (1 - sqrt a)^2) * outer_sum. Needs 0 < a < 1
 * and r <= a g.
 */
GrowthBound sweep_growth_bound(const AtomicMeasure& m, const RaySystem& system, double r, double g,
                               double a);

} // namespace raysweep

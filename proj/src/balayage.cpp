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

#include "raysweep/balayage.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"
#include "raysweep/summation.hpp"

namespace raysweep {

namespace {

// Tail trends are only reported when at least this many atoms fall in the
// trend window; fewer atoms say nothing about the tail.
constexpr std::size_t kMinTailAtoms = 8;
constexpr double kDefaultGridRatio = 1.2;

double blaschke_term(complex reduced)
{
    return reduced.imag() / std::norm(reduced);
}

void check_interval_radii(double r_lo, double r_hi)
{
    if (std::isnan(r_lo) || std::isnan(r_hi) || r_lo < 0.0 || r_lo > r_hi) {
        throw InputError("ray interval needs 0 <= r_lo <= r_hi");
    }
}

std::vector<double> default_radii(double r0, double r_max)
{
    if (!(r_max > r0)) {
        return {};
    }
    return geometric_grid(r0, r_max, kDefaultGridRatio);
}

void check_radii_increasing(const std::vector<double>& radii)
{
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw InputError("radii must be positive and strictly increasing");
        }
    }
}

struct KeyedTerm {
    double key;  // radius (or inverted radius) ordering the partial sums
    double term;
    std::size_t sector;
};

// Partial sums of the terms with key <= r, for every r in radii (terms sorted by key).
std::vector<double> partial_sums(const std::vector<KeyedTerm>& terms, const std::vector<double>& radii,
                                 std::optional<std::size_t> sector)
{
    std::vector<double> out;
    out.reserve(radii.size());
    CompensatedSum acc;
    std::size_t k = 0;
    for (double r : radii) {
        while (k < terms.size() && terms[k].key <= r) {
            if (!sector || terms[k].sector == *sector) {
                acc.add(terms[k].term);
            }
            ++k;
        }
        out.push_back(acc.value());
    }
    return out;
}

std::size_t count_in_window(const std::vector<KeyedTerm>& terms, const TrendResult& t,
                            std::optional<std::size_t> sector)
{
    std::size_t n = 0;
    for (const KeyedTerm& kt : terms) {
        if (kt.key >= t.window_lo && kt.key <= t.window_hi && kt.term != 0.0 &&
            (!sector || kt.sector == *sector)) {
            ++n;
        }
    }
    return n;
}

Verdict verdict_of(Trend t)
{
    switch (t) {
    case Trend::converging:
        return Verdict::satisfied;
    case Trend::diverging:
        return Verdict::violated;
    case Trend::inconclusive:
        return Verdict::inconclusive;
    }
    return Verdict::inconclusive;
}

const char* kSparseNote =
    "fewer than 8 atoms in the trend window: the partial sum is finite, no tail trend";

} // namespace

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::satisfied:
        return "satisfied";
    case Verdict::violated:
        return "violated";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

SweptMeasure::SweptMeasure(RaySystem system, AtomicMeasure retained, std::vector<SweptSource> sources)
    : system_(std::move(system)), retained_(std::move(retained)), sources_(std::move(sources)),
      sectors_(system_.sectors())
{
}

std::vector<std::pair<std::size_t, Side>> SweptMeasure::sides_of(std::size_t ray) const
{
    const std::size_t n = sectors_.size();
    if (ray >= n) {
        throw InputError("ray index out of range");
    }
    return {{ray, Side::alpha}, {(ray + n - 1) % n, Side::beta}};
}

double SweptMeasure::interval_mass(std::size_t ray, double r_lo, double r_hi, Variation v) const
{
    check_interval_radii(r_lo, r_hi);
    const auto sides = sides_of(ray);
    std::vector<double> terms;
    for (const Atom& a : retained_.atoms()) {
        const double rho = std::abs(a.z);
        if (rho > r_lo && rho < r_hi && system_.ray_of(a.z) == ray) {
            terms.push_back(weight_of(a.w, v));
        }
    }
    for (const SweptSource& s : sources_) {
        const double w = weight_of(s.w, v);
        if (w == 0.0) {
            continue;
        }
        for (const auto& [sec, side] : sides) {
            if (s.sector != sec) {
                continue;
            }
            const Sector& sector = sectors_[sec];
            const double a = sector.reduced_boundary_coordinate(side, r_lo);
            const double b = sector.reduced_boundary_coordinate(side, r_hi);
            const double om = side == Side::alpha ? omega_half_plane(s.reduced, a, b)
                                                  : omega_half_plane(s.reduced, b, a);
            terms.push_back(w * om);
        }
    }
    return pairwise_sum(terms);
}

double SweptMeasure::interval_mass(const IntervalOnRay& iv, Variation v) const
{
    const double theta = iv.side == Side::alpha ? iv.sector.alpha() : iv.sector.beta();
    const auto ray = system_.ray_index(theta);
    if (!ray) {
        throw InputError("interval does not lie on the ray system");
    }
    return interval_mass(*ray, iv.r_lo, iv.r_hi, v);
}

double SweptMeasure::disk_mass(double r, Variation v) const
{
    if (!(r >= 0.0)) {
        throw InputError("disk radius must be non-negative");
    }
    std::vector<double> terms;
    for (const Atom& a : retained_.atoms()) {
        if (std::abs(a.z) <= r) {
            terms.push_back(weight_of(a.w, v));
        }
    }
    for (const SweptSource& s : sources_) {
        const double w = weight_of(s.w, v);
        if (w == 0.0) {
            continue;
        }
        const double R = std::pow(r, sectors_[s.sector].gamma());
        terms.push_back(w * omega_half_plane(s.reduced, -R, R));
    }
    return pairwise_sum(terms);
}

double SweptMeasure::density(std::size_t ray, double radius, Variation v) const
{
    if (!(radius >= 0.0)) {
        throw InputError("radius must be non-negative");
    }
    const auto sides = sides_of(ray);
    std::vector<double> terms;
    for (const SweptSource& s : sources_) {
        const double w = weight_of(s.w, v);
        if (w == 0.0) {
            continue;
        }
        for (const auto& [sec, side] : sides) {
            if (s.sector == sec) {
                terms.push_back(w * omega_sector_density(s.z, sectors_[sec], side, radius));
            }
        }
    }
    return pairwise_sum(terms);
}

namespace {

// Masses of the swept sources on consecutive cells [edges[k], edges[k+1]] of a ray.
std::vector<double> source_cell_masses(const SweptMeasure& sm, std::size_t ray,
                                       const std::vector<double>& edges, Variation v)
{
    const std::size_t n = sm.sectors().size();
    const std::pair<std::size_t, Side> sides[2] = {{ray, Side::alpha}, {(ray + n - 1) % n, Side::beta}};
    std::vector<double> masses(edges.size() > 0 ? edges.size() - 1 : 0, 0.0);
    std::vector<double> tau(edges.size());
    for (const SweptSource& s : sm.sources()) {
        const double w = weight_of(s.w, v);
        if (w == 0.0) {
            continue;
        }
        for (const auto& [sec, side] : sides) {
            if (s.sector != sec) {
                continue;
            }
            const Sector& sector = sm.sectors()[sec];
            for (std::size_t k = 0; k < edges.size(); ++k) {
                tau[k] = sector.reduced_boundary_coordinate(side, edges[k]);
            }
            for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
                const double om = side == Side::alpha ? omega_half_plane(s.reduced, tau[k], tau[k + 1])
                                                      : omega_half_plane(s.reduced, tau[k + 1], tau[k]);
                masses[k] += w * om;
            }
        }
    }
    return masses;
}

} // namespace

double SweptMeasure::integrate_against(const BoundaryData& f, int cells_per_piece, Variation v) const
{
    if (f.ray_count() != system_.size()) {
        throw InputError("boundary data must have one entry per ray");
    }
    if (cells_per_piece < 1) {
        throw InputError("cells_per_piece must be positive");
    }
    CompensatedSum total;
    for (std::size_t j = 0; j < system_.size(); ++j) {
        const RaySamples& s = f.samples(j);
        std::vector<double> edges;
        std::vector<double> tags;
        if (s.radii.front() > 0.0) {
            edges.push_back(0.0);
        }
        edges.push_back(s.radii.front());
        for (std::size_t i = 0; i + 1 < s.radii.size(); ++i) {
            const double a = s.radii[i];
            const double h = (s.radii[i + 1] - a) / cells_per_piece;
            for (int c = 1; c <= cells_per_piece; ++c) {
                edges.push_back(c == cells_per_piece ? s.radii[i + 1] : a + h * c);
            }
        }
        const double R = s.radii.back();
        if (f.tail_coefficient(j) != 0.0) {
            const double ratio = std::pow(10.0, 1.0 / 200.0);
            double r = R;
            while (r < 1e6 * R) {
                r *= ratio;
                edges.push_back(r);
            }
        }
        const std::vector<double> masses = source_cell_masses(*this, j, edges, v);
        for (std::size_t k = 0; k < masses.size(); ++k) {
            const double mid = 0.5 * (edges[k] + edges[k + 1]);
            total.add(f.value(j, mid) * masses[k]);
        }
    }
    for (const Atom& a : retained_.atoms()) {
        const auto ray = system_.ray_of(a.z);
        total.add(weight_of(a.w, v) * f.value(ray.value_or(0), std::abs(a.z)));
    }
    return total.value();
}

std::vector<complex> SweptMeasure::lindelof_trace(int p, double r0, const std::vector<double>& radii,
                                                  int cells_per_decade) const
{
    if (p < 1) {
        throw InputError("Lindelof order must be a positive integer");
    }
    if (!(r0 > 0.0) || cells_per_decade < 1) {
        throw InputError("Lindelof trace needs r0 > 0 and a positive cell density");
    }
    check_radii_increasing(radii);
    std::vector<complex> out(radii.size(), complex(0.0, 0.0));
    if (radii.empty() || radii.back() <= r0) {
        return out;
    }
    std::vector<double> edges = {r0};
    const double ratio = std::pow(10.0, 1.0 / cells_per_decade);
    for (double r = r0 * ratio; r < radii.back(); r *= ratio) {
        edges.push_back(r);
    }
    for (double r : radii) {
        if (r > r0) {
            edges.push_back(r);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // cumulative contribution of every cell, over all rays
    std::vector<complex> cell(edges.size() - 1, complex(0.0, 0.0));
    for (std::size_t j = 0; j < system_.size(); ++j) {
        const complex dir = std::polar(1.0, -p * system_.directions()[j]);
        const std::vector<double> masses = source_cell_masses(*this, j, edges, Variation::net);
        for (std::size_t k = 0; k < masses.size(); ++k) {
            const double tag = std::sqrt(edges[k] * edges[k + 1]);
            cell[k] += dir * (masses[k] * std::pow(tag, -p));
        }
    }
    std::vector<std::pair<double, complex>> atoms;
    for (const Atom& a : retained_.atoms()) {
        const double rho = std::abs(a.z);
        if (rho > r0) {
            atoms.emplace_back(rho, a.w * int_power(a.z, -p));
        }
    }
    std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    complex acc(0.0, 0.0);
    std::size_t k = 0;
    std::size_t ai = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        while (k < cell.size() && edges[k + 1] <= radii[i]) {
            acc += cell[k];
            ++k;
        }
        while (ai < atoms.size() && atoms[ai].first <= radii[i]) {
            acc += atoms[ai].second;
            ++ai;
        }
        out[i] = acc;
    }
    return out;
}

SweptMeasure sweep(const AtomicMeasure& m, const RaySystem& system)
{
    std::vector<Atom> kept;
    std::vector<SweptSource> sources;
    const std::vector<Sector> sectors = system.sectors();
    for (const Atom& a : m.atoms()) {
        const auto idx = system.sector_index_of(a.z);
        if (!idx) {
            kept.push_back(a);
            continue;
        }
        sources.push_back({a.z, a.w, *idx, sectors[*idx].reduce_to_half_plane(a.z)});
    }
    return SweptMeasure(system, AtomicMeasure(std::move(kept)), std::move(sources));
}

double swept_distribution_on_R(const SweptMeasure& sm, double t, Variation v)
{
    const auto& d = sm.system().directions();
    if (d.size() != 2 || d[0] != 0.0 || std::fabs(d[1] - kPi) > kAngleTol) {
        throw InputError("distribution on R needs the real axis as ray system");
    }
    if (std::isnan(t)) {
        throw InputError("t must not be NaN");
    }
    CompensatedSum acc;
    for (const Atom& a : sm.retained().atoms()) {
        const double x = std::abs(a.z) * (sm.system().ray_of(a.z) == 1u ? -1.0 : 1.0);
        const double w = weight_of(a.w, v);
        if (t >= 0.0 && x >= 0.0 && x <= t) {
            acc.add(w);
        } else if (t < 0.0 && x >= t && x < 0.0) {
            acc.add(-w);
        }
    }
    // the continuous part does not see the endpoints
    SweptMeasure sources_only(sm.system(), AtomicMeasure(), sm.sources());
    if (t >= 0.0) {
        acc.add(sources_only.interval_mass(0, 0.0, t, v));
    } else {
        acc.add(-sources_only.interval_mass(1, 0.0, -t, v));
    }
    return acc.value();
}

ConditionReport blaschke_report(const AtomicMeasure& m, const RaySystem& system, double r0, Limit at,
                                std::vector<double> radii)
{
    if (!(r0 > 0.0) || !std::isfinite(r0)) {
        throw InputError("Blaschke condition needs finite r0 > 0");
    }
    ConditionReport rep;
    rep.kind = at == Limit::infinity ? "blaschke_inf" : "blaschke_0";
    rep.parameters = {{"r0", r0}};
    // the version at zero is the version at infinity after z -> 1/conj(z),
    // which maps every sector onto itself
    const double cut = at == Limit::infinity ? r0 : 1.0 / r0;
    const std::vector<Sector> sectors = system.sectors();

    std::vector<KeyedTerm> terms;
    std::size_t origin_atoms = 0;
    double key_max = 0.0;
    for (const Atom& a : m.atoms()) {
        if (a.z == complex(0.0, 0.0)) {
            ++origin_atoms;
            continue;
        }
        const complex z = at == Limit::infinity ? a.z : 1.0 / std::conj(a.z);
        const double key = std::abs(z);
        if (!(key > cut)) {
            continue;
        }
        key_max = std::max(key_max, key);
        const auto idx = system.sector_index_of(z);
        if (!idx) {
            terms.push_back({key, 0.0, sectors.size()});
            continue;
        }
        const complex zr = sectors[*idx].reduce_to_half_plane(z);
        terms.push_back({key, std::fabs(a.w) * blaschke_term(zr), *idx});
    }
    if (origin_atoms > 0) {
        rep.notes.push_back("atoms at the origin excluded: " + std::to_string(origin_atoms));
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const KeyedTerm& x, const KeyedTerm& y) { return x.key < y.key; });

    if (radii.empty()) {
        radii = default_radii(cut, key_max);
    } else {
        check_radii_increasing(radii);
        if (at == Limit::zero) {
            // user radii are radii of the original plane, decreasing toward 0
            std::vector<double> inv;
            for (auto it = radii.rbegin(); it != radii.rend(); ++it) {
                inv.push_back(1.0 / *it);
            }
            radii = std::move(inv);
        }
    }
    rep.radii = radii;

    CompensatedSum total;
    for (std::size_t s = 0; s < sectors.size(); ++s) {
        SectorEvidence ev;
        ev.index = s;
        ev.alpha = sectors[s].alpha();
        ev.beta = sectors[s].beta();
        CompensatedSum acc;
        for (const KeyedTerm& kt : terms) {
            if (kt.sector == s) {
                acc.add(kt.term);
            }
        }
        ev.sum = acc.value();
        total.add(ev.sum);
        if (radii.size() >= 2) {
            TrendResult t = classify_limit(radii, partial_sums(terms, radii, s));
            if (count_in_window(terms, t, s) < kMinTailAtoms) {
                t.trend = Trend::inconclusive;
                ev.sparse = true;
            }
            ev.trend = t;
        }
        rep.sectors.push_back(ev);
    }
    rep.total = total.value();

    if (radii.size() < 2) {
        rep.verdict = Verdict::satisfied;
        rep.notes.push_back("no atoms beyond the cut-off radius");
        return rep;
    }
    rep.partial_sums = partial_sums(terms, radii, std::nullopt);
    rep.trend = classify_limit(radii, rep.partial_sums);
    if (count_in_window(terms, rep.trend, std::nullopt) < kMinTailAtoms) {
        rep.trend.trend = Trend::inconclusive;
        rep.verdict = Verdict::satisfied;
        rep.notes.push_back(kSparseNote);
    } else {
        rep.verdict = verdict_of(rep.trend.trend);
    }
    if (at == Limit::zero) {
        rep.notes.push_back("radii are inverted radii 1/|z|");
    }
    return rep;
}

ConditionReport lindelof_report(const AtomicMeasure& m, int p, double r0, std::vector<double> radii)
{
    if (p < 1) {
        throw InputError("Lindelof order must be a positive integer");
    }
    if (!(r0 > 0.0) || !std::isfinite(r0)) {
        throw InputError("Lindelof condition needs finite r0 > 0");
    }
    ConditionReport rep;
    rep.kind = "lindelof";
    rep.parameters = {{"p", static_cast<double>(p)}, {"r0", r0}};

    std::vector<std::pair<double, complex>> terms;
    for (const Atom& a : m.atoms()) {
        const double rho = std::abs(a.z);
        if (rho > r0) {
            terms.emplace_back(rho, a.w * int_power(a.z, -p));
        }
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    if (radii.empty()) {
        radii = default_radii(r0, terms.empty() ? r0 : terms.back().first);
    } else {
        check_radii_increasing(radii);
    }
    rep.radii = radii;

    CompensatedSum re;
    CompensatedSum im;
    std::size_t k = 0;
    for (double r : radii) {
        while (k < terms.size() && terms[k].first <= r) {
            re.add(terms[k].second.real());
            im.add(terms[k].second.imag());
            ++k;
        }
        const complex s(re.value(), im.value());
        rep.complex_partial_sums.push_back(s);
        rep.partial_sums.push_back(std::abs(s));
    }
    for (; k < terms.size(); ++k) {
        re.add(terms[k].second.real());
        im.add(terms[k].second.imag());
    }
    rep.total = std::abs(complex(re.value(), im.value()));

    if (radii.size() < 2) {
        rep.verdict = Verdict::satisfied;
        rep.notes.push_back("no atoms beyond the cut-off radius");
        return rep;
    }
    rep.trend = classify_bounded(radii, rep.partial_sums);
    std::size_t in_window = 0;
    for (const auto& [rho, t] : terms) {
        in_window += (rho >= rep.trend.window_lo && rho <= rep.trend.window_hi) ? 1 : 0;
    }
    if (in_window < kMinTailAtoms) {
        rep.trend.trend = Trend::inconclusive;
        rep.verdict = Verdict::satisfied;
        rep.notes.push_back(kSparseNote);
    } else {
        rep.verdict = verdict_of(rep.trend.trend);
    }
    return rep;
}

ConditionReport admissibility_report(const AtomicMeasure& m, const RaySystem& system, double p, double r0)
{
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw InputError("admissibility needs a finite order p > 0");
    }
    ConditionReport rep;
    rep.kind = "admissible";
    const std::vector<Sector> sectors = system.sectors();
    const ConditionReport bl = blaschke_report(m, system, r0, Limit::infinity);

    std::size_t wide = 0;
    rep.verdict = Verdict::satisfied;
    for (std::size_t s = 0; s < sectors.size(); ++s) {
        SectorEvidence ev = bl.sectors[s];
        ev.wide = sectors[s].aperture() >= kPi / p - kAngleTol;
        if (ev.wide) {
            ++wide;
            const Verdict v = (ev.trend && !ev.sparse) ? verdict_of(ev.trend->trend)
                                                       : Verdict::satisfied;
            if (v == Verdict::violated) {
                rep.verdict = Verdict::violated;
            } else if (v == Verdict::inconclusive && rep.verdict == Verdict::satisfied) {
                rep.verdict = Verdict::inconclusive;
            }
        }
        rep.sectors.push_back(ev);
    }
    rep.parameters = {{"p", p},
                      {"r0", r0},
                      {"wide_sectors", static_cast<double>(wide)},
                      {"max_wide_sectors", 2.0 * p}};
    rep.radii = bl.radii;
    rep.partial_sums = bl.partial_sums;
    rep.total = bl.total;
    rep.trend = bl.trend;
    if (wide == 0) {
        rep.notes.push_back("structurally p-admissible: every aperture is below pi/p");
    } else {
        rep.notes.push_back("wide sectors need the Blaschke condition at infinity");
    }
    if (static_cast<double>(wide) > 2.0 * p) {
        rep.notes.push_back("more wide sectors than 2p");
    }
    rep.notes.push_back("order p is declared, finite type at order p is not measured");
    return rep;
}

GrowthBound sweep_growth_bound(const AtomicMeasure& m, const RaySystem& system, double r, double g,
                               double a)
{
    if (!(r > 0.0) || !(g > 0.0) || !std::isfinite(g)) {
        throw InputError("growth bound needs r > 0 and finite g > 0");
    }
    if (!(a > 0.0 && a < 1.0)) {
        throw RegimeError("growth bound needs 0 < a < 1");
    }
    if (r > a * g * (1.0 + 1e-12)) {
        throw RegimeError("growth bound needs r <= a g");
    }
    const std::vector<Sector> sectors = system.sectors();
    CompensatedSum inner;
    CompensatedSum outer;
    for (const Atom& at : m.atoms()) {
        const double rho = std::abs(at.z);
        if (rho <= g) {
            inner.add(std::fabs(at.w));
            continue;
        }
        const auto idx = system.sector_index_of(at.z);
        if (!idx) {
            continue;
        }
        const Sector& s = sectors[*idx];
        const complex zr = s.reduce_to_half_plane(at.z);
        outer.add(std::pow(r, s.gamma()) * std::fabs(at.w) * blaschke_term(zr));
    }
    GrowthBound b;
    b.inner_mass = inner.value();
    b.outer_sum = outer.value();
    const double k = 1.0 - std::sqrt(a);
    b.value = b.inner_mass + 2.0 / (kPi * k * k) * b.outer_sum;
    return b;
}

} // namespace raysweep

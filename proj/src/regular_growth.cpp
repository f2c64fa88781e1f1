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

#include "raysweep/regular_growth.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"
#include "raysweep/quadrature.hpp"
#include "raysweep/summation.hpp"

namespace raysweep {

namespace {

// Largest log-width of a Gauss-Legendre subpanel.
constexpr double kLogPanel = 0.15;

void check_radii(const std::vector<double>& radii)
{
    if (radii.size() < 2) {
        throw InputError("limit traces need at least two radii");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !std::isfinite(radii[i]) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw InputError("radii must be positive, finite and strictly increasing");
        }
    }
}

LimitTrace make_trace(std::string name, const std::vector<double>& radii, std::vector<double> values)
{
    LimitTrace t;
    t.name = std::move(name);
    t.radii = radii;
    t.values = std::move(values);
    t.estimate = t.values.back();
    t.trend = classify_limit(t.radii, t.values);
    return t;
}

ComplexLimitTrace make_complex_trace(std::string name, const std::vector<double>& radii,
                                     std::vector<complex> values)
{
    ComplexLimitTrace t;
    t.name = std::move(name);
    t.radii = radii;
    t.values = std::move(values);
    t.estimate = t.values.back();
    std::vector<double> re;
    std::vector<double> im;
    for (complex v : t.values) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    t.real_part = classify_limit(radii, re);
    t.imag_part = classify_limit(radii, im);
    const Trend a = t.real_part.trend;
    const Trend b = t.imag_part.trend;
    if (a == Trend::diverging || b == Trend::diverging) {
        t.trend = Trend::diverging;
    } else if (a == Trend::converging && b == Trend::converging) {
        t.trend = Trend::converging;
    } else {
        t.trend = Trend::inconclusive;
    }
    return t;
}

// Nodes 1 and the radii, sorted, for integrals that start at 1.
std::vector<double> with_unit_node(const std::vector<double>& radii)
{
    std::vector<double> nodes = radii;
    nodes.push_back(1.0);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

// int_1^{r} g(s) ds / s for every r in radii, g evaluated in log s.
template <class G>
std::vector<double> log_integral_from_one(const std::vector<double>& radii, G&& g)
{
    const std::vector<double> nodes = with_unit_node(radii);
    const auto one = static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), 1.0) - nodes.begin());
    std::vector<double> cum(nodes.size(), 0.0);
    auto in_log = [&](double u) { return g(std::exp(u)); };
    for (std::size_t i = one + 1; i < nodes.size(); ++i) {
        cum[i] = cum[i - 1] +
                 gauss_legendre8_composite(in_log, std::log(nodes[i - 1]), std::log(nodes[i]), kLogPanel);
    }
    for (std::size_t i = one; i-- > 0;) {
        cum[i] = cum[i + 1] -
                 gauss_legendre8_composite(in_log, std::log(nodes[i]), std::log(nodes[i + 1]), kLogPanel);
    }
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        const auto k = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), r) - nodes.begin());
        out.push_back(cum[k]);
    }
    return out;
}

double profile_value(const RadialProfile& n, double s, double tail_coeff, double tail_exponent)
{
    if (s <= n.grid.front()) {
        return n.values.front();
    }
    if (s >= n.grid.back()) {
        return s == n.grid.back() ? n.values.back() : tail_coeff * std::pow(s, tail_exponent);
    }
    const auto it = std::upper_bound(n.grid.begin(), n.grid.end(), s);
    const auto i = static_cast<std::size_t>(it - n.grid.begin());
    const double u = (s - n.grid[i - 1]) / (n.grid[i] - n.grid[i - 1]);
    return n.values[i - 1] + u * (n.values[i] - n.values[i - 1]);
}

// int_0^inf n(s) s / (s^4 + t^2) ds
double weighted_count_integral(const RadialProfile& n, double t, double tail_exponent)
{
    const double s0 = n.grid.front();
    const double R = n.grid.back();
    const double c = n.values.back() / std::pow(R, tail_exponent);
    // below the first sample n is constant; d/ds atan(s^2/t) = 2 s t / (s^4 + t^2)
    double total = n.values.front() * std::atan(s0 * s0 / t) / (2.0 * t);

    auto integrand_log = [&](double u) {
        const double s = std::exp(u);
        return profile_value(n, s, c, tail_exponent) * s * s / (s * s * s * s + t * t);
    };
    CompensatedSum acc;
    for (std::size_t i = 0; i + 1 < n.grid.size(); ++i) {
        acc.add(gauss_legendre8_composite(integrand_log, std::log(n.grid[i]), std::log(n.grid[i + 1]),
                                          kLogPanel));
    }
    if (c != 0.0) {
        const double S2 = std::max(R, 8.0 * std::sqrt(t));
        if (S2 > R) {
            acc.add(gauss_legendre8_composite(integrand_log, std::log(R), std::log(S2), kLogPanel));
        }
        // 1/(s^4 + t^2) = sum_m (-t^2)^m s^{-4-4m} for s >= S2 > sqrt(t)
        const double q = t * t / (S2 * S2 * S2 * S2);
        double coef = c * std::pow(S2, tail_exponent - 2.0);
        for (int m = 0; m < 60; ++m) {
            const double term = coef / (2.0 + 4.0 * m - tail_exponent);
            acc.add(term);
            if (std::fabs(term) < 1e-18 * std::fabs(acc.value())) {
                break;
            }
            coef *= -q;
        }
    }
    return total + acc.value();
}

void check_counting_profile(const RadialProfile& n)
{
    if (!n.non_decreasing()) {
        throw InputError("counting profiles must be non-decreasing");
    }
}

} // namespace

LimitTrace angular_density(const AtomicMeasure& m, double alpha, double beta, double p,
                           const std::vector<double>& radii)
{
    if (!(p > 0.0)) {
        throw InputError("angular density needs p > 0");
    }
    check_radii(radii);
    const Sector sector(alpha, beta);
    std::vector<Atom> inside;
    for (const Atom& a : m.atoms()) {
        if (sector.contains_closed(a.z)) {
            inside.push_back(a);
        }
    }
    const std::vector<double> counts = counting_values(AtomicMeasure(std::move(inside)), radii);
    std::vector<double> ratio(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        ratio[i] = counts[i] / std::pow(radii[i], p);
    }
    return make_trace("angular_density", radii, std::move(ratio));
}

ComplexLimitTrace regular_lindelof(const AtomicMeasure& m, int p, const std::vector<double>& radii)
{
    if (p < 1) {
        throw InputError("Lindelof order must be a positive integer");
    }
    check_radii(radii);
    std::vector<std::pair<double, complex>> terms;
    for (const Atom& a : m.atoms()) {
        const double rho = std::abs(a.z);
        if (rho >= 1.0) {
            terms.emplace_back(rho, a.w * int_power(a.z, -p));
        }
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<complex> values;
    CompensatedSum re;
    CompensatedSum im;
    std::size_t k = 0;
    for (double r : radii) {
        while (k < terms.size() && terms[k].first <= r) {
            re.add(terms[k].second.real());
            im.add(terms[k].second.imag());
            ++k;
        }
        values.emplace_back(re.value(), im.value());
    }
    return make_complex_trace("regular_lindelof", radii, std::move(values));
}

ConditionReport class_A_report(const ZeroSequence& zeros, double r0, std::vector<double> radii)
{
    ConditionReport rep =
        blaschke_report(zeros.to_measure(), RaySystem::real_axis(), r0, Limit::infinity, std::move(radii));
    rep.kind = "class_A";
    return rep;
}

CRGReport example1_limits(const ZeroSequence& zeros, const std::vector<double>& radii, double r0)
{
    check_radii(radii);
    const RaySystem axis = RaySystem::real_axis();
    const AtomicMeasure m = zeros.to_measure();
    const SweptMeasure sm = sweep(m, axis);

    CRGReport rep;
    rep.class_A = class_A_report(zeros, r0);
    if (rep.class_A->verdict == Verdict::violated) {
        rep.notes.push_back("precondition failed: the class A sums diverge");
    } else if (rep.class_A->verdict == Verdict::inconclusive) {
        rep.notes.push_back("precondition unresolved: the class A trend is inconclusive");
    }

    std::vector<double> plus;
    std::vector<double> minus;
    for (double t : radii) {
        plus.push_back(swept_distribution_on_R(sm, t) / t);
        minus.push_back(swept_distribution_on_R(sm, -t) / -t);
    }

    // a retained atom at distance x adds its signed weight to D(s) + D(-s) for
    // s >= x; log(max(s, x)) is an antiderivative of that step over s
    std::vector<double> lind(radii.size(), 0.0);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double t = radii[i];
        CompensatedSum acc;
        for (const Atom& a : sm.retained().atoms()) {
            const double x = std::abs(a.z);
            const double sign = axis.ray_of(a.z) == 1u ? -1.0 : 1.0;
            acc.add(sign * a.w * (std::log(std::max(t, x)) - std::log(std::max(1.0, x))));
        }
        lind[i] = acc.value();
    }
    if (!sm.sources().empty()) {
        const SweptMeasure sources_only(axis, AtomicMeasure(), sm.sources());
        auto g = [&](double s) {
            return sources_only.interval_mass(0, 0.0, s) - sources_only.interval_mass(1, 0.0, s);
        };
        const std::vector<double> src = log_integral_from_one(radii, g);
        for (std::size_t i = 0; i < radii.size(); ++i) {
            lind[i] += src[i];
        }
    }

    rep.limits.push_back(make_trace("density_plus", radii, std::move(plus)));
    rep.limits.push_back(make_trace("density_minus", radii, std::move(minus)));
    rep.limits.push_back(make_trace("lindelof_integral", radii, std::move(lind)));
    return rep;
}

double example2_density(const RadialProfile& nk, const RadialProfile& nk1, double t, double tail_exponent)
{
    if (!(t > 0.0)) {
        throw InputError("t must be positive");
    }
    check_counting_profile(nk);
    check_counting_profile(nk1);
    if (!(tail_exponent < 2.0)) {
        throw RegimeError("counting tails need exponent < 2 for the integral to converge");
    }
    return 2.0 * (weighted_count_integral(nk, t, tail_exponent) +
                  weighted_count_integral(nk1, t, tail_exponent));
}

CRGReport example2_limits(const std::array<RadialProfile, 4>& counts, const std::vector<double>& radii,
                          double tail_exponent)
{
    check_radii(radii);
    for (const RadialProfile& n : counts) {
        check_counting_profile(n);
    }
    if (!(tail_exponent < 2.0)) {
        throw RegimeError("counting tails need exponent < 2 for the integral to converge");
    }
    auto b_at = [&](std::size_t k, double t) {
        return example2_density(counts[k], counts[(k + 1) % 4], t, tail_exponent);
    };

    CRGReport rep;
    std::array<std::vector<double>, 4> b;
    for (double t : radii) {
        for (std::size_t k = 0; k < 4; ++k) {
            b[k].push_back(b_at(k, t));
        }
    }
    // sum_k i^{k+1} b_k / 2 = (-b1 + b3)/2 + i (b0 - b2)/2
    auto re_part = [&](double t) { return 0.5 * (b_at(3, t) - b_at(1, t)); };
    auto im_part = [&](double t) { return 0.5 * (b_at(0, t) - b_at(2, t)); };
    const std::vector<double> lre = log_integral_from_one(radii, re_part);
    const std::vector<double> lim = log_integral_from_one(radii, im_part);
    std::vector<complex> lind;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        lind.emplace_back(lre[i], lim[i]);
    }

    std::vector<double> vertical;
    std::vector<double> horizontal;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        vertical.push_back(b[0][i] + b[2][i]);
        horizontal.push_back(b[1][i] + b[3][i]);
    }
    for (std::size_t k = 0; k < 4; ++k) {
        rep.limits.push_back(make_trace("b" + std::to_string(k), radii, b[k]));
    }
    rep.limits.push_back(make_trace("indicator_sum_vertical", radii, vertical));
    rep.limits.push_back(make_trace("indicator_sum_horizontal", radii, horizontal));
    rep.lindelof = make_complex_trace("lindelof_integral", radii, std::move(lind));
    rep.sums = {{"indicator_sum_vertical", vertical.back()}, {"indicator_sum_horizontal", horizontal.back()}};
    return rep;
}

} // namespace raysweep

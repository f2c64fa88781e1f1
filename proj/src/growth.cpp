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

#include "raysweep/growth.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"
#include "raysweep/summation.hpp"

namespace raysweep {

namespace {

constexpr double kRelTol = 1e-12;

// int_u^v t^{-k} dt
double power_integral(double u, double v, double k)
{
    const double L = std::log(v / u);
    if (k == 1.0) {
        return L;
    }
    return -std::pow(u, 1.0 - k) * std::expm1((1.0 - k) * L) / (k - 1.0);
}

// int_u^v (fu + s (t - u)) t^{-k} dt for the linear interpolant through (u, fu), (v, fv)
double linear_panel_integral(double u, double v, double fu, double fv, double k)
{
    const double s = (fv - fu) / (v - u);
    return (fu - s * u) * power_integral(u, v, k) + s * power_integral(u, v, k - 1.0);
}

std::vector<double> panel_integrals(const RadialProfile& f, double shift, double k)
{
    std::vector<double> out;
    out.reserve(f.grid.size() - 1);
    for (std::size_t i = 0; i + 1 < f.grid.size(); ++i) {
        out.push_back(linear_panel_integral(f.grid[i], f.grid[i + 1], f.values[i] - shift,
                                            f.values[i + 1] - shift, k));
    }
    return out;
}

double relative_residual(double lhs, double rhs)
{
    const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
    return std::fabs(lhs - rhs) / scale;
}

void check_p(double p)
{
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw InputError("order p must be finite and non-negative");
    }
}

std::vector<double> reversed_inverse(const std::vector<double>& grid)
{
    std::vector<double> u(grid.rbegin(), grid.rend());
    for (double& x : u) {
        x = 1.0 / x;
    }
    return u;
}

} // namespace

const char* to_string(Limit at)
{
    return at == Limit::infinity ? "inf" : "zero";
}

Limit parse_limit(const std::string& s)
{
    if (s == "inf" || s == "infinity") {
        return Limit::infinity;
    }
    if (s == "0" || s == "zero") {
        return Limit::zero;
    }
    throw InputError("unknown limit '" + s + "' (expected inf or zero)");
}

OrderEstimate order_at_infinity(const RadialProfile& f, const GrowthOptions& opt)
{
    if (std::log10(f.grid.back() / f.grid.front()) < 3.0 - 1e-9) {
        throw RegimeError("order estimate needs a grid spanning at least three decades");
    }
    const double r_start = f.grid.back() * std::pow(10.0, -opt.window_decades);
    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        if (f.grid[i] >= r_start * (1.0 - kRelTol)) {
            x.push_back(std::log(f.grid[i]));
            y.push_back(f.values[i] > 1.0 ? std::log(f.values[i]) : 0.0);
        }
    }
    if (x.size() < 4) {
        throw InputError("order estimate needs at least four samples in the window");
    }
    OrderEstimate est;
    est.window_lo = std::exp(x.front());
    est.window_hi = f.grid.back();
    est.order = std::max(0.0, least_squares_slope(x, y));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) {
            est.ratio_sup = std::max(est.ratio_sup, y[i] / x[i]);
        }
    }
    const std::size_t mid = x.size() / 2;
    const std::vector<double> x1(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(mid) + 1);
    const std::vector<double> y1(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(mid) + 1);
    const std::vector<double> x2(x.begin() + static_cast<std::ptrdiff_t>(mid), x.end());
    const std::vector<double> y2(y.begin() + static_cast<std::ptrdiff_t>(mid), y.end());
    est.first_half_slope = least_squares_slope(x1, y1);
    est.second_half_slope = least_squares_slope(x2, y2);
    const double s1 = est.first_half_slope;
    const double s2 = est.second_half_slope;
    if (s2 > 1.1 * s1 + 0.05) {
        est.trend = Trend::diverging;
    } else if (std::fabs(s2 - s1) <= 0.1 * std::fabs(s1) + 0.05) {
        est.trend = Trend::converging;
    } else {
        est.trend = Trend::inconclusive;
    }
    return est;
}

TypeEstimate type_at(const RadialProfile& f, double p, Limit at, const GrowthOptions& opt)
{
    check_p(p);
    std::vector<double> ratio(f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        ratio[i] = std::max(f.values[i], 0.0) / std::pow(f.grid[i], p);
    }
    TypeEstimate est;
    const double span = std::pow(10.0, opt.window_decades);
    TrendOptions topt = opt.trend;
    topt.window_decades = opt.window_decades;
    if (at == Limit::infinity) {
        const double r_start = f.grid.back() / span;
        est.window_hi = f.grid.back();
        est.window_lo = f.grid.back();
        for (std::size_t i = 0; i < f.grid.size(); ++i) {
            if (f.grid[i] >= r_start * (1.0 - kRelTol)) {
                est.value = std::max(est.value, ratio[i]);
                est.window_lo = std::min(est.window_lo, f.grid[i]);
            }
        }
        est.trend = classify_bounded(f.grid, ratio, topt);
    } else {
        const double r_end = f.grid.front() * span;
        est.window_lo = f.grid.front();
        est.window_hi = f.grid.front();
        for (std::size_t i = 0; i < f.grid.size(); ++i) {
            if (f.grid[i] <= r_end * (1.0 + kRelTol)) {
                est.value = std::max(est.value, ratio[i]);
                est.window_hi = std::max(est.window_hi, f.grid[i]);
            }
        }
        std::vector<double> rv(ratio.rbegin(), ratio.rend());
        est.trend = classify_bounded(reversed_inverse(f.grid), rv, topt);
    }
    return est;
}

ClassIntegral convergence_class_integral(const RadialProfile& f, double p, Limit at,
                                         const GrowthOptions& opt)
{
    check_p(p);
    const std::vector<double> panels = panel_integrals(f, 0.0, p + 1.0);
    TrendOptions topt = opt.trend;
    topt.window_decades = opt.window_decades;
    ClassIntegral out;
    std::vector<double> partial(f.grid.size(), 0.0);
    if (at == Limit::infinity) {
        CompensatedSum acc;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            acc.add(panels[i]);
            partial[i + 1] = acc.value();
        }
        out.value = partial.back();
        out.trend = classify_limit(f.grid, partial, topt);
    } else {
        // partial[j] = integral from grid[n - 1 - j] to the top, indexed by 1/r increasing
        CompensatedSum acc;
        for (std::size_t i = panels.size(); i-- > 0;) {
            acc.add(panels[i]);
            partial[panels.size() - i] = acc.value();
        }
        out.value = partial.back();
        out.trend = classify_limit(reversed_inverse(f.grid), partial, topt);
    }
    return out;
}

PartsIdentity check_parts_identity(const RadialProfile& f, double p, Limit at)
{
    check_p(p);
    if (!f.non_decreasing()) {
        throw InputError("parts identity needs a non-decreasing profile");
    }
    const double a = f.grid.front();
    const double b = f.grid.back();
    const double fa = f.values.front();
    const double fb = f.values.back();

    // Stieltjes sums tagged at geometric midpoints
    CompensatedSum stieltjes_pow;
    CompensatedSum stieltjes_log;
    for (std::size_t i = 0; i + 1 < f.grid.size(); ++i) {
        const double tag = std::sqrt(f.grid[i] * f.grid[i + 1]);
        const double df = f.values[i + 1] - f.values[i];
        stieltjes_pow.add(std::pow(tag, -p) * df);
        stieltjes_log.add(std::log(tag) * df);
    }

    PartsIdentity out;
    if (at == Limit::infinity) {
        const std::vector<double> panels = panel_integrals(f, 0.0, p + 1.0);
        out.lhs = stieltjes_pow.value();
        out.rhs = fb / std::pow(b, p) - fa / std::pow(a, p) + p * pairwise_sum(panels);
    } else {
        const std::vector<double> panels = panel_integrals(f, fa, p + 1.0);
        out.lhs = pairwise_sum(panels);
        if (p > 0.0) {
            out.rhs = -(fb - fa) / (p * std::pow(b, p)) + stieltjes_pow.value() / p;
        } else {
            out.rhs = (fb - fa) * std::log(b) - stieltjes_log.value();
        }
    }
    out.residual = relative_residual(out.lhs, out.rhs);
    return out;
}

PartsIdentity check_parts_identity(const AtomicMeasure& m, double a, double b, double p,
                                   Limit at)
{
    check_p(p);
    if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
        throw InputError("parts identity needs 0 < a < b");
    }
    // jumps of the counting function of |m| inside (a, b]
    std::vector<std::pair<double, double>> jumps;
    double fa = 0.0;
    for (const Atom& atom : m.atoms()) {
        const double rho = std::abs(atom.z);
        const double w = std::fabs(atom.w);
        if (rho <= a) {
            fa += w;
        } else if (rho <= b) {
            jumps.emplace_back(rho, w);
        }
    }
    std::sort(jumps.begin(), jumps.end());

    CompensatedSum stieltjes_pow;
    CompensatedSum stieltjes_log;
    CompensatedSum integral;          // int_a^b f / t^{p+1}
    CompensatedSum integral_shifted;  // int_a^b (f - f(a)) / t^{p+1}
    double level = fa;
    double left = a;
    for (const auto& [rho, w] : jumps) {
        const double J = power_integral(left, rho, p + 1.0);
        if (rho > left) {
            integral.add(level * J);
            integral_shifted.add((level - fa) * J);
        }
        stieltjes_pow.add(w * std::pow(rho, -p));
        stieltjes_log.add(w * std::log(rho));
        level += w;
        left = rho;
    }
    if (b > left) {
        const double J = power_integral(left, b, p + 1.0);
        integral.add(level * J);
        integral_shifted.add((level - fa) * J);
    }
    const double fb = level;

    PartsIdentity out;
    if (at == Limit::infinity) {
        out.lhs = stieltjes_pow.value();
        out.rhs = fb / std::pow(b, p) - fa / std::pow(a, p) + p * integral.value();
    } else {
        out.lhs = integral_shifted.value();
        if (p > 0.0) {
            out.rhs = -(fb - fa) / (p * std::pow(b, p)) + stieltjes_pow.value() / p;
        } else {
            out.rhs = (fb - fa) * std::log(b) - stieltjes_log.value();
        }
    }
    out.residual = relative_residual(out.lhs, out.rhs);
    return out;
}

GrowthReport growth_report(const RadialProfile& f, double p, Limit at, const GrowthOptions& opt)
{
    GrowthReport rep;
    rep.p = p;
    rep.at = at;
    if (at == Limit::infinity && std::log10(f.grid.back() / f.grid.front()) >= 3.0 - 1e-9) {
        rep.order = order_at_infinity(f, opt);
    }
    rep.type = type_at(f, p, at, opt);
    rep.class_integral = convergence_class_integral(f, p, at, opt);
    return rep;
}

} // namespace raysweep

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

#include "raysweep/subharmonic.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"
#include "raysweep/summation.hpp"

namespace raysweep {

namespace {

// Below this |z/zeta| the kernel is summed as the tail of the log series,
// which keeps the value exactly 0 at z = 0.
constexpr double kSeriesRadius = 0.5;

} // namespace

double kernel_eval(complex zeta, complex z, int q)
{
    if (q < -1) {
        throw InputError("kernel genus must be >= -1");
    }
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()) || !std::isfinite(z.real()) ||
        !std::isfinite(z.imag())) {
        throw InputError("kernel arguments must be finite");
    }
    if (zeta == complex(0.0, 0.0) && q != -1) {
        throw InputError("kernel pole at the origin needs genus -1");
    }
    if (z == zeta) {
        return -INFINITY;
    }
    if (q == -1) {
        return std::log(std::abs(zeta - z));
    }
    const complex u = z / zeta;
    const double au = std::abs(u);
    if (au <= kSeriesRadius) {
        // -Re sum_{j > q} u^j / j
        complex pw = int_power(u, q + 1);
        double sum = 0.0;
        for (int j = q + 1; j < q + 200; ++j) {
            const double term = pw.real() / j;
            sum += term;
            if (std::abs(pw) / j <= 1e-18 * std::fabs(sum) || std::abs(pw) < 1e-300) {
                break;
            }
            pw *= u;
        }
        return -sum;
    }
    double val = std::log(std::abs(zeta - z)) - std::log(std::abs(zeta));
    complex pw(1.0, 0.0);
    for (int j = 1; j <= q; ++j) {
        pw *= u;
        val += pw.real() / j;
    }
    return val;
}

GenusFunction::GenusFunction(std::vector<std::pair<double, int>> steps) : steps_(std::move(steps))
{
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const auto& [t, q] = steps_[i];
        if (!(t >= 1.0) || !std::isfinite(t) || q < 0) {
            throw InputError("genus steps need thresholds >= 1 and values >= 0");
        }
        if (i > 0 && (!(t > steps_[i - 1].first) || q < steps_[i - 1].second)) {
            throw InputError("genus steps must have increasing thresholds and non-decreasing values");
        }
    }
}

GenusFunction GenusFunction::constant(int q)
{
    if (q < -1) {
        throw InputError("genus must be >= -1");
    }
    if (q == -1) {
        return GenusFunction();
    }
    return GenusFunction({{1.0, q}});
}

int GenusFunction::operator()(double t) const
{
    if (t <= 1.0) {
        return -1;
    }
    int q = -1;
    for (const auto& [thr, val] : steps_) {
        if (thr <= t) {
            q = val;
        }
    }
    return q;
}

KernelSpec auto_select_kernel(const AtomicMeasure& m, double budget, double t0, int q_max)
{
    if (!(budget > 0.0) || !(t0 > 0.0)) {
        throw InputError("kernel selection needs budget > 0 and t0 > 0");
    }
    const double cut = std::max(t0, 1.0);
    for (int q = -1; q <= q_max; ++q) {
        CompensatedSum s;
        for (const Atom& a : m.atoms()) {
            const double rho = std::abs(a.z);
            if (rho > cut) {
                s.add(std::fabs(a.w) * std::pow(t0 / rho, q + 1));
            }
        }
        if (s.value() < budget) {
            return {GenusFunction::constant(q)};
        }
    }
    throw RegimeError("no constant genus up to q_max meets the budget");
}

double potential(const AtomicMeasure& m, const KernelSpec& spec, complex z)
{
    double at_point = 0.0;
    CompensatedSum sum;
    for (const Atom& a : m.atoms()) {
        if (a.z == z) {
            at_point += a.w;
            continue;
        }
        sum.add(a.w * kernel_eval(a.z, z, spec.genus(std::abs(a.z))));
    }
    if (at_point > 0.0) {
        return -INFINITY;
    }
    if (at_point < 0.0) {
        return INFINITY;
    }
    return sum.value();
}

double poisson_extend(const BoundaryData& f, const RaySystem& system, complex z,
                      const PoissonOptions& opt)
{
    if (f.ray_count() != system.size()) {
        throw InputError("boundary data must have one entry per ray");
    }
    if (opt.panels_per_ray < 1) {
        throw InputError("panels_per_ray must be positive");
    }
    if (const auto ray = system.ray_of(z)) {
        return f.value(*ray, std::abs(z));
    }
    const std::size_t n = system.size();
    const std::size_t s = *system.sector_index_of(z);
    const std::size_t ray_a = s;
    const std::size_t ray_b = (s + 1) % n;
    const Sector sector = system.sectors()[s];
    const double g = sector.gamma();
    const complex w = sector.reduce_to_half_plane(z);
    const double x = w.real();
    const double y = w.imag();

    const double T = std::max(std::pow(f.max_radius(ray_a), g), std::pow(f.max_radius(ray_b), g));
    const double T2 = std::max(T, 32.0 * std::abs(w));

    // panel nodes in the angle theta with tau = x + y tan(theta)
    auto theta_of = [&](double tau) { return std::atan2(tau - x, y); };
    std::vector<double> nodes;
    const double th_lo = theta_of(-T2);
    const double th_hi = theta_of(T2);
    const int N = 2 * opt.panels_per_ray;
    nodes.reserve(static_cast<std::size_t>(N + 2 * opt.panels_per_ray) + 3 + f.samples(ray_a).radii.size() +
                  f.samples(ray_b).radii.size());
    for (int k = 0; k <= N; ++k) {
        nodes.push_back(th_lo + (th_hi - th_lo) * k / N);
    }
    nodes.push_back(theta_of(0.0));
    // equal angles get coarse along the data when z is close to the boundary, so
    // the sampled range of each ray also gets panels uniform in the radius
    auto add_ray_nodes = [&](std::size_t ray, double sign) {
        const std::vector<double>& radii = f.samples(ray).radii;
        const double span = radii.back() - radii.front();
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const double tau = sign * std::pow(radii[i], g);
            if (std::fabs(tau) < T2) {
                nodes.push_back(theta_of(tau));
            }
            if (i + 1 == radii.size()) {
                break;
            }
            const int cells = std::max(1, static_cast<int>(opt.panels_per_ray * (radii[i + 1] - radii[i]) / span));
            for (int c = 1; c < cells; ++c) {
                const double r = radii[i] + (radii[i + 1] - radii[i]) * c / cells;
                const double t = sign * std::pow(r, g);
                if (std::fabs(t) < T2) {
                    nodes.push_back(theta_of(t));
                }
            }
        }
    };
    add_ray_nodes(ray_a, 1.0);
    add_ray_nodes(ray_b, -1.0);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    std::vector<double> tau(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        tau[k] = x + y * std::tan(nodes[k]);
    }
    tau.front() = -T2;
    tau.back() = T2;
    // pin the node at the origin so each panel lies on one ray
    const auto origin = std::min_element(tau.begin(), tau.end(),
                                         [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    *origin = 0.0;

    const double inv_g = 1.0 / g;
    auto data_at = [&](double t, bool alpha_side) {
        return alpha_side ? f.value(ray_a, std::pow(t, inv_g)) : f.value(ray_b, std::pow(-t, inv_g));
    };

    CompensatedSum total;
    for (std::size_t k = 0; k + 1 < tau.size(); ++k) {
        const double ta = tau[k];
        const double tb = tau[k + 1];
        if (!(tb > ta)) {
            continue;
        }
        const bool alpha_side = ta >= 0.0;
        const double ga = data_at(ta, alpha_side);
        const double gb = data_at(tb, alpha_side);
        const double m0 = omega_half_plane(w, ta, tb);
        const double da = (ta - x) * (ta - x) + y * y;
        const double db = (tb - x) * (tb - x) + y * y;
        // int (t - ta) P(t) dt over the panel
        const double m1 = (x - ta) * m0 + y / (2.0 * kPi) * std::log(db / da);
        total.add(ga * m0 + (gb - ga) * m1 / (tb - ta));
    }

    // tails beyond T2: P(t) = (1/pi) sum_{n>=1} Im(w^n) t^{-n-1} for |t| > |w|
    const double c_a = f.tail_coefficient(ray_a);
    const double c_b = f.tail_coefficient(ray_b);
    if (c_a != 0.0 || c_b != 0.0) {
        const double kappa = f.tail_exponent() / g;
        const double c_scale = std::fabs(c_a) + std::fabs(c_b);
        complex wn(1.0, 0.0);
        for (int k = 1; k < 400; ++k) {
            wn *= w;
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            const double c = c_a + sign * c_b;
            const double nk = static_cast<double>(k);
            if (nk <= kappa + 1e-12) {
                const double im = wn.imag();
                if (std::fabs(c) > 1e-12 * c_scale && std::fabs(im) > 1e-12 * std::abs(wn)) {
                    throw RegimeError("boundary tail grows too fast for the sector exponent");
                }
                continue;
            }
            const double term = c * wn.imag() / kPi * std::pow(T2, kappa - nk) / (nk - kappa);
            total.add(term);
            if (std::fabs(term) < 1e-18 * (1.0 + std::fabs(total.value())) && nk > kappa + 2.0) {
                break;
            }
        }
    }
    return total.value();
}

double sweep_function_value(const AtomicMeasure& riesz, const KernelSpec& spec,
                            const RaySystem& system, const std::vector<double>& radii,
                            double tail_exponent, complex z, const PoissonOptions& opt)
{
    if (system.contains(z)) {
        return potential(riesz, spec, z);
    }
    const BoundaryData data = BoundaryData::sample(
        system, radii, [&](complex p) { return potential(riesz, spec, p); }, tail_exponent);
    return poisson_extend(data, system, z, opt);
}

FubiniSides fubini_sides(const AtomicMeasure& m, const RaySystem& system, const BoundaryData& f,
                         const PoissonOptions& opt, int cells_per_piece)
{
    FubiniSides out{};
    out.swept = sweep(m, system).integrate_against(f, cells_per_piece);
    CompensatedSum rhs;
    for (const Atom& a : m.atoms()) {
        rhs.add(a.w * poisson_extend(f, system, a.z, opt));
    }
    out.poisson = rhs.value();
    return out;
}

} // namespace raysweep

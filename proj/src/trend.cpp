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

#include "raysweep/trend.hpp"

#include <algorithm>
#include <cmath>

#include "raysweep/errors.hpp"

namespace raysweep {

namespace {

constexpr double kZeroOscillation = 1e-16;
constexpr double kRelTol = 1e-12;

} // namespace

const char* to_string(Trend t)
{
    switch (t) {
    case Trend::converging:
        return "converging";
    case Trend::diverging:
        return "diverging";
    case Trend::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        throw InputError("slope fit needs at least two points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw InputError("slope fit needs distinct abscissae");
    }
    return sxy / sxx;
}

TrendResult classify_limit(const std::vector<double>& radii, const std::vector<double>& values,
                           const TrendOptions& opt)
{
    if (radii.size() != values.size() || radii.size() < 2) {
        throw InputError("trend needs at least two samples and matching lengths");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw InputError("trend radii must be positive and strictly increasing");
        }
        if (std::isnan(values[i])) {
            throw InputError("trend values must not be NaN");
        }
    }
    TrendResult res;
    const double r_last = radii.back();
    const double r_start = r_last * std::pow(10.0, -opt.window_decades);
    const auto first = static_cast<std::size_t>(
        std::lower_bound(radii.begin(), radii.end(), r_start * (1.0 - kRelTol)) - radii.begin());
    res.window_lo = radii[first];
    res.window_hi = r_last;

    double scale = 0.0;
    for (std::size_t i = first; i < radii.size(); ++i) {
        if (std::isinf(values[i])) {
            res.trend = Trend::diverging;
            res.slope = INFINITY;
            return res;
        }
        scale = std::max(scale, std::fabs(values[i]));
    }
    const double floor = kZeroOscillation * (scale > 0.0 ? scale : 1.0);

    std::vector<double> lx;
    std::vector<double> ly;
    bool any_positive = false;
    for (std::size_t i = first; i < radii.size(); ++i) {
        const double hi = radii[i] * opt.sub_ratio;
        if (hi > r_last * (1.0 + kRelTol)) {
            break;
        }
        double vmin = values[i];
        double vmax = values[i];
        for (std::size_t j = i + 1; j < radii.size() && radii[j] <= hi * (1.0 + kRelTol); ++j) {
            vmin = std::min(vmin, values[j]);
            vmax = std::max(vmax, values[j]);
        }
        const double osc = vmax - vmin;
        res.last_oscillation = osc;
        any_positive = any_positive || osc > floor;
        lx.push_back(std::log(radii[i]));
        ly.push_back(std::log(std::max(osc, floor)));
    }
    if (lx.size() < 3) {
        res.trend = Trend::inconclusive;
        return res;
    }
    if (!any_positive) {
        res.trend = Trend::converging;
        res.slope = -INFINITY;
        return res;
    }
    res.slope = least_squares_slope(lx, ly);
    if (res.slope <= opt.converging_slope) {
        res.trend = Trend::converging;
    } else if (res.slope >= opt.diverging_slope) {
        res.trend = Trend::diverging;
    } else {
        res.trend = Trend::inconclusive;
    }
    return res;
}

TrendResult classify_bounded(const std::vector<double>& radii, const std::vector<double>& values,
                             const TrendOptions& opt)
{
    std::vector<double> running(values.size());
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        m = std::max(m, std::fabs(values[i]));
        running[i] = m;
    }
    return classify_limit(radii, running, opt);
}

} // namespace raysweep

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

#include <algorithm>
#include <array>
#include <cmath>

namespace raysweep {

/// 8-point Gauss-Legendre rule on [a, b].
template <class F>
double gauss_legendre8(F&& f, double a, double b)
{
    static constexpr std::array<double, 4> x = {0.18343464249564978, 0.525532409916329,
                                                0.7966664774136267, 0.9602898564975362};
    static constexpr std::array<double, 4> w = {0.36268378337836177, 0.31370664587788705,
                                                0.22238103445337434, 0.10122853629037669};
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    }
    return s * h;
}

/// Composite 8-point rule on [a, b] with equal subpanels no wider than max_width.
template <class F>
double gauss_legendre8_composite(F&& f, double a, double b, double max_width)
{
    const double len = std::fabs(b - a);
    const int n = std::max(1, static_cast<int>(std::ceil(len / max_width)));
    const double h = (b - a) / n;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        s += gauss_legendre8(f, a + h * k, k + 1 == n ? b : a + h * (k + 1));
    }
    return s;
}

} // namespace raysweep

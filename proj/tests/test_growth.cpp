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

#include <doctest.h>

#include "raysweep/errors.hpp"
#include "raysweep/growth.hpp"
#include "raysweep/trend.hpp"

using namespace raysweep;

namespace {

std::vector<double> map_grid(const std::vector<double>& r, double (*f)(double))
{
    std::vector<double> v;
    for (double x : r) {
        v.push_back(f(x));
    }
    return v;
}

} // namespace

TEST_CASE("trend classifier on synthetic traces")
{
    const auto r = geometric_grid(1.0, 1e6, 1.1);
    CHECK(classify_limit(r, map_grid(r, [](double x) { return 1.0 - 1.0 / x; })).trend == Trend::converging);
    CHECK(classify_limit(r, map_grid(r, [](double x) { return 2.0 - std::pow(x, -0.5); })).trend ==
          Trend::converging);
    CHECK(classify_limit(r, map_grid(r, [](double x) { return std::log(x); })).trend == Trend::diverging);
    CHECK(classify_limit(r, map_grid(r, [](double x) { return x; })).trend == Trend::diverging);
    CHECK(classify_limit(r, map_grid(r, [](double x) { return std::sin(std::log(x)); })).trend ==
          Trend::diverging);
    // a decay too slow to separate from a plateau
    CHECK(classify_limit(r, map_grid(r, [](double x) { return -std::pow(x, -0.15); })).trend ==
          Trend::inconclusive);
    CHECK(classify_limit(r, std::vector<double>(r.size(), 3.0)).trend == Trend::converging);
}

TEST_CASE("boundedness classifier")
{
    const auto r = geometric_grid(1.0, 1e6, 1.1);
    CHECK(classify_bounded(r, map_grid(r, [](double x) { return std::sin(std::log(x)); })).trend ==
          Trend::converging);
    CHECK(classify_bounded(r, map_grid(r, [](double x) { return std::sqrt(x); })).trend == Trend::diverging);
}

TEST_CASE("trend needs enough points")
{
    const std::vector<double> r = {1.0, 2.0};
    CHECK(classify_limit(r, {1.0, 2.0}).trend == Trend::inconclusive);
    CHECK_THROWS_AS(classify_limit({1.0, 2.0}, {1.0}), InputError);
}

TEST_CASE("least squares slope")
{
    CHECK(least_squares_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(2.0));
}

TEST_CASE("order and type of power profiles")
{
    const auto r = geometric_grid(1.0, 1e8, 1.2);
    const RadialProfile f = RadialProfile::sample(r, [](double t) { return 3.0 * t * t; });
    const OrderEstimate o = order_at_infinity(f);
    CHECK(o.order == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(o.trend == Trend::converging);
    const TypeEstimate ty = type_at(f, 2.0, Limit::infinity);
    CHECK(ty.value == doctest::Approx(3.0));
    CHECK(ty.finite());
    // order 2 is of infinite type at order 1
    CHECK_FALSE(type_at(f, 1.0, Limit::infinity).finite());
    CHECK_THROWS_AS(order_at_infinity(RadialProfile::sample(geometric_grid(1.0, 10.0, 1.2),
                                                            [](double t) { return t; })),
                    RegimeError);
}

TEST_CASE("type at zero")
{
    const auto r = geometric_grid(1e-8, 1.0, 1.2);
    const RadialProfile f = RadialProfile::sample(r, [](double t) { return 5.0 * t; });
    const TypeEstimate ty = type_at(f, 1.0, Limit::zero);
    CHECK(ty.value == doctest::Approx(5.0));
    CHECK(ty.finite());
}

TEST_CASE("convergence class integral")
{
    const auto r = geometric_grid(1.0, 1e8, 1.2);
    const RadialProfile lin = RadialProfile::sample(r, [](double t) { return t; });
    const ClassIntegral c2 = convergence_class_integral(lin, 2.0, Limit::infinity);
    CHECK(c2.value == doctest::Approx(1.0 - 1e-8).epsilon(1e-9));
    CHECK(c2.trend.trend == Trend::converging);
    CHECK(convergence_class_integral(lin, 1.0, Limit::infinity).trend.trend == Trend::diverging);
    CHECK(convergence_class_integral(lin, 1.0, Limit::infinity).value == doctest::Approx(std::log(1e8)));
}

TEST_CASE("parts identities on smooth profiles")
{
    const auto hi = geometric_grid(1.0, 1e3, 1.001);
    const auto lo = geometric_grid(1e-3, 1.0, 1.001);
    for (double p : {0.0, 0.5, 1.0, 2.0}) {
        CAPTURE(p);
        const RadialProfile sq_hi = RadialProfile::sample(hi, [](double t) { return t * t; });
        const RadialProfile sq_lo = RadialProfile::sample(lo, [](double t) { return t * t; });
        CHECK(check_parts_identity(sq_hi, p, Limit::infinity).residual < 1e-5);
        CHECK(check_parts_identity(sq_lo, p, Limit::zero).residual < 1e-5);
    }
}

TEST_CASE("parts identities are exact for atomic counting functions")
{
    std::vector<Atom> atoms;
    for (int k = 1; k <= 50; ++k) {
        atoms.push_back({complex(0, k), 1.0});
    }
    const AtomicMeasure m(atoms);
    for (double p : {0.0, 1.0, 2.0}) {
        CHECK(check_parts_identity(m, 0.5, 40.5, p, Limit::infinity).residual < 1e-12);
        CHECK(check_parts_identity(m, 0.5, 40.5, p, Limit::zero).residual < 1e-12);
    }
}

TEST_CASE("growth report bundles the estimates")
{
    const auto r = geometric_grid(1.0, 1e6, 1.2);
    const RadialProfile f = RadialProfile::sample(r, [](double t) { return t; });
    const GrowthReport rep = growth_report(f, 1.0, Limit::infinity);
    REQUIRE(rep.order.has_value());
    CHECK(rep.order->order == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.type.finite());
    CHECK(parse_limit("zero") == Limit::zero);
    CHECK_THROWS_AS(parse_limit("nowhere"), InputError);
}

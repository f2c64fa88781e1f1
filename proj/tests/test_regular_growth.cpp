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
#include "raysweep/regular_growth.hpp"

using namespace raysweep;

namespace {

const LimitTrace& trace(const CRGReport& r, const std::string& name)
{
    for (const LimitTrace& t : r.limits) {
        if (t.name == name) {
            return t;
        }
    }
    FAIL("missing trace " << name);
    throw std::logic_error("unreachable");
}

RadialProfile identity_profile()
{
    return RadialProfile::sample(geometric_grid(1e-3, 1e4, 1.01), [](double s) { return s; });
}

} // namespace

TEST_CASE("angular density of zeros on a line")
{
    std::vector<Atom> atoms;
    for (int k = 1; k <= 2000; ++k) {
        atoms.push_back({complex(0, k), 1.0});
    }
    const AtomicMeasure m(atoms);
    const auto radii = geometric_grid(10.0, 2000.0, 1.1);
    // one zero per unit length: n(r) / r -> 1 in any closed sector holding the axis
    const LimitTrace d = angular_density(m, kPi / 4, 3 * kPi / 4, 1.0, radii);
    CHECK(d.estimate == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(d.trend.trend == Trend::converging);
    CHECK(angular_density(m, -kPi / 4, kPi / 4, 1.0, radii).estimate == 0.0);
}

TEST_CASE("real-axis zeros at the integers")
{
    ZeroSequence zeros;
    for (int k = 1; k <= 10000; ++k) {
        zeros.points.emplace_back(k, 0);
        zeros.points.emplace_back(-k, 0);
    }
    const CRGReport rep = example1_limits(zeros, geometric_grid(1.0, 1e4, 1.2));
    CHECK(trace(rep, "density_plus").estimate == doctest::Approx(1.0).epsilon(0.02));
    CHECK(trace(rep, "density_minus").estimate == doctest::Approx(1.0).epsilon(0.02));
    CHECK(trace(rep, "lindelof_integral").trend.trend == Trend::converging);
    REQUIRE(rep.class_A.has_value());
    CHECK(rep.class_A->verdict == Verdict::satisfied);
}

TEST_CASE("one-sided real-axis zeros keep diverging Lindelof sums")
{
    ZeroSequence zeros;
    for (int k = 1; k <= 10000; ++k) {
        zeros.points.emplace_back(k, 0);
    }
    const CRGReport rep = example1_limits(zeros, geometric_grid(1.0, 1e4, 1.2));
    CHECK(trace(rep, "density_minus").estimate == 0.0);
    CHECK(trace(rep, "lindelof_integral").trend.trend == Trend::diverging);
}

TEST_CASE("class A flags the harmonic series")
{
    ZeroSequence vertical;
    for (int k = 1; k <= 10000; ++k) {
        vertical.points.emplace_back(0, k);
    }
    const ConditionReport r = class_A_report(vertical);
    CHECK(r.kind == "class_A");
    CHECK(r.trend.trend == Trend::diverging);
    CHECK(r.verdict == Verdict::violated);
}

TEST_CASE("half-axis balayage density has a closed form for linear counting functions")
{
    const RadialProfile n = identity_profile();
    for (double t : {0.5, 1.0, 10.0, 100.0}) {
        CHECK(example2_density(n, n, t, 1.0) == doctest::Approx(std::sqrt(2.0) * kPi / std::sqrt(t)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(example2_density(n, n, 1.0, 2.0), RegimeError);
    const RadialProfile down({1.0, 2.0}, {2.0, 1.0});
    CHECK_THROWS_AS(example2_density(down, n, 1.0, 1.0), InputError);
}

TEST_CASE("half-axis report for symmetric counting functions")
{
    const RadialProfile n = identity_profile();
    const CRGReport rep = example2_limits({n, n, n, n}, geometric_grid(1.0, 100.0, 1.5));
    for (const char* name : {"b0", "b1", "b2", "b3"}) {
        CAPTURE(name);
        CHECK(trace(rep, name).estimate == doctest::Approx(std::sqrt(2.0) * kPi / 10.0).epsilon(1e-5));
        CHECK(trace(rep, name).trend.trend == Trend::converging);
    }
    REQUIRE(rep.lindelof.has_value());
    // symmetric zeros: the Lindelof integrand vanishes
    CHECK(std::abs(rep.lindelof->estimate) < 1e-8);
}

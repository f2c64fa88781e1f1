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

#include "generators.hpp"
#include "raysweep/errors.hpp"
#include "raysweep/ray_system.hpp"

using namespace raysweep;

TEST_CASE("ray system normalizes and sorts directions")
{
    const RaySystem s({kPi, -kPi / 2, 0.0});
    REQUIRE(s.size() == 3);
    CHECK(s.directions()[0] == doctest::Approx(0.0));
    CHECK(s.directions()[1] == doctest::Approx(kPi));
    CHECK(s.directions()[2] == doctest::Approx(1.5 * kPi));
    const auto sec = s.sectors();
    REQUIRE(sec.size() == 3);
    CHECK(sec[2].alpha() == doctest::Approx(1.5 * kPi));
    CHECK(sec[2].beta() == doctest::Approx(2.0 * kPi));
}

TEST_CASE("ray system rejects bad input")
{
    CHECK_THROWS_AS(RaySystem({}), InputError);
    CHECK_THROWS_AS(RaySystem({0.0, 2.0 * kPi}), InputError);
    CHECK_THROWS_AS(RaySystem({0.0, NAN}), InputError);
    CHECK_THROWS_AS(Sector(1.0, 1.0), InputError);
    CHECK_THROWS_AS(RaySystem::equiangular(0), InputError);
}

TEST_CASE("a single ray leaves one sector of aperture 2 pi")
{
    const RaySystem s({0.5});
    const auto sec = s.sectors();
    REQUIRE(sec.size() == 1);
    CHECK(sec[0].aperture() == doctest::Approx(2.0 * kPi));
    CHECK(sec[0].gamma() == doctest::Approx(0.5));
    // the slit plane maps onto the upper half-plane
    const complex w = sec[0].reduce_to_half_plane(std::polar(4.0, 0.5 + kPi));
    CHECK(w.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w.imag() == doctest::Approx(2.0));
}

TEST_CASE("membership and sector lookup")
{
    const RaySystem s = RaySystem::equiangular(4);
    CHECK(s.ray_of(complex(3.0, 0.0)) == 0u);
    CHECK(s.ray_of(complex(0.0, -2.0)) == 3u);
    CHECK(s.ray_of(complex(0.0, 0.0)) == 0u);
    CHECK_FALSE(s.contains(complex(1.0, 1.0)));
    CHECK(s.sector_index_of(complex(-1.0, 1.0)) == 1u);
    CHECK_FALSE(s.sector_index_of(complex(-1.0, 0.0)).has_value());
    CHECK(s.ray_index(kPi / 2) == 1u);
}

TEST_CASE("reduction sends the sector boundary to the real axis")
{
    const Sector q(kPi / 6, kPi / 2);
    CHECK(q.gamma() == doctest::Approx(3.0));
    const complex a = q.reduce_to_half_plane(q.boundary_point(Side::alpha, 2.0));
    const complex b = q.reduce_to_half_plane(q.boundary_point(Side::beta, 2.0));
    CHECK(a.real() == doctest::Approx(8.0));
    CHECK(std::fabs(a.imag()) < 1e-12);
    CHECK(b.real() == doctest::Approx(-8.0));
    CHECK(q.reduced_boundary_coordinate(Side::beta, 2.0) == doctest::Approx(-8.0));
    CHECK_THROWS_AS(q.reduce_to_half_plane(complex(-1.0, 0.0)), InputError);
}

TEST_CASE("property: interior points reduce into the open upper half-plane")
{
    gen::Source src(101);
    for (int k = 0; k < 2000; ++k) {
        const RaySystem s = src.ray_system();
        const complex z = src.point();
        const auto idx = s.sector_index_of(z);
        if (!idx) {
            continue;
        }
        const Sector sec = s.sectors()[*idx];
        CHECK(sec.contains_open(z));
        const complex w = sec.reduce_to_half_plane(z);
        CHECK(w.imag() > 0.0);
        // modulus follows the power law
        CHECK(std::abs(w) == doctest::Approx(std::pow(std::abs(z), sec.gamma())).epsilon(1e-10));
    }
}

TEST_CASE("int_power matches repeated multiplication")
{
    const complex z(0.7, -1.3);
    complex p(1.0, 0.0);
    for (int n = 0; n <= 12; ++n) {
        const complex q = int_power(z, n);
        CHECK(std::abs(q - p) <= 1e-12 * std::abs(p));
        p *= z;
    }
}

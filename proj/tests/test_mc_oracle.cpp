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
#include "raysweep/mc_oracle.hpp"

using namespace raysweep;

// Known-answer vectors of the Philox4x32-10 reference implementation.
TEST_CASE("Philox known answers")
{
    using A4 = std::array<std::uint32_t, 4>;
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct")
{
    PhiloxStream a(7, 3);
    PhiloxStream b(7, 3);
    PhiloxStream c(7, 4);
    int same = 0;
    for (int k = 0; k < 100; ++k) {
        const std::uint64_t x = a.next_u64();
        CHECK(x == b.next_u64());
        same += x == c.next_u64() ? 1 : 0;
    }
    CHECK(same == 0);
    PhiloxStream u(1, 0);
    double mean = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double x = u.uniform();
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
        mean += x;
    }
    CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("half-plane estimates agree with the closed form")
{
    WalkConfig cfg;
    cfg.n_walks = 200000;
    cfg.seed = 11;
    const complex z(0.3, 0.8);
    const OracleEstimate e = estimate_omega(z, HalfPlaneInterval{-1.0, 0.5}, cfg);
    CHECK(e.walks == cfg.n_walks);
    CHECK(e.censored == 0);
    CHECK(std::fabs(e.mean - omega_half_plane(z, -1.0, 0.5)) < 4 * e.std_err);
}

TEST_CASE("sector walks agree with the closed form")
{
    WalkConfig cfg;
    cfg.n_walks = 100000;
    cfg.seed = 12;
    const Sector s(0.2, 1.9);
    const complex z = std::polar(1.3, 1.0);
    const IntervalOnRay iv{s, Side::beta, 0.5, 2.0};
    const OracleEstimate e = estimate_omega(z, iv, cfg);
    CHECK(std::fabs(e.mean - omega_sector_interval(z, iv)) < 4 * e.std_err);
    const OracleEstimate d = estimate_omega(z, SectorDiskTarget{s, 1.0, DiskPart::outside}, cfg);
    CHECK(std::fabs(d.mean - omega_sector_disk(z, s, 1.0, DiskPart::outside)) < 4 * d.std_err);
}

TEST_CASE("results do not depend on the thread count")
{
    WalkConfig cfg;
    cfg.n_walks = 20000;
    cfg.seed = 99;
    const Sector s(0.0, 2.5);
    const complex z = std::polar(1.0, 0.7);
    const IntervalOnRay iv{s, Side::alpha, 0.0, 1.0};
    cfg.threads = 1;
    const OracleEstimate one = estimate_omega(z, iv, cfg);
    cfg.threads = 3;
    const OracleEstimate three = estimate_omega(z, iv, cfg);
    CHECK(one.hits == three.hits);
    CHECK(one.mean == three.mean);
}

TEST_CASE("step cap censors walks")
{
    WalkConfig cfg;
    cfg.n_walks = 1000;
    cfg.max_steps = 1;
    cfg.boundary_eps = 1e-12;
    const Sector s(0.0, 1.0);
    const OracleEstimate e = estimate_omega(std::polar(1.0, 0.5), IntervalOnRay{s, Side::alpha, 0.0, 1.0}, cfg);
    CHECK(e.censored > 0);
    CHECK(e.walks + e.censored == 1000);
}

TEST_CASE("oracle input validation")
{
    WalkConfig cfg;
    cfg.n_walks = 10;
    CHECK_THROWS_AS(estimate_omega(complex(0, -1), HalfPlaneInterval{0, 1}, cfg), InputError);
    CHECK_THROWS_AS(estimate_omega(complex(0, 1), HalfPlaneInterval{1, 0}, cfg), InputError);
    cfg.n_walks = 0;
    CHECK_THROWS_AS(estimate_omega(complex(0, 1), HalfPlaneInterval{0, 1}, cfg), InputError);
}

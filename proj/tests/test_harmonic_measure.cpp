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
#include "raysweep/harmonic_measure.hpp"

using namespace raysweep;

// Reference values from adaptive quadrature of the Poisson kernel at 30 digits.
TEST_CASE("half-plane omega against quadrature oracles")
{
    struct Case {
        double x, y, t1, t2, omega;
    };
    const Case cases[] = {
        {0.0, 1.0, -1.0, 1.0, 0.5},
        {0.3, 0.2, -1.0, 2.0, 0.91413333849826583},
        {-2.0, 1.0, 0.0, 1.0, 0.045167235300866548},
        {5.0, 0.01, 4.9, 5.2, 0.95237223131326995},
        {0.0, 10.0, -1.0, 1.0, 0.063451034861107139},
        {1.0, 1.0, 1.0, 3.0, 0.35241638234956673},
        {0.5, 3.0, -10.0, -2.0, 0.19027240559339973},
    };
    for (const Case& c : cases) {
        CAPTURE(c.x);
        CAPTURE(c.t1);
        CHECK(omega_half_plane(complex(c.x, c.y), c.t1, c.t2) == doctest::Approx(c.omega).epsilon(1e-13));
    }
}

TEST_CASE("regime classification and the three closed forms")
{
    CHECK(classify_half_plane(complex(0, 1), -1, 1) == HalfPlaneRegime::on_semicircle);
    CHECK(classify_half_plane(complex(0, 0.5), -1, 1) == HalfPlaneRegime::inside_semicircle);
    CHECK(classify_half_plane(complex(0, 2), -1, 1) == HalfPlaneRegime::outside_semicircle);
    CHECK(classify_half_plane(complex(0.5, 0), -1, 1) == HalfPlaneRegime::boundary);
    // inside the semicircle the value exceeds 1/2 (second branch of the arctangent)
    CHECK(omega_half_plane(complex(0, 0.5), -1, 1) == doctest::Approx(1.0 - std::atan(4.0 / 3.0) / kPi));
    // outside it is below 1/2 (principal branch)
    CHECK(omega_half_plane(complex(0, 2), -1, 1) == doctest::Approx(std::atan(4.0 / 3.0) / kPi));
}

TEST_CASE("boundary points use open intervals")
{
    CHECK(omega_half_plane(complex(0.0, 0.0), -1, 1) == 1.0);
    CHECK(omega_half_plane(complex(-1.0, 0.0), -1, 1) == 0.0);
    CHECK(omega_half_plane(complex(1.0, 0.0), -1, 1) == 0.0);
    CHECK(omega_half_plane(complex(3.0, 0.0), -1, 1) == 0.0);
    CHECK(omega_right_of(complex(2.0, 0.0), 1.0) == 1.0);
    CHECK(omega_left_of(complex(2.0, 0.0), 1.0) == 0.0);
}

TEST_CASE("invalid input")
{
    CHECK_THROWS_AS(omega_half_plane(complex(0, -1), -1, 1), InputError);
    CHECK_THROWS_AS(omega_half_plane(complex(0, 1), 1, -1), InputError);
    CHECK_THROWS_AS(omega_half_plane(complex(NAN, 1), -1, 1), InputError);
}

TEST_CASE("apex values of semicircles")
{
    for (double b : {1.5, 2.0, 3.0, 10.0}) {
        for (double r : {0.5, 1.0, 2.0}) {
            const double expect = std::atan2(2 * b, b * b - 1) / kPi;
            CHECK(std::fabs(omega_half_plane(complex(0, b * r), -r, r) - expect) < 1e-14);
        }
    }
}

TEST_CASE("property: additivity, complement and monotonicity")
{
    gen::Source src(202);
    for (int k = 0; k < 5000; ++k) {
        const complex z = src.upper_point(0.01, 100.0);
        double t[3] = {src.uniform(-50, 50), src.uniform(-50, 50), src.uniform(-50, 50)};
        std::sort(t, t + 3);
        const double a = omega_half_plane(z, t[0], t[1]);
        const double b = omega_half_plane(z, t[1], t[2]);
        const double c = omega_half_plane(z, t[0], t[2]);
        CHECK(std::fabs(a + b - c) < 1e-12);
        CHECK(c >= a);
        CHECK(a >= 0.0);
        CHECK(c <= 1.0);
        CHECK(std::fabs(omega_left_of(z, t[1]) + omega_right_of(z, t[1]) - 1.0) < 1e-12);
        CHECK(std::fabs(omega_left_of(z, t[0]) + a + omega_right_of(z, t[1]) - 1.0) < 1e-12);
    }
}

TEST_CASE("property: continuity across the semicircle")
{
    gen::Source src(203);
    for (int k = 0; k < 2000; ++k) {
        const auto [t1, t2] = src.ordered(-10, 10);
        if (t2 - t1 < 1e-3) {
            continue;
        }
        const double c = 0.5 * (t1 + t2);
        const double r = 0.5 * (t2 - t1);
        const double th = src.uniform(0.01, kPi - 0.01);
        const double in = omega_half_plane(c + std::polar(r * (1 - 1e-6), th), t1, t2);
        const double on = omega_half_plane(c + std::polar(r, th), t1, t2);
        const double out = omega_half_plane(c + std::polar(r * (1 + 1e-6), th), t1, t2);
        // the three closed forms join smoothly: first differences are O(band),
        // the symmetric second difference vanishes to O(band^2)
        CHECK(std::fabs(on - 0.5) < 1e-9);
        CHECK(std::fabs(in - on) < 1e-6 / std::sin(th));
        CHECK(std::fabs(0.5 * (in + out) - on) < 1e-9);
        CHECK(in >= on - 1e-15);
        CHECK(out <= on + 1e-15);
    }
}

TEST_CASE("property: harmonic in z (mean value on small circles)")
{
    gen::Source src(204);
    for (int k = 0; k < 300; ++k) {
        const complex c = src.upper_point(0.1, 10.0);
        const auto [t1, t2] = src.ordered(-5, 5);
        const double rad = 0.5 * c.imag();
        constexpr int n = 256;
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            sum += omega_half_plane(c + std::polar(rad, 2 * kPi * j / n), t1, t2);
        }
        CHECK(std::fabs(sum / n - omega_half_plane(c, t1, t2)) < 1e-10);
    }
}

// Quarter plane oracle from the method of images, integrated at 30 digits.
TEST_CASE("sector omega against quarter-plane oracles")
{
    const Sector q(0.0, kPi / 2);
    CHECK(omega_sector_interval(complex(1, 1), {q, Side::alpha, 0.0, 1.0}) ==
          doctest::Approx(0.14758361765043327).epsilon(1e-13));
    CHECK(omega_sector_interval(complex(0.5, 2), {q, Side::alpha, 1.0, 3.0}) ==
          doctest::Approx(0.077326262337609310).epsilon(1e-13));
    // reflection symmetry of the quarter plane swaps the sides
    CHECK(omega_sector_interval(complex(2, 0.5), {q, Side::beta, 1.0, 3.0}) ==
          doctest::Approx(0.077326262337609310).epsilon(1e-13));
}

TEST_CASE("sector omega: infinite ends, boundary points, disks")
{
    const Sector s(0.3, 2.0);
    const complex z = std::polar(1.7, 1.1);
    const double whole_alpha = omega_sector_interval(z, {s, Side::alpha, 0.0, INFINITY});
    const double whole_beta = omega_sector_interval(z, {s, Side::beta, 0.0, INFINITY});
    CHECK(whole_alpha + whole_beta == doctest::Approx(1.0).epsilon(1e-13));
    const double in = omega_sector_disk(z, s, 2.5, DiskPart::inside);
    const double out = omega_sector_disk(z, s, 2.5, DiskPart::outside);
    CHECK(in + out == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(in == doctest::Approx(omega_sector_interval(z, {s, Side::alpha, 0.0, 2.5}) +
                                omega_sector_interval(z, {s, Side::beta, 0.0, 2.5}))
                    .epsilon(1e-13));
    // boundary point: Dirac mass of the open radial interval
    CHECK(omega_sector_interval(s.boundary_point(Side::alpha, 1.0), {s, Side::alpha, 0.5, 2.0}) == 1.0);
    CHECK(omega_sector_interval(s.boundary_point(Side::alpha, 2.0), {s, Side::alpha, 0.5, 2.0}) == 0.0);
    CHECK(omega_sector_interval(s.boundary_point(Side::beta, 1.0), {s, Side::alpha, 0.5, 2.0}) == 0.0);
}

TEST_CASE("property: sector density integrates to interval measure")
{
    gen::Source src(205);
    for (int k = 0; k < 100; ++k) {
        const double alpha = src.angle();
        const Sector s(alpha, alpha + src.uniform(0.3, 2 * kPi));
        const complex z = std::polar(src.log_uniform(0.1, 10), s.alpha() + s.aperture() * src.uniform(0.05, 0.95));
        const auto [r1, r2] = src.ordered(0.1, 5.0);
        const Side side = k % 2 ? Side::alpha : Side::beta;
        // composite Simpson in the radius
        constexpr int n = 2000;
        const double h = (r2 - r1) / n;
        double sum = omega_sector_density(z, s, side, r1) + omega_sector_density(z, s, side, r2);
        for (int j = 1; j < n; ++j) {
            sum += (j % 2 ? 4.0 : 2.0) * omega_sector_density(z, s, side, r1 + j * h);
        }
        CHECK(sum * h / 3 == doctest::Approx(omega_sector_interval(z, {s, side, r1, r2})).epsilon(1e-6));
    }
}

TEST_CASE("estimates refuse points outside their regime")
{
    CHECK_THROWS_AS(upper_bound_far(complex(0, 0.5), -1, 1, 0.5), RegimeError);
    CHECK_THROWS_AS(upper_bound_near(complex(0, 5), 1, 2, 0.5), RegimeError);
    CHECK_THROWS_AS(upper_bound_near(complex(0, 0.1), -1, 2, 0.5), RegimeError);
    CHECK_THROWS_AS(lower_bound_outside_disk(complex(0, 0.5), -1, 1, 2.0), RegimeError);
    CHECK_THROWS_AS(upper_bound_opposite_quadrant(complex(1, 1), 1, 2), RegimeError);
    CHECK_THROWS_AS(upper_bound_cone(complex(1.4, 0.01), 1, 2), RegimeError);
    // cone lower estimate near the origin: omega ~ 1e-3 while the formula gives ~0.2
    const complex near(-0.0416742, 0.00533428);
    CHECK(omega_half_plane(near, 1.66548, 80.0234) < 1e-3);
    CHECK_THROWS_AS(lower_bound_cone(near, 1.66548, 80.0234), RegimeError);
    CHECK_THROWS_AS(upper_bound_far(complex(0, 5), -1, 1, 1.5), RegimeError);
}

TEST_CASE("property: estimates bracket omega in their regimes")
{
    gen::Source src(206);
    int checks = 0;
    for (int k = 0; k < 20000; ++k) {
        const complex z = src.upper_point(1e-3, 1e3);
        const auto [t1, t2] = src.ordered(-20, 20);
        const double a = src.uniform(0.05, 0.95);
        const double w = omega_half_plane(z, t1, t2);
        auto upper = [&](auto f) {
            double bound = 0.0;
            try {
                bound = f();
            } catch (const RegimeError&) {
                return;
            }
            CHECK(w <= bound + 1e-14);
            ++checks;
        };
        auto lower = [&](auto f) {
            double bound = 0.0;
            try {
                bound = f();
            } catch (const RegimeError&) {
                return;
            }
            CHECK(w >= bound - 1e-14);
            ++checks;
        };
        upper([&] { return upper_bound_far(z, t1, t2, a); });
        upper([&] { return upper_bound_near(z, t1, t2, a); });
        lower([&] { return lower_bound_far(z, t1, t2, a); });
        lower([&] { return lower_bound_outside_disk(z, t1, t2, 1.0 + a); });
        lower([&] { return lower_bound_outside_disk_coarse(z, t1, t2, 1.0 + a); });
        upper([&] { return upper_bound_opposite_quadrant(z, t1, t2); });
        upper([&] { return upper_bound_cone(z, t1, t2); });
        upper([&] { return upper_bound_cone_a(z, t1, t2, a); });
        lower([&] { return lower_bound_cone(z, t1, t2); });
        const DiskBounds d = sharp_disk_bounds(z, 0.5 * (t1 + t2), 0.5 * (t2 - t1));
        CHECK(w <= d.upper + 1e-14);
        if (d.lower) {
            CHECK(w >= *d.lower - 1e-14);
        }
    }
    CHECK(checks > 20000);
}

TEST_CASE("sharp disk bounds are attained at the apex")
{
    const DiskBounds on = sharp_disk_bounds(complex(0, 1), 0.0, 1.0);
    CHECK(on.upper == 0.5);
    CHECK_FALSE(on.lower.has_value());
    const DiskBounds out = sharp_disk_bounds(complex(0, 3), 0.0, 1.0);
    CHECK(out.upper == doctest::Approx(omega_half_plane(complex(0, 3), -1, 1)).epsilon(1e-14));
    const DiskBounds in = sharp_disk_bounds(complex(0, 0.25), 0.0, 1.0);
    REQUIRE(in.lower.has_value());
    CHECK(*in.lower == doctest::Approx(omega_half_plane(complex(0, 0.25), -1, 1)).epsilon(1e-14));
}

TEST_CASE("uncovered region is where no upper estimate applies")
{
    gen::Source src(207);
    for (int k = 0; k < 3000; ++k) {
        const complex z = src.upper_point(1e-2, 1e2);
        const auto [t1, t2] = src.ordered(0.1, 10);
        const double a = src.uniform(0.1, 0.9);
        if (!in_uncovered_region(z, t1, t2, a)) {
            continue;
        }
        CHECK_THROWS_AS(upper_bound_far(z, t1, t2, a), RegimeError);
        CHECK_THROWS_AS(upper_bound_near(z, t1, t2, a), RegimeError);
        CHECK_THROWS_AS(upper_bound_cone_a(z, t1, t2, a), RegimeError);
    }
}

TEST_CASE("property: sector disk estimates")
{
    gen::Source src(208);
    for (int k = 0; k < 3000; ++k) {
        const double alpha = src.angle();
        const Sector s(alpha, alpha + src.uniform(0.2, 2 * kPi));
        const double a = src.uniform(0.05, 0.95);
        const double r = src.log_uniform(0.01, 100);
        const double th = s.alpha() + s.aperture() * src.uniform(0.01, 0.99);
        const complex far = std::polar(r / a * src.log_uniform(1, 100), th);
        const complex near = std::polar(a * r * src.uniform(0.001, 1), th);
        CHECK(omega_sector_disk(far, s, r, DiskPart::inside) <= sector_disk_inside_bound(far, s, r, a) + 1e-14);
        CHECK(omega_sector_disk(near, s, r, DiskPart::outside) <= sector_disk_outside_bound(near, s, r, a) + 1e-14);
    }
    const Sector s(0.0, 1.0);
    CHECK_THROWS_AS(sector_disk_inside_bound(std::polar(1.0, 0.5), s, 2.0, 0.5), RegimeError);
}

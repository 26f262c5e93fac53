#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cubicrev/rational_points.hpp"
#include "cubicrev/rng.hpp"
#include "cubicrev/surface.hpp"

using namespace cubicrev;
using R = BigRational;

TEST_CASE("affine evaluation and membership") {
    CHECK(affine_cubic_value(R(1), R(0), R(0), R(3)) == R(0));
    CHECK(affine_cubic_value(R(9, 7), R(15, 14), R(23, 14), R(3)) == R(0));
    CHECK(affine_cubic_value(R(1), R(1), R(1), R(3)) == R(-1));
    CHECK(on_surface_exact(R(9, 7), R(15, 14), R(23, 14)));
    CHECK(!on_surface_exact(R(1), R(1), R(1)));
    CHECK(on_surface_numeric(1.0, 0.0, 0.0, 3.0, 1e-12));
}

TEST_CASE("factorization certificates are exact") {
    auto cert = verify_factorization();
    CHECK(cert.identity_over_q);
    CHECK(cert.identity_cyclotomic);
    CHECK(cert.half_square_identity);
    CHECK(cert.all());

    // second factor at (2,1,1) equals 1 both ways
    R x(2), y(1), z(1);
    R direct = x * x + y * y + z * z - x * y - y * z - z * x;
    R half(1, 2);
    R squares = half * (x - y) * (x - y) + half * (x - z) * (x - z) + half * (y - z) * (y - z);
    CHECK(direct == R(1));
    CHECK(squares == direct);
}

TEST_CASE("slice circles") {
    auto s3 = slice(R(3));
    CHECK(s3.center[0] == R(1));
    CHECK(s3.center[1] == R(1));
    CHECK(s3.center[2] == R(1));
    CHECK(s3.circle_radius_sq == R(2, 9));
    CHECK(s3.sphere_radius_sq == R(29, 9));
    CHECK(s3.plane_constant == R(3));

    auto s1 = slice(R(1));
    CHECK(s1.center[0] == R(1, 3));
    CHECK(s1.circle_radius_sq == R(2, 3));

    CHECK_THROWS_AS(slice(R(0)), std::domain_error);
    CHECK_THROWS_AS(slice(R(-2)), std::domain_error);
    CHECK_THROWS_AS(slice(0.0), std::domain_error);

    // pythagorean relation between the two radii
    DetRng rng(59);
    for (int i = 0; i < 50; ++i) {
        R t(rng.uniform_int(1, 400), rng.uniform_int(1, 40));
        auto s = slice(t);
        CHECK(s.circle_radius_sq == s.sphere_radius_sq - t * t / R(3));
    }
}

TEST_CASE("slice points sampled at 64 parameters: plane exact, sphere exact") {
    // exact sampling through the rational parametrization, at square t = u^2
    for (const R& u : {R(1), R(2), R(3, 2)}) {
        R t = u * u;
        auto s = slice(t);
        for (int k = 0; k < 64; ++k) {
            R rk(2 * k - 63, 7);
            auto p = rational_point({u, rk});
            CHECK(p.x + p.y + p.z == t);
            CHECK(p.x * p.x + p.y * p.y + p.z * p.z == s.sphere_radius_sq);
        }
    }
    // floating sampling at 64 uniform angles stays within 1e-12
    for (double t : {0.5, 1.0, 7.25}) {
        auto s = slice(t);
        for (int k = 0; k < 64; ++k) {
            double theta = 2.0 * M_PI * k / 64.0;
            auto p = surface_point(t, theta);
            double scale = std::max(1.0, std::abs(t));
            CHECK(std::abs(p[0] + p[1] + p[2] - t) <= 1e-12 * scale);
            double rr = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
            CHECK(std::abs(rr - s.sphere_radius_sq) <= 1e-12 * std::max(1.0, rr));
        }
    }
}

TEST_CASE("meridian curve") {
    auto m1 = meridian_exact(R(1));
    REQUIRE(m1);
    CHECK((*m1)[0] == R(2, 3));
    CHECK((*m1)[1] == R(2, 3));
    CHECK((*m1)[2] == R(-1, 3));
    CHECK(on_surface_exact((*m1)[0], (*m1)[1], (*m1)[2]));

    auto m4 = meridian_exact(R(4));
    REQUIRE(m4);
    CHECK((*m4)[0] == R(3, 2));
    CHECK((*m4)[2] == R(1));

    CHECK(!meridian_exact(R(7)));
    CHECK_THROWS_AS(meridian_exact(R(-1)), std::domain_error);
    CHECK_THROWS_AS(meridian(0.0), std::domain_error);

    DetRng rng(61);
    for (int i = 0; i < 20; ++i) {
        double t = std::exp(rng.uniform(-3.0, 4.0));
        auto m = meridian(t);
        auto p = surface_point(t, 0.0);
        for (int k = 0; k < 3; ++k) CHECK(m[k] == doctest::Approx(p[k]).epsilon(1e-13));
    }
}

TEST_CASE("surface parametrization") {
    auto p0 = surface_point(1.0, 0.0);
    CHECK(p0[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(p0[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    auto ppi = surface_point(1.0, M_PI);
    CHECK(std::abs(ppi[0]) <= 1e-12);
    CHECK(std::abs(ppi[1]) <= 1e-12);
    CHECK(std::abs(ppi[2] - 1.0) <= 1e-12);

    auto phalf = surface_point(1.0, M_PI / 2.0);
    CHECK(std::abs(phalf[0] - (1.0 / 3.0 + 1.0 / std::sqrt(3.0))) <= 1e-12);
    CHECK(std::abs(phalf[1] - (1.0 / 3.0 - 1.0 / std::sqrt(3.0))) <= 1e-12);
    CHECK(std::abs(phalf[2] - 1.0 / 3.0) <= 1e-12);
    CHECK(std::abs(affine_cubic_value(phalf[0], phalf[1], phalf[2], 3.0)) <= 1e-12);

    DetRng rng(67);
    for (int i = 0; i < 1000; ++i) {
        double t = 1e-3 * std::exp(rng.u01() * std::log(1e5));
        double theta = rng.uniform(0.0, 2.0 * M_PI);
        auto p = surface_point(t, theta);
        double res = std::abs(affine_cubic_value(p[0], p[1], p[2], 3.0));
        CHECK(res <= 1e-9 * residual_scale(p[0], p[1], p[2], 3.0));
        auto q = surface_point(t, theta + 2.0 * M_PI);
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(p[k] - q[k]) <= 1e-12 * std::max(1.0, std::abs(p[k])));
    }
}

TEST_CASE("permutation symmetry of the surface") {
    DetRng rng(71);
    for (int i = 0; i < 50; ++i) {
        long un = 0;
        while (un == 0) un = rng.uniform_int(-9, 9);
        auto p = rational_point({R(un, rng.uniform_int(1, 9)),
                                 R(rng.uniform_int(-9, 9), rng.uniform_int(1, 9))});
        const R& x = p.x;
        const R& y = p.y;
        const R& z = p.z;
        CHECK(on_surface_exact(x, y, z));
        CHECK(on_surface_exact(x, z, y));
        CHECK(on_surface_exact(y, x, z));
        CHECK(on_surface_exact(y, z, x));
        CHECK(on_surface_exact(z, x, y));
        CHECK(on_surface_exact(z, y, x));
    }
}

TEST_CASE("rotation frame") {
    CHECK(RotationFrame::orthogonality_error() <= 1e-14);
    CHECK(std::abs(RotationFrame::det() - 1.0) <= 1e-14);

    auto axis = RotationFrame::to_rotated({1.0, 1.0, 1.0});
    CHECK(std::abs(axis[0]) <= 1e-15);
    CHECK(std::abs(axis[1]) <= 1e-15);
    CHECK(axis[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    auto xaxis = RotationFrame::to_rotated({1.0, -1.0, 0.0});
    CHECK(xaxis[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(xaxis[1]) <= 1e-15);
    CHECK(std::abs(xaxis[2]) <= 1e-15);

    auto mer = RotationFrame::to_rotated({2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0});
    CHECK(std::abs(mer[0]) <= 1e-15);
    CHECK(mer[1] == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(mer[2] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::abs(mer[2] * 3.0 * std::sqrt(3.0) * (mer[0] * mer[0] + mer[1] * mer[1]) - 2.0) <=
          1e-12);

    DetRng rng(73);
    for (int i = 0; i < 200; ++i) {
        std::array<double, 3> p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        auto rt = RotationFrame::from_rotated(RotationFrame::to_rotated(p));
        for (int k = 0; k < 3; ++k) CHECK(std::abs(rt[k] - p[k]) <= 1e-12);
    }
}

TEST_CASE("canonical residual") {
    auto img = RotationFrame::to_rotated(surface_point(1.0, M_PI));
    auto r = canonical_residual(img);
    CHECK(!r.on_axis);
    CHECK(std::abs(r.value) <= 1e-12);

    auto fixed = canonical_residual({1.0, 0.0, 2.0 / (3.0 * std::sqrt(3.0))});
    CHECK(!fixed.on_axis);
    CHECK(std::abs(fixed.value) <= 1e-15);

    CHECK(canonical_residual({0.0, 0.0, 1.0}).on_axis);
}

TEST_CASE("revolution invariance holds exactly for rho = 3 and fails off it") {
    auto good = revolution_invariance_test(3.0, 1000, 1e-9, 42);
    CHECK(good.invariant);
    CHECK(good.max_residual <= 1e-9);
    CHECK(good.samples_used + good.samples_skipped == 1000);

    // the sampled pre-rotation points lie on the surface to round-off
    auto w = good.witness_point;
    CHECK(std::abs(affine_cubic_value(w[0], w[1], w[2], 3.0)) <=
          1e-12 * residual_scale(w[0], w[1], w[2], 3.0));

    auto bad = revolution_invariance_test(0.0, 1000, 1e-9, 42);
    CHECK(!bad.invariant);
    CHECK(bad.max_residual > 1e-3);

    auto nearly = revolution_invariance_test(2.999, 1000, 1e-9, 42);
    CHECK(!nearly.invariant);

    CHECK_THROWS_AS(revolution_invariance_test(3.0, 0, 1e-9, 42), std::invalid_argument);
}

TEST_CASE("named form lookup") {
    CHECK(&named_form("hcubic") == &hcubic_form());
    CHECK(&named_form("canon") == &canon_form());
    CHECK(&named_form("rotated-scaled") == &rotated_scaled_form());
    CHECK_THROWS_AS(named_form("nope"), std::invalid_argument);
}

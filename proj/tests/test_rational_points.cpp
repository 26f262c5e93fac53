#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubicrev/rational_points.hpp"
#include "cubicrev/rng.hpp"
#include "cubicrev/surface.hpp"

using namespace cubicrev;
using R = BigRational;

namespace {

bool contains(const std::vector<RationalPoint3>& pts, const RationalPoint3& p) {
    return std::binary_search(pts.begin(), pts.end(), p);
}

}  // namespace

TEST_CASE("pythagorean pair") {
    auto p3 = pyth_pair(R(3));
    CHECK(p3.s == R(1, 2));
    CHECK(p3.c == R(1, 2));

    auto p0 = pyth_pair(R(0));
    CHECK(p0.s == R(0));
    CHECK(p0.c == R(-1));

    auto pt = pyth_pair(R(1, 3));
    CHECK(pt.s == R(3, 14));
    CHECK(pt.c == R(-13, 14));

    DetRng rng(83);
    for (int i = 0; i < 1000; ++i) {
        R r(rng.uniform_int(-200, 200), rng.uniform_int(1, 200));
        auto [s, c] = pyth_pair(r);
        CHECK(R(3) * s * s + c * c == R(1));
    }
}

TEST_CASE("generator examples") {
    auto p = rational_point({R(2), R(1, 3)});
    CHECK(p.x == R(9, 7));
    CHECK(p.y == R(15, 14));
    CHECK(p.z == R(23, 14));

    auto axis = rational_point({R(1), R(3)});
    CHECK(axis == RationalPoint3{R(1), R(0), R(0)});

    auto top = rational_point({R(1), R(0)});
    CHECK(top == RationalPoint3{R(0), R(0), R(1)});

    CHECK_THROWS_AS(rational_point({R(0), R(1)}), std::invalid_argument);
}

TEST_CASE("membership examples") {
    auto m = family_membership({R(9, 7), R(15, 14), R(23, 14)});
    CHECK(m.status == MembershipStatus::InFamily);
    REQUIRE(m.params);
    CHECK(m.params->u == R(2));
    CHECK(m.params->r == R(1, 3));

    auto outside = family_membership({R(18, 7), R(16, 7), R(15, 7)});
    CHECK(outside.status == MembershipStatus::NotInFamily);
    CHECK(outside.reason == MembershipReason::SumNotARationalSquare);
    CHECK(outside.reason_string() == "sum-not-a-rational-square");

    auto axis = family_membership({R(1), R(0), R(0)});
    CHECK(axis.status == MembershipStatus::InFamily);
    REQUIRE(axis.params);
    CHECK(axis.params->u == R(1));
    CHECK(axis.params->r == R(3));

    // meridian point with x = y: reachable only through the negative root of t
    auto mer = family_membership({R(2, 3), R(2, 3), R(-1, 3)});
    CHECK(mer.status == MembershipStatus::InFamily);
    REQUIRE(mer.params);
    CHECK(mer.params->u == R(-1));
    CHECK(mer.params->r == R(0));

    CHECK_THROWS_AS(family_membership({R(1), R(1), R(1)}), std::invalid_argument);
}

TEST_CASE("membership roundtrip on random parameters") {
    DetRng rng(89);
    for (int i = 0; i < 100; ++i) {
        long un = 0;
        while (un == 0) un = rng.uniform_int(-30, 30);
        RationalParams params{R(un, rng.uniform_int(1, 30)),
                              R(rng.uniform_int(-30, 30), rng.uniform_int(1, 30))};
        auto p = rational_point(params);
        CHECK(on_surface_exact(p.x, p.y, p.z));
        auto m = family_membership(p);
        REQUIRE(m.status == MembershipStatus::InFamily);
        CHECK(rational_point(*m.params) == p);
        CHECK(m.params->u.abs() == params.u.abs());
    }
}

TEST_CASE("rational roots of cubics") {
    auto only_zero = rational_roots_cubic(R(1), R(0), R(0), R(0));
    CHECK(only_zero == std::vector<R>{R(0)});

    // the z-cubic of the slice (x, y) = (1, 0): z^3 = 0
    auto slice10 = rational_roots_cubic(R(1), R(0), R(-3) * R(1) * R(0), R(1) + R(0) - R(1));
    CHECK(slice10 == std::vector<R>{R(0)});

    // the z-cubic of the slice (x, y) = (18/7, 16/7) contains 15/7
    R x(18, 7), y(16, 7);
    auto roots = rational_roots_cubic(R(1), R(0), R(-3) * x * y, x * x * x + y * y * y - R(1));
    CHECK(std::find(roots.begin(), roots.end(), R(15, 7)) != roots.end());

    auto quad = rational_roots_cubic(R(0), R(2), R(0), R(-8));
    CHECK(quad == std::vector<R>{R(-2), R(2)});

    auto lin = rational_roots_cubic(R(0), R(0), R(3), R(-2));
    CHECK(lin == std::vector<R>{R(2, 3)});

    auto none = rational_roots_cubic(R(0), R(1), R(0), R(1));  // t^2 + 1
    CHECK(none.empty());

    auto irr = rational_roots_cubic(R(1), R(0), R(0), R(-2));  // t^3 = 2
    CHECK(irr.empty());

    // (2t - 1)(t + 3)(3t + 5) = 6t^3 + 25t^2 + 16t - 15
    auto triple = rational_roots_cubic(R(6), R(25), R(16), R(-15));
    CHECK(triple == std::vector<R>{R(-3), R(-5, 3), R(1, 2)});

    CHECK_THROWS_AS(rational_roots_cubic(R(0), R(0), R(0), R(0)), std::invalid_argument);
}

TEST_CASE("point height") {
    CHECK(point_height({R(18, 7), R(16, 7), R(15, 7)}) == 18);
    CHECK(point_height({R(1), R(0), R(0)}) == 1);
    CHECK(point_height({R(2, 3), R(2, 3), R(-1, 3)}) == 3);
}

TEST_CASE("enumeration basics") {
    auto e1 = enumerate_points(1);
    CHECK(contains(e1, {R(1), R(0), R(0)}));
    CHECK(contains(e1, {R(0), R(1), R(0)}));
    CHECK(contains(e1, {R(0), R(0), R(1)}));

    auto e2 = enumerate_points(2);
    for (const auto& p : e1) CHECK(contains(e2, p));  // monotone in the bound
    CHECK(contains(e2, {R(0), R(0), R(1)}));
    CHECK(contains(e2, {R(0), R(1), R(0)}));
    CHECK(contains(e2, {R(1), R(0), R(0)}));

    CHECK_THROWS_AS(enumerate_points(0), std::invalid_argument);

    // sorted, deduplicated, every point exactly on the surface
    auto e3 = enumerate_points(3);
    CHECK(std::is_sorted(e3.begin(), e3.end()));
    CHECK(std::adjacent_find(e3.begin(), e3.end()) == e3.end());
    for (const auto& p : e3) {
        CHECK(on_surface_exact(p.x, p.y, p.z));
        CHECK(on_surface_exact(p.z, p.x, p.y));  // permutation closure
        CHECK(on_surface_exact(p.y, p.z, p.x));
    }
    for (const auto& p : e2) CHECK(contains(e3, p));
}

TEST_CASE("small cross-oracle: family points inside the enumeration") {
    auto e4 = enumerate_points(4);
    for (long pn = -6; pn <= 6; ++pn) {
        if (pn == 0) continue;
        for (long pq = 1; pq <= 6; ++pq)
            for (long mn = -6; mn <= 6; ++mn)
                for (long md = 1; md <= 6; ++md) {
                    auto pt = rational_point({R(pn, pq), R(mn, md)});
                    if (point_height(pt) <= 4) CHECK(contains(e4, pt));
                }
    }
}

TEST_CASE("CSV and JSON emission") {
    auto e1 = enumerate_points(1);
    auto csv = points_csv(e1);
    CHECK(csv.rfind("x,y,z,height\n", 0) == 0);
    CHECK(csv.find("1,0,0,1\n") != std::string::npos);
    CHECK(csv.find("0,0,1,1\n") != std::string::npos);

    auto j = points_json(e1);
    REQUIRE(j.is_array());
    CHECK(j.size() == e1.size());
    bool found_axis = false;
    for (const auto& entry : j) {
        CHECK(entry.contains("height"));
        CHECK(entry.contains("membership"));
        if (entry["x"] == "1" && entry["y"] == "0" && entry["z"] == "0") {
            found_axis = true;
            CHECK(entry["membership"]["status"] == "in-family");
        }
    }
    CHECK(found_axis);
}

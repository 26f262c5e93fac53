#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicrev/rng.hpp"
#include "cubicrev/singular.hpp"

using namespace cubicrev;
using R = BigRational;
using E = EisensteinRational;
using G = GaussianRational;

namespace {

const E kEps = E::unit_root();

CubicForm4<E> hcubic_eis() {
    return map_poly<E>(hcubic_form(), [](const R& c) { return E(c); });
}

CubicForm4<G> rotated_gauss() {
    return map_poly<G>(rotated_scaled_form(), [](const R& c) { return G(c); });
}

// l proportional to expected (as projective linear forms)
template <class S>
bool plane_matches(const LinearForm3<S>& l, const LinearForm3<S>& expected) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!scalar_traits<S>::is_zero(l[i] * expected[j] - l[j] * expected[i])) return false;
    return true;
}

template <class S>
bool planes_match(const PlanePair<S>& got, const LinearForm3<S>& a, const LinearForm3<S>& b) {
    return (plane_matches(got.first, a) && plane_matches(got.second, b)) ||
           (plane_matches(got.first, b) && plane_matches(got.second, a));
}

}  // namespace

TEST_CASE("singular point verification") {
    ProjectivePoint4<R> p0(R(0), R(1), R(1), R(1));
    CHECK(verify_singular(hcubic_form(), p0));

    ProjectivePoint4<E> pe(E(0), E(1), kEps, kEps * kEps);
    CHECK(verify_singular(hcubic_eis(), pe));

    // on the surface but not singular: F_x = 3 there
    ProjectivePoint4<R> q(R(1), R(1), R(0), R(0));
    CHECK(evaluate(hcubic_form(), q.v) == R(0));
    CHECK(!verify_singular(hcubic_form(), q));
}

TEST_CASE("quadratic Taylor form at the canonical X-vertex") {
    ProjectivePoint4<R> p(R(0), R(1), R(0), R(0));
    auto chart = quadratic_form_at(canon_form(), p);
    CHECK(chart.chart_var == 1);
    CHECK(chart.local_vars == std::array<int, 3>{0, 2, 3});
    // quadratic part of (1)(y)(z) + w^3 is y z
    const R half(1, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            R expected = ((i == 1 && j == 2) || (i == 2 && j == 1)) ? half : R(0);
            CHECK(chart.form.a[i][j] == expected);
        }
}

TEST_CASE("quadratic Taylor form at (0,1,1,1) of the hcubic surface") {
    ProjectivePoint4<R> p(R(0), R(1), R(1), R(1));
    auto chart = quadratic_form_at(hcubic_form(), p);
    CHECK(chart.chart_var == 3);  // last nonzero coordinate
    const R mh(-3, 2);
    std::array<std::array<R, 3>, 3> expected{{{R(0), R(0), R(0)},
                                              {R(0), R(3), mh},
                                              {R(0), mh, R(3)}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(chart.form.a[i][j] == expected[i][j]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(chart.form.a[i][j] == chart.form.a[j][i]);
}

TEST_CASE("quadratic_form_at rejects nonsingular points") {
    ProjectivePoint4<R> q(R(1), R(1), R(0), R(0));
    CHECK_THROWS_AS(quadratic_form_at(hcubic_form(), q), std::invalid_argument);
}

TEST_CASE("classification of the canonical vertex form: split planes on sight") {
    ProjectivePoint4<R> p(R(0), R(1), R(0), R(0));
    auto cls = classify(quadratic_form_at(canon_form(), p).form);
    CHECK(cls.rank == 2);
    CHECK(cls.det == R(0));
    CHECK(cls.kind == SingularKind::Binode);
    REQUIRE(cls.planes);
    LinearForm3<R> ey{R(0), R(1), R(0)}, ez{R(0), R(0), R(1)};
    CHECK(planes_match(*cls.planes, ey, ez));
}

TEST_CASE("rational binode form factors over Q(e) by extension escalation") {
    ProjectivePoint4<R> p(R(0), R(1), R(1), R(1));
    auto chart = quadratic_form_at(hcubic_form(), p);
    auto base = classify(chart.form);
    CHECK(base.kind == SingularKind::Binode);
    CHECK(!base.planes);  // y^2 - yz + z^2 has no rational linear factors
    REQUIRE(base.obstruction);

    auto ext = classify_with_extensions(chart.form);
    CHECK(ext.rank == 2);
    CHECK(ext.det == R(0));
    CHECK(ext.kind == SingularKind::Binode);
    CHECK(ext.plane_field == PlaneField::Eisenstein);
    REQUIRE(ext.planes_eis);
    LinearForm3<E> pe1{E(0), E(1), kEps};
    LinearForm3<E> pe2{E(0), E(1), kEps * kEps};
    CHECK(planes_match(*ext.planes_eis, pe1, pe2));
}

TEST_CASE("nondegenerate form classifies as a conic node") {
    QuadraticForm3<R> id;
    for (int i = 0; i < 3; ++i) id.a[i][i] = R(1);
    auto cls = classify(id);
    CHECK(cls.rank == 3);
    CHECK(cls.kind == SingularKind::ConicNode);
    CHECK(!cls.planes);
}

TEST_CASE("x^2 + y^2 at the rotated apex factors over Q(i)") {
    ProjectivePoint4<G> apex(G(0), G(0), G(0), G(1));
    auto analysis = analyze_singular_point(rotated_gauss(), apex);
    CHECK(analysis.verified);
    REQUIRE(analysis.classification);
    CHECK(analysis.classification->kind == SingularKind::Binode);
    REQUIRE(analysis.classification->planes);
    const G i = G::unit_root();
    LinearForm3<G> p1{G(0), G(1), i};   // chart vars (w, x, y)
    LinearForm3<G> p2{G(0), G(1), -i};
    CHECK(planes_match(*analysis.classification->planes, p1, p2));
}

TEST_CASE("singular catalogs: three binodes each, planes multiply back") {
    auto fe = hcubic_eis();
    for (const auto& p : hcubic_singular_points()) {
        auto a = analyze_singular_point(fe, p);
        CHECK(a.verified);
        REQUIRE(a.classification);
        CHECK(a.classification->rank == 2);
        CHECK(a.classification->det == E(0));
        CHECK(a.classification->kind == SingularKind::Binode);
        REQUIRE(a.classification->planes);
        // exact multiply-back up to a nonzero scalar
        const auto& planes = *a.classification->planes;
        const auto& q = a.chart->form;
        E scale;
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i)
            for (int j = 0; j < 3 && !found; ++j)
                if (!q.a[i][j].is_zero()) {
                    E prod = (planes.first[i] * planes.second[j] +
                              planes.first[j] * planes.second[i]) /
                             E(2);
                    scale = prod / q.a[i][j];
                    found = true;
                }
        REQUIRE(found);
        CHECK(!scale.is_zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                E prod = (planes.first[i] * planes.second[j] +
                          planes.first[j] * planes.second[i]) /
                         E(2);
                CHECK(prod == scale * q.a[i][j]);
            }
    }

    for (const auto& p : canon_singular_points()) {
        auto a = analyze_singular_point(canon_form(), p);
        CHECK(a.verified);
        CHECK(a.classification->kind == SingularKind::Binode);
        CHECK(a.classification->planes.has_value());
    }

    for (const auto& p : rotated_scaled_singular_points()) {
        auto a = analyze_singular_point(rotated_gauss(), p);
        CHECK(a.verified);
        CHECK(a.classification->kind == SingularKind::Binode);
    }
}

TEST_CASE("catalog JSON reports") {
    for (const char* name : {"hcubic", "canon", "rotated-scaled"}) {
        auto j = singular_catalog_json(name);
        CHECK(j["surface"] == name);
        CHECK(j["points"].size() == 3);
        for (const auto& entry : j["points"]) {
            CHECK(entry["kind"] == "binode");
            for (const auto& check : entry["checks"]) CHECK(check["status"] == "pass");
        }
    }
    CHECK_THROWS_AS(singular_catalog_json("unknown"), std::invalid_argument);
}

TEST_CASE("the three lines at infinity are contained and pairwise distinct") {
    CHECK(line_contained(hcubic_form(), real_infinity_line()));
    auto lines = lines_at_infinity();  // throws if any containment certificate fails
    auto fe = hcubic_eis();
    for (const auto& l : lines) CHECK(line_contained(fe, l));

    auto report = lines_report_json();
    CHECK(report["lines"].size() == 3);
    CHECK(report["pairwise_distinct"].get<bool>());
}

TEST_CASE("line containment is invariant under point swap and rescale") {
    auto lines = lines_at_infinity();
    auto fe = hcubic_eis();
    const auto& l = lines[1];
    CHECK(line_contained(fe, ProjectiveLine<E>{l.q, l.p}));
    E s(BigRational(-7, 3));
    ProjectivePoint4<E> scaled(
        std::array<E, 4>{s * l.p.v[0], s * l.p.v[1], s * l.p.v[2], s * l.p.v[3]});
    CHECK(line_contained(fe, ProjectiveLine<E>{scaled, l.q}));
}

TEST_CASE("horizontal lines in revolution coordinates: leading coefficient is e(a^2+c^2)") {
    DetRng rng(79);
    const auto& f = rotated_scaled_form();
    for (int trial = 0; trial < 100; ++trial) {
        R a(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        R c(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        if (a.is_zero() && c.is_zero()) c = R(1);
        R b(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        R d(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        R e(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
        ProjectiveLine<R> line{ProjectivePoint4<R>(R(1), b, d, e),
                               ProjectivePoint4<R>(R(0), a, c, R(0))};
        auto coeffs = restrict_to_line(f, line);
        CHECK(coeffs[2] == e * (a * a + c * c));
        // over R the coefficient vanishes only for the degenerate direction
        CHECK(!coeffs[2].is_zero());
    }
}

TEST_CASE("randomized finite-line rejection") {
    auto rat = finite_line_rejection(500, 42, LineScalar::Rational);
    CHECK(rat.passed);
    CHECK(rat.contained_count == 0);
    CHECK(rat.leading_identity_failures == 0);
    CHECK(rat.lines_tested + rat.degenerate_skipped == rat.trials_requested);

    auto gau = finite_line_rejection(500, 43, LineScalar::Gaussian);
    CHECK(gau.passed);
    CHECK(gau.lines_tested + gau.degenerate_skipped == gau.trials_requested);

    CHECK_THROWS_AS(finite_line_rejection(0, 1, LineScalar::Rational), std::invalid_argument);
}

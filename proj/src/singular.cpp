#include "cubicrev/singular.hpp"

#include "cubicrev/rng.hpp"

namespace cubicrev {

std::string to_string(SingularKind k) {
    switch (k) {
        case SingularKind::ConicNode: return "conic-node";
        case SingularKind::Binode: return "binode";
        case SingularKind::Unode: return "unode";
        case SingularKind::NotIsolatedQuadratic: return "not-isolated-quadratic";
        case SingularKind::NonsingularPoint: return "nonsingular-point";
    }
    return "unknown";
}

Classification<BigRational> classify(const QuadraticForm3<BigRational>& q) {
    return detail::classify_impl(q, [](const BigRational& v) -> std::optional<BigRational> {
        if (v.sign() < 0) return std::nullopt;
        return exact_sqrt(v);
    });
}

Classification<EisensteinRational> classify(const QuadraticForm3<EisensteinRational>& q) {
    return detail::classify_impl(
        q, [](const EisensteinRational& v) { return exact_sqrt(v); });
}

Classification<GaussianRational> classify(const QuadraticForm3<GaussianRational>& q) {
    return detail::classify_impl(q, [](const GaussianRational& v) { return exact_sqrt(v); });
}

namespace {

template <class T>
QuadraticForm3<T> lift_form3(const QuadraticForm3<BigRational>& q) {
    QuadraticForm3<T> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.a[i][j] = T(q.a[i][j]);
    return out;
}

}  // namespace

RationalClassification classify_with_extensions(const QuadraticForm3<BigRational>& q) {
    RationalClassification out;
    auto base = classify(q);
    out.rank = base.rank;
    out.det = base.det;
    out.kind = base.kind;
    if (base.planes) {
        out.plane_field = PlaneField::Rational;
        out.planes_q = base.planes;
        return out;
    }
    if (base.kind != SingularKind::Binode) return out;
    auto eis = classify(lift_form3<EisensteinRational>(q));
    if (eis.planes) {
        out.plane_field = PlaneField::Eisenstein;
        out.planes_eis = eis.planes;
        return out;
    }
    auto gau = classify(lift_form3<GaussianRational>(q));
    if (gau.planes) {
        out.plane_field = PlaneField::Gaussian;
        out.planes_gauss = gau.planes;
        return out;
    }
    out.obstruction = base.obstruction;
    return out;
}

std::array<ProjectivePoint4<EisensteinRational>, 3> hcubic_singular_points() {
    using E = EisensteinRational;
    const E e = E::unit_root();
    const E e2 = e * e;
    return {ProjectivePoint4<E>(E(0), E(1), E(1), E(1)),
            ProjectivePoint4<E>(E(0), E(1), e, e2),
            ProjectivePoint4<E>(E(0), E(1), e2, e)};
}

std::array<ProjectivePoint4<BigRational>, 3> canon_singular_points() {
    using R = BigRational;
    return {ProjectivePoint4<R>(R(0), R(1), R(0), R(0)),
            ProjectivePoint4<R>(R(0), R(0), R(1), R(0)),
            ProjectivePoint4<R>(R(0), R(0), R(0), R(1))};
}

std::array<ProjectivePoint4<GaussianRational>, 3> rotated_scaled_singular_points() {
    using G = GaussianRational;
    const G i = G::unit_root();
    return {ProjectivePoint4<G>(G(0), i, G(1), G(0)),
            ProjectivePoint4<G>(G(0), -i, G(1), G(0)),
            ProjectivePoint4<G>(G(0), G(0), G(0), G(1))};
}

namespace {

const char* kVarNames[4] = {"w", "x", "y", "z"};

template <class S>
nlohmann::json point_json(const std::array<S, 4>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const S& c : v) a.push_back(scalar_traits<S>::to_string(c));
    return a;
}

template <class S>
nlohmann::json plane_json(const LinearForm3<S>& l, const std::array<int, 3>& local_vars) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 3; ++i)
        a.push_back({{"var", kVarNames[local_vars[i]]},
                     {"c", scalar_traits<S>::to_string(l[i])}});
    return a;
}

// product of two linear forms proportional to the quadratic form (exact)
template <class S>
bool planes_multiply_back(const QuadraticForm3<S>& q, const PlanePair<S>& planes) {
    QuadraticForm3<S> prod;
    const S half = scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            prod.a[i][j] =
                half * (planes.first[i] * planes.second[j] + planes.first[j] * planes.second[i]);
    // find a nonzero reference entry of q
    int ri = -1, rj = -1;
    for (int i = 0; i < 3 && ri < 0; ++i)
        for (int j = 0; j < 3; ++j)
            if (!scalar_traits<S>::is_zero(q.a[i][j])) {
                ri = i;
                rj = j;
                break;
            }
    if (ri < 0) return false;
    if (scalar_traits<S>::is_zero(prod.a[ri][rj])) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!scalar_traits<S>::is_zero(prod.a[i][j] * q.a[ri][rj] -
                                           q.a[i][j] * prod.a[ri][rj]))
                return false;
    return true;
}

template <class S>
nlohmann::json catalog_entry_json(const CubicForm4<S>& f, const ProjectivePoint4<S>& p,
                                  const char* field_name) {
    nlohmann::json checks = nlohmann::json::array();
    auto analysis = analyze_singular_point(f, p);
    checks.push_back({{"name", "singular-verification"},
                      {"status", analysis.verified ? "pass" : "fail"}});
    nlohmann::json entry{{"point", point_json(p.v)}, {"field", field_name}};
    if (!analysis.verified) {
        entry["kind"] = to_string(SingularKind::NonsingularPoint);
        entry["checks"] = checks;
        return entry;
    }
    const auto& chart = *analysis.chart;
    const auto& cls = *analysis.classification;
    bool symmetric = true;
    for (int i = 0; i < 3 && symmetric; ++i)
        for (int j = 0; j < 3; ++j)
            if (!scalar_traits<S>::is_zero(chart.form.a[i][j] - chart.form.a[j][i]))
                symmetric = false;
    checks.push_back({{"name", "hessian-symmetric"}, {"status", symmetric ? "pass" : "fail"}});
    checks.push_back(
        {{"name", "binode-classification"},
         {"status", cls.kind == SingularKind::Binode ? "pass" : "fail"},
         {"witness",
          {{"rank", cls.rank},
           {"det", scalar_traits<S>::to_string(cls.det)},
           {"chart_var", kVarNames[chart.chart_var]}}}});
    if (cls.planes) {
        bool ok = planes_multiply_back(chart.form, *cls.planes);
        checks.push_back({{"name", "tangent-plane-product"},
                          {"status", ok ? "pass" : "fail"},
                          {"witness",
                           {{"planes",
                             {plane_json(cls.planes->first, chart.local_vars),
                              plane_json(cls.planes->second, chart.local_vars)}}}}});
    } else {
        checks.push_back({{"name", "tangent-plane-product"},
                          {"status", "fail"},
                          {"witness",
                           {{"obstruction", cls.obstruction
                                                ? scalar_traits<S>::to_string(*cls.obstruction)
                                                : "none"}}}});
    }
    entry["kind"] = to_string(cls.kind);
    entry["checks"] = checks;
    return entry;
}

}  // namespace

nlohmann::json singular_catalog_json(const std::string& surface) {
    nlohmann::json entries = nlohmann::json::array();
    if (surface == "hcubic") {
        auto f = map_poly<EisensteinRational>(
            hcubic_form(), [](const BigRational& c) { return EisensteinRational(c); });
        for (const auto& p : hcubic_singular_points())
            entries.push_back(catalog_entry_json(f, p, "eisenstein"));
    } else if (surface == "canon") {
        for (const auto& p : canon_singular_points())
            entries.push_back(catalog_entry_json(canon_form(), p, "rational"));
    } else if (surface == "rotated-scaled") {
        auto f = map_poly<GaussianRational>(
            rotated_scaled_form(), [](const BigRational& c) { return GaussianRational(c); });
        for (const auto& p : rotated_scaled_singular_points())
            entries.push_back(catalog_entry_json(f, p, "gaussian"));
    } else {
        throw std::invalid_argument("singular_catalog_json: unknown surface '" + surface + "'");
    }
    return nlohmann::json{{"surface", surface}, {"points", entries}};
}

ProjectiveLine<BigRational> real_infinity_line() {
    using R = BigRational;
    return {ProjectivePoint4<R>(R(0), R(1), R(-1), R(0)),
            ProjectivePoint4<R>(R(0), R(0), R(1), R(-1))};
}

std::array<ProjectiveLine<EisensteinRational>, 3> lines_at_infinity() {
    using E = EisensteinRational;
    const E e = E::unit_root();
    const E e2 = e * e;
    std::array<ProjectiveLine<E>, 3> lines{
        ProjectiveLine<E>{ProjectivePoint4<E>(E(0), E(1), E(-1), E(0)),
                          ProjectivePoint4<E>(E(0), E(0), E(1), E(-1))},
        ProjectiveLine<E>{ProjectivePoint4<E>(E(0), e, E(-1), E(0)),
                          ProjectivePoint4<E>(E(0), e2, E(0), E(-1))},
        ProjectiveLine<E>{ProjectivePoint4<E>(E(0), e2, E(-1), E(0)),
                          ProjectivePoint4<E>(E(0), e, E(0), E(-1))}};
    auto f = map_poly<E>(hcubic_form(), [](const BigRational& c) { return E(c); });
    for (const auto& l : lines)
        if (!line_contained(f, l))
            throw std::logic_error("lines_at_infinity: containment certificate failed");
    return lines;
}

namespace {

template <class S>
bool lines_span_equal(const ProjectiveLine<S>& a, const ProjectiveLine<S>& b) {
    std::vector<std::vector<S>> m{
        {a.p.v[0], a.p.v[1], a.p.v[2], a.p.v[3]},
        {a.q.v[0], a.q.v[1], a.q.v[2], a.q.v[3]},
        {b.p.v[0], b.p.v[1], b.p.v[2], b.p.v[3]},
        {b.q.v[0], b.q.v[1], b.q.v[2], b.q.v[3]},
    };
    return matrix_rank(std::move(m)) == 2;
}

}  // namespace

nlohmann::json lines_report_json() {
    auto lines = lines_at_infinity();
    const char* fields[3] = {"rational", "eisenstein", "eisenstein"};
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::json pts = nlohmann::json::array();
        pts.push_back(point_json(lines[i].p.v));
        pts.push_back(point_json(lines[i].q.v));
        arr.push_back({{"line", pts},
                       {"field", fields[i]},
                       {"checks",
                        nlohmann::json::array(
                            {{{"name", "containment"}, {"status", "pass"}}})}});
    }
    bool distinct = !lines_span_equal(lines[0], lines[1]) &&
                    !lines_span_equal(lines[0], lines[2]) &&
                    !lines_span_equal(lines[1], lines[2]);
    return nlohmann::json{{"lines", arr}, {"pairwise_distinct", distinct}};
}

nlohmann::json RejectionReport::to_json() const {
    return {{"scalar", scalar == LineScalar::Rational ? "rational" : "gaussian"},
            {"trials_requested", trials_requested},
            {"lines_tested", lines_tested},
            {"degenerate_skipped", degenerate_skipped},
            {"contained_count", contained_count},
            {"leading_identity_failures", leading_identity_failures},
            {"passed", passed}};
}

namespace {

template <class S, class Sampler>
RejectionReport reject_finite_lines(int n_trials, DetRng& rng, Sampler sample_nonzero,
                                    const CubicForm4<S>& f, LineScalar scalar) {
    RejectionReport rep;
    rep.scalar = scalar;
    rep.trials_requested = n_trials;
    const S minus_one = scalar_traits<S>::from_int(-1);
    const S zero = scalar_traits<S>::from_int(0);
    for (int trial = 0; trial < n_trials; ++trial) {
        S a = sample_nonzero(rng), b = sample_nonzero(rng);
        S c = scalar_traits<S>::from_int(1) / (a * b);
        S aa = sample_nonzero(rng), bb = sample_nonzero(rng);
        S cc = scalar_traits<S>::from_int(1) / (aa * bb);
        S da = aa - a, db = bb - b, dc = cc - c;
        if (scalar_traits<S>::is_zero(da) && scalar_traits<S>::is_zero(db) &&
            scalar_traits<S>::is_zero(dc)) {
            ++rep.degenerate_skipped;
            continue;
        }
        ProjectiveLine<S> line{ProjectivePoint4<S>(minus_one, a, b, c),
                               ProjectivePoint4<S>(zero, da, db, dc)};
        auto coeffs = restrict_to_line(f, line);
        bool contained = true;
        for (const S& v : coeffs)
            if (!scalar_traits<S>::is_zero(v)) contained = false;
        if (contained) ++rep.contained_count;
        if (!scalar_traits<S>::is_zero(coeffs[3] - da * db * dc))
            ++rep.leading_identity_failures;
        ++rep.lines_tested;
    }
    rep.passed = rep.contained_count == 0 && rep.leading_identity_failures == 0;
    return rep;
}

}  // namespace

RejectionReport finite_line_rejection(int n_trials, std::uint64_t seed, LineScalar scalar) {
    if (n_trials < 1) throw std::invalid_argument("finite_line_rejection: n_trials >= 1");
    DetRng rng(seed);
    if (scalar == LineScalar::Rational) {
        auto sample = [](DetRng& r) {
            long num = 0;
            while (num == 0) num = r.uniform_int(-9, 9);
            return BigRational(num, r.uniform_int(1, 9));
        };
        return reject_finite_lines(n_trials, rng, sample, canon_form(), scalar);
    }
    auto sample = [](DetRng& r) {
        while (true) {
            long na = r.uniform_int(-4, 4), nb = r.uniform_int(-4, 4);
            if (na == 0 && nb == 0) continue;
            return GaussianRational(BigRational(na, r.uniform_int(1, 4)),
                                    BigRational(nb, r.uniform_int(1, 4)));
        }
    };
    auto f = map_poly<GaussianRational>(canon_form(),
                                        [](const BigRational& c) { return GaussianRational(c); });
    return reject_finite_lines(n_trials, rng, sample, f, scalar);
}

}  // namespace cubicrev

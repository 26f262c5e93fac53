#include "cubicrev/surface.hpp"

#include <cmath>

#include "cubicrev/rng.hpp"

namespace cubicrev {

const CubicForm4<BigRational>& hcubic_form() {
    static const CubicForm4<BigRational> f = [] {
        CubicForm4<BigRational> g;
        g.set({0, 3, 0, 0}, BigRational(1));
        g.set({0, 0, 3, 0}, BigRational(1));
        g.set({0, 0, 0, 3}, BigRational(1));
        g.set({0, 1, 1, 1}, BigRational(-3));
        g.set({3, 0, 0, 0}, BigRational(-1));
        return g;
    }();
    return f;
}

const CubicForm4<BigRational>& canon_form() {
    static const CubicForm4<BigRational> f = [] {
        CubicForm4<BigRational> g;
        g.set({0, 1, 1, 1}, BigRational(1));
        g.set({3, 0, 0, 0}, BigRational(1));
        return g;
    }();
    return f;
}

const CubicForm4<BigRational>& rotated_scaled_form() {
    static const CubicForm4<BigRational> f = [] {
        CubicForm4<BigRational> g;
        g.set({0, 2, 0, 1}, BigRational(1));
        g.set({0, 0, 2, 1}, BigRational(1));
        g.set({3, 0, 0, 0}, BigRational(-1));
        return g;
    }();
    return f;
}

const CubicForm4<BigRational>& named_form(const std::string& name) {
    if (name == "hcubic") return hcubic_form();
    if (name == "canon") return canon_form();
    if (name == "rotated-scaled") return rotated_scaled_form();
    throw std::invalid_argument("named_form: unknown surface '" + name + "'");
}

double residual_scale(double x, double y, double z, double rho) {
    double s = std::abs(x * x * x) + std::abs(y * y * y) + std::abs(z * z * z) +
               std::abs(rho * x * y * z);
    return s > 1.0 ? s : 1.0;
}

bool on_surface_numeric(double x, double y, double z, double rho, double tol) {
    return std::abs(affine_cubic_value(x, y, z, rho)) <= tol * residual_scale(x, y, z, rho);
}

FactorizationCertificate verify_factorization() {
    FactorizationCertificate cert;
    using R = BigRational;
    // x^3 + y^3 + z^3 - 3xyz as a w-free cubic
    CubicForm4<R> lhs;
    lhs.set({0, 3, 0, 0}, R(1));
    lhs.set({0, 0, 3, 0}, R(1));
    lhs.set({0, 0, 0, 3}, R(1));
    lhs.set({0, 1, 1, 1}, R(-3));

    LinearForm4<R> sum;  // x + y + z
    sum.set({0, 1, 0, 0}, R(1));
    sum.set({0, 0, 1, 0}, R(1));
    sum.set({0, 0, 0, 1}, R(1));

    QuadraticForm4<R> second;  // x^2 + y^2 + z^2 - xy - yz - zx
    second.set({0, 2, 0, 0}, R(1));
    second.set({0, 0, 2, 0}, R(1));
    second.set({0, 0, 0, 2}, R(1));
    second.set({0, 1, 1, 0}, R(-1));
    second.set({0, 0, 1, 1}, R(-1));
    second.set({0, 1, 0, 1}, R(-1));

    cert.identity_over_q = multiply(sum, second) == lhs;

    // half-sum-of-squares shape of the second factor
    QuadraticForm4<R> half_squares;
    const R half(1, 2);
    auto add_half_square = [&](int va, int vb) {
        LinearForm4<R> d;
        d.set(unit_exp(va), R(1));
        d.set(unit_exp(vb), R(-1));
        half_squares = half_squares + half * multiply(d, d);
    };
    add_half_square(1, 2);
    add_half_square(1, 3);
    add_half_square(2, 3);
    cert.half_square_identity = half_squares == second;

    // cyclotomic refinement over Q(e)
    using E = EisensteinRational;
    const E eps = E::unit_root();
    const E eps2 = eps * eps;
    auto linear = [](E cx, E cy, E cz) {
        LinearForm4<E> l;
        l.set({0, 1, 0, 0}, std::move(cx));
        l.set({0, 0, 1, 0}, std::move(cy));
        l.set({0, 0, 0, 1}, std::move(cz));
        return l;
    };
    auto triple = multiply(multiply(linear(E(1), E(1), E(1)), linear(E(1), eps, eps2)),
                           linear(E(1), eps2, eps));
    auto lhs_eis = map_poly<E>(lhs, [](const R& c) { return E(c); });
    cert.identity_cyclotomic = triple == lhs_eis;
    return cert;
}

namespace {

constexpr const char* kPositiveTMsg =
    "t must be positive: the surface has no points with x + y + z <= 0";

}  // namespace

SliceCircle<BigRational> slice(const BigRational& t) {
    if (t.sign() <= 0) throw std::domain_error(kPositiveTMsg);
    SliceCircle<BigRational> s;
    s.t = t;
    const BigRational third(1, 3);
    BigRational c = t * third;
    s.center = {c, c, c};
    s.circle_radius_sq = BigRational(2) / (BigRational(3) * t);
    s.sphere_radius_sq = s.circle_radius_sq + t * t * third;
    s.plane_constant = t;
    return s;
}

SliceCircle<double> slice(double t) {
    if (!(t > 0.0)) throw std::domain_error(kPositiveTMsg);
    SliceCircle<double> s;
    s.t = t;
    s.center = {t / 3.0, t / 3.0, t / 3.0};
    s.circle_radius_sq = 2.0 / (3.0 * t);
    s.sphere_radius_sq = s.circle_radius_sq + t * t / 3.0;
    s.plane_constant = t;
    return s;
}

std::array<double, 3> meridian(double t) {
    if (!(t > 0.0)) throw std::domain_error(kPositiveTMsg);
    double a = t / 3.0;
    double b = 1.0 / (3.0 * std::sqrt(t));
    return {a + b, a + b, a - 2.0 * b};
}

std::optional<std::array<BigRational, 3>> meridian_exact(const BigRational& t) {
    if (t.sign() <= 0) throw std::domain_error(kPositiveTMsg);
    auto u = exact_sqrt(t);
    if (!u) return std::nullopt;
    const BigRational third(1, 3);
    BigRational a = t * third;
    BigRational b = BigRational(1) / (BigRational(3) * *u);
    return std::array<BigRational, 3>{a + b, a + b, a - BigRational(2) * b};
}

std::array<double, 3> surface_point(double t, double theta) {
    if (!(t > 0.0)) throw std::domain_error(kPositiveTMsg);
    double a = t / 3.0;
    double c = std::cos(theta) / (3.0 * std::sqrt(t));
    double s = std::sin(theta) / std::sqrt(3.0 * t);
    return {a + c + s, a + c - s, a - 2.0 * c};
}

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

}  // namespace

std::array<std::array<double, 3>, 3> RotationFrame::matrix() {
    // columns: X-axis image, Y-axis image, Z-axis image
    return {{{1.0 / kSqrt2, -1.0 / kSqrt2, 0.0},
             {1.0 / kSqrt6, 1.0 / kSqrt6, -2.0 / kSqrt6},
             {1.0 / kSqrt3, 1.0 / kSqrt3, 1.0 / kSqrt3}}};
}

std::array<double, 3> RotationFrame::to_rotated(const std::array<double, 3>& p) {
    return {(p[0] - p[1]) / kSqrt2, (p[0] + p[1] - 2.0 * p[2]) / kSqrt6,
            (p[0] + p[1] + p[2]) / kSqrt3};
}

std::array<double, 3> RotationFrame::from_rotated(const std::array<double, 3>& p) {
    return {p[0] / kSqrt2 + p[1] / kSqrt6 + p[2] / kSqrt3,
            -p[0] / kSqrt2 + p[1] / kSqrt6 + p[2] / kSqrt3,
            -2.0 * p[1] / kSqrt6 + p[2] / kSqrt3};
}

double RotationFrame::orthogonality_error() {
    auto m = matrix();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += m[i][k] * m[j][k];
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

double RotationFrame::det() {
    auto m = matrix();
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[1][0] * (m[0][1] * m[2][2] - m[0][2] * m[2][1]) +
           m[2][0] * (m[0][1] * m[1][2] - m[0][2] * m[1][1]);
}

CanonicalResidual canonical_residual(const std::array<double, 3>& rotated) {
    CanonicalResidual r;
    double rr = rotated[0] * rotated[0] + rotated[1] * rotated[1];
    if (rr == 0.0) {
        r.on_axis = true;
        return r;
    }
    r.value = rotated[2] * 3.0 * kSqrt3 * rr - 2.0;
    return r;
}

nlohmann::json InvarianceReport::to_json() const {
    return {{"rho", rho},
            {"samples_requested", samples_requested},
            {"samples_used", samples_used},
            {"samples_skipped", samples_skipped},
            {"tolerance", tolerance},
            {"max_residual", max_residual},
            {"invariant", invariant},
            {"witness_point", witness_point},
            {"witness_angle", witness_angle}};
}

namespace {

// rotate p about the unit axis (1,1,1)/sqrt(3) by angle phi (Rodrigues)
std::array<double, 3> rotate_about_axis(const std::array<double, 3>& p, double phi) {
    const double k = 1.0 / std::sqrt(3.0);
    const std::array<double, 3> ax{k, k, k};
    double c = std::cos(phi), s = std::sin(phi);
    std::array<double, 3> cross{ax[1] * p[2] - ax[2] * p[1], ax[2] * p[0] - ax[0] * p[2],
                                ax[0] * p[1] - ax[1] * p[0]};
    double dot = ax[0] * p[0] + ax[1] * p[1] + ax[2] * p[2];
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = p[i] * c + cross[i] * s + ax[i] * dot * (1.0 - c);
    return r;
}

}  // namespace

InvarianceReport revolution_invariance_test(double rho, int n_samples, double tol,
                                            std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("revolution_invariance_test: n_samples >= 1");
    InvarianceReport rep;
    rep.rho = rho;
    rep.samples_requested = n_samples;
    rep.tolerance = tol;
    DetRng rng(seed);
    for (int i = 0; i < n_samples; ++i) {
        auto d = rng.unit_vector();
        double phi = rng.uniform(0.0, 2.0 * M_PI);
        // f(s*d) = c3 * s^3 - 1 with c3 = dx^3 + dy^3 + dz^3 - rho dx dy dz
        double c3 = d[0] * d[0] * d[0] + d[1] * d[1] * d[1] + d[2] * d[2] * d[2] -
                    rho * d[0] * d[1] * d[2];
        if (std::abs(c3) < 1e-12) {
            ++rep.samples_skipped;
            continue;
        }
        // bracketed bisection for |c3| s^3 = 1 on s > 0, then restore the sign
        double mag = std::abs(c3);
        double lo = 0.0, hi = std::cbrt(2.0 / mag) + 1.0;
        for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
            double mid = 0.5 * (lo + hi);
            (mag * mid * mid * mid - 1.0 < 0.0 ? lo : hi) = mid;
        }
        double s = 0.5 * (lo + hi);
        if (c3 < 0.0) s = -s;
        std::array<double, 3> p{s * d[0], s * d[1], s * d[2]};
        auto p2 = rotate_about_axis(p, phi);
        double res = std::abs(affine_cubic_value(p2[0], p2[1], p2[2], rho)) /
                     residual_scale(p2[0], p2[1], p2[2], rho);
        ++rep.samples_used;
        if (res > rep.max_residual) {
            rep.max_residual = res;
            rep.witness_point = p;
            rep.witness_angle = phi;
        }
    }
    rep.invariant = rep.max_residual <= tol;
    return rep;
}

}  // namespace cubicrev

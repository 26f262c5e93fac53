// Singular-point verification, binode classification, and line containment.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubicrev/forms.hpp"
#include "cubicrev/surface.hpp"

namespace cubicrev {

/// True iff f and all four partials vanish at p (exact zero).
template <class S>
bool verify_singular(const CubicForm4<S>& f, const ProjectivePoint4<S>& p) {
    if (!scalar_traits<S>::is_zero(evaluate(f, p.v))) return false;
    for (const auto& g : gradient(f))
        if (!scalar_traits<S>::is_zero(evaluate(g, p.v))) return false;
    return true;
}

/// Symmetric 3x3 coefficient matrix of the quadratic Taylor term at a singular point.
template <class S>
struct QuadraticForm3 {
    std::array<std::array<S, 3>, 3> a{};

    void check_symmetric() const {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!scalar_traits<S>::is_zero(a[i][j] - a[j][i]))
                    throw std::invalid_argument("QuadraticForm3: matrix not symmetric");
    }

    S det() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    int rank() const {
        if (!scalar_traits<S>::is_zero(det())) return 3;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = i + 1; k < 3; ++k)
                    for (int l = j + 1; l < 3; ++l)
                        if (!scalar_traits<S>::is_zero(a[i][j] * a[k][l] - a[i][l] * a[k][j]))
                            return 2;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!scalar_traits<S>::is_zero(a[i][j])) return 1;
        return 0;
    }

    /// q(v) = sum a[i][j] v_i v_j.
    S value(const std::array<S, 3>& v) const {
        S acc = scalar_traits<S>::from_int(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc = acc + a[i][j] * v[i] * v[j];
        return acc;
    }
};

/// The quadratic Taylor data of f at a singular point, in the affine chart that
/// fixes the last nonzero coordinate of p at 1.
template <class S>
struct ChartQuadratic {
    std::array<S, 4> point;        // p normalized so point[chart_var] = 1
    int chart_var = 0;             // fixed coordinate index (0..3 = w,x,y,z)
    std::array<int, 3> local_vars; // remaining coordinate indices, ascending
    QuadraticForm3<S> form;
};

template <class S>
ChartQuadratic<S> quadratic_form_at(const CubicForm4<S>& f, const ProjectivePoint4<S>& p) {
    if (!verify_singular(f, p))
        throw std::invalid_argument("quadratic_form_at: point is not singular on this surface");
    ChartQuadratic<S> out;
    int k = -1;
    for (int i = 3; i >= 0; --i)
        if (!scalar_traits<S>::is_zero(p.v[i])) {
            k = i;
            break;
        }
    out.chart_var = k;
    S inv = scalar_traits<S>::from_int(1) / p.v[k];
    for (int i = 0; i < 4; ++i) out.point[i] = p.v[i] * inv;
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != k) out.local_vars[n++] = i;
    const S half = scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            auto second = derivative(derivative(f, out.local_vars[i]), out.local_vars[j]);
            S v = half * evaluate(second, out.point);
            out.form.a[i][j] = v;
            out.form.a[j][i] = v;
        }
    return out;
}

enum class SingularKind {
    ConicNode,             // rank 3
    Binode,                // det = 0, rank 2
    Unode,                 // rank 1
    NotIsolatedQuadratic,  // rank 0
    NonsingularPoint,
};

std::string to_string(SingularKind k);

inline SingularKind kind_from_rank(int rank) {
    switch (rank) {
        case 3: return SingularKind::ConicNode;
        case 2: return SingularKind::Binode;
        case 1: return SingularKind::Unode;
        default: return SingularKind::NotIsolatedQuadratic;
    }
}

template <class S>
using LinearForm3 = std::array<S, 3>;

template <class S>
using PlanePair = std::pair<LinearForm3<S>, LinearForm3<S>>;

/// Rank, determinant, kind, and (for rank 2) an in-field factorization of the
/// form into two linear forms. When the factorization needs a square root that
/// does not exist in S, `obstruction` carries the offending element.
template <class S>
struct Classification {
    int rank = 0;
    S det = scalar_traits<S>::from_int(0);
    SingularKind kind = SingularKind::NotIsolatedQuadratic;
    std::optional<PlanePair<S>> planes;
    std::optional<S> obstruction;
};

namespace detail {

// q = a*N^2 + b*M^2 with N, M independent linear forms; requires rank(q) == 2.
// Returns {a, N, b, M}; for an all-zero diagonal the split degenerates and the
// direct two-line factorization is returned through `direct`.
template <class S>
struct Rank2Split {
    bool has_direct = false;
    PlanePair<S> direct;
    S a = scalar_traits<S>::from_int(0);
    LinearForm3<S> n{};
    S b = scalar_traits<S>::from_int(0);
    LinearForm3<S> m{};
};

template <class S>
Rank2Split<S> split_rank2(const QuadraticForm3<S>& q) {
    Rank2Split<S> out;
    const S zero = scalar_traits<S>::from_int(0);
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (!scalar_traits<S>::is_zero(q.a[i][i])) {
            pivot = i;
            break;
        }
    if (pivot < 0) {
        // zero diagonal: the form is a sum of distinct cross terms; at rank 2
        // they share a variable, so the form splits on sight
        std::vector<std::array<int, 2>> offs;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!scalar_traits<S>::is_zero(q.a[i][j])) offs.push_back({i, j});
        out.has_direct = true;
        LinearForm3<S> l1{zero, zero, zero}, l2{zero, zero, zero};
        if (offs.size() == 1) {
            l1[offs[0][0]] = scalar_traits<S>::from_int(1);
            l2[offs[0][1]] = scalar_traits<S>::from_int(1);
        } else if (offs.size() == 2) {
            int shared = -1;
            for (int v : offs[0])
                for (int w : offs[1])
                    if (v == w) shared = v;
            if (shared < 0) throw std::logic_error("split_rank2: inconsistent cross terms");
            l1[shared] = scalar_traits<S>::from_int(1);
            for (const auto& o : offs) {
                int other = o[0] == shared ? o[1] : o[0];
                l2[other] = q.a[shared][other];
            }
        } else {
            throw std::logic_error("split_rank2: rank != 2");
        }
        out.direct = {l1, l2};
        return out;
    }
    // complete the square on the pivot variable
    out.a = q.a[pivot][pivot];
    out.n = {zero, zero, zero};
    out.n[pivot] = scalar_traits<S>::from_int(1);
    std::array<int, 2> rest{};
    int nrest = 0;
    for (int i = 0; i < 3; ++i)
        if (i != pivot) rest[nrest++] = i;
    for (int j : rest) out.n[j] = q.a[pivot][j] / out.a;
    std::array<std::array<S, 2>, 2> beta{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            beta[i][j] = q.a[rest[i]][rest[j]] - q.a[pivot][rest[i]] * q.a[pivot][rest[j]] / out.a;
    out.m = {zero, zero, zero};
    if (!scalar_traits<S>::is_zero(beta[0][0])) {
        out.b = beta[0][0];
        out.m[rest[0]] = scalar_traits<S>::from_int(1);
        out.m[rest[1]] = beta[0][1] / beta[0][0];
    } else if (!scalar_traits<S>::is_zero(beta[1][1])) {
        out.b = beta[1][1];
        out.m[rest[1]] = scalar_traits<S>::from_int(1);
        out.m[rest[0]] = beta[0][1] / beta[1][1];
    } else {
        // both residual diagonals zero with a nonzero cross term would mean rank 3
        throw std::logic_error("split_rank2: rank != 2");
    }
    return out;
}

template <class S, class SqrtFn>
Classification<S> classify_impl(const QuadraticForm3<S>& q, SqrtFn exact_sqrt_fn) {
    q.check_symmetric();
    Classification<S> out;
    out.det = q.det();
    out.rank = q.rank();
    out.kind = kind_from_rank(out.rank);
    if (out.kind != SingularKind::Binode) return out;
    auto split = split_rank2(q);
    if (split.has_direct) {
        out.planes = split.direct;
        return out;
    }
    S target = scalar_traits<S>::from_int(0) - split.b / split.a;
    auto sigma = exact_sqrt_fn(target);
    if (!sigma) {
        out.obstruction = target;
        return out;
    }
    LinearForm3<S> l1, l2;
    for (int i = 0; i < 3; ++i) {
        l1[i] = split.n[i] + *sigma * split.m[i];
        l2[i] = split.n[i] - *sigma * split.m[i];
    }
    out.planes = PlanePair<S>{l1, l2};
    return out;
}

}  // namespace detail

Classification<BigRational> classify(const QuadraticForm3<BigRational>& q);
Classification<EisensteinRational> classify(const QuadraticForm3<EisensteinRational>& q);
Classification<GaussianRational> classify(const QuadraticForm3<GaussianRational>& q);

enum class PlaneField { None, Rational, Eisenstein, Gaussian };

/// Classification of a rational quadratic form with tangent planes searched over
/// Q first, then over Q(e) and Q(i).
struct RationalClassification {
    int rank = 0;
    BigRational det;
    SingularKind kind = SingularKind::NotIsolatedQuadratic;
    PlaneField plane_field = PlaneField::None;
    std::optional<PlanePair<BigRational>> planes_q;
    std::optional<PlanePair<EisensteinRational>> planes_eis;
    std::optional<PlanePair<GaussianRational>> planes_gauss;
    std::optional<BigRational> obstruction;
};

RationalClassification classify_with_extensions(const QuadraticForm3<BigRational>& q);

/// Everything known about one singular point of one surface.
template <class S>
struct SingularAnalysis {
    bool verified = false;
    std::optional<ChartQuadratic<S>> chart;
    std::optional<Classification<S>> classification;
};

template <class S>
SingularAnalysis<S> analyze_singular_point(const CubicForm4<S>& f, const ProjectivePoint4<S>& p) {
    SingularAnalysis<S> out;
    out.verified = verify_singular(f, p);
    if (!out.verified) return out;
    out.chart = quadratic_form_at(f, p);
    out.classification = classify(out.chart->form);
    return out;
}

// ---- the singular catalogs of the named surfaces ----

std::array<ProjectivePoint4<EisensteinRational>, 3> hcubic_singular_points();
std::array<ProjectivePoint4<BigRational>, 3> canon_singular_points();
std::array<ProjectivePoint4<GaussianRational>, 3> rotated_scaled_singular_points();

/// Certificate report for "hcubic" | "canon" | "rotated-scaled"; throws on unknown name.
nlohmann::json singular_catalog_json(const std::string& surface);

// ---- lines ----

/// The real line at infinity of the hcubic surface: x + y + z = 0, w = 0.
ProjectiveLine<BigRational> real_infinity_line();

/// All three lines at infinity over Q(e); containment certificates are
/// re-verified on every call and a failure throws.
std::array<ProjectiveLine<EisensteinRational>, 3> lines_at_infinity();

nlohmann::json lines_report_json();

enum class LineScalar { Rational, Gaussian };

struct RejectionReport {
    LineScalar scalar = LineScalar::Rational;
    int trials_requested = 0;
    int lines_tested = 0;
    int degenerate_skipped = 0;
    int contained_count = 0;            // any > 0 falsifies the no-finite-lines claim
    int leading_identity_failures = 0;  // c3 != (a-A)(b-B)(c-C)
    bool passed = false;
    nlohmann::json to_json() const;
};

/// Random pairs of distinct finite points on the xyz = 1 chart of the canonical
/// surface; asserts every join is not contained and that the top restriction
/// coefficient matches the coordinate-difference product.
RejectionReport finite_line_rejection(int n_trials, std::uint64_t seed, LineScalar scalar);

}  // namespace cubicrev

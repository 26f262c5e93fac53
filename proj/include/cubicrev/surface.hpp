// The revolution structure of the cubic surface x^3 + y^3 + z^3 - 3xyz = 1.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cubicrev/forms.hpp"

namespace cubicrev {

// ---- named homogeneous cubics (coordinates ordered (w, x, y, z)) ----

/// x^3 + y^3 + z^3 - 3xyz - w^3.
const CubicForm4<BigRational>& hcubic_form();
/// xyz + w^3 (the canonical shape; its w = -1 chart is xyz = 1).
const CubicForm4<BigRational>& canon_form();
/// z(x^2 + y^2) - w^3 (the rotated surface with the w-scale normalized away).
const CubicForm4<BigRational>& rotated_scaled_form();

/// Lookup by report name: "hcubic" | "canon" | "rotated-scaled". Throws on unknown names.
const CubicForm4<BigRational>& named_form(const std::string& name);

// ---- affine surface membership ----

/// x^3 + y^3 + z^3 - rho*xyz - 1 over any scalar field.
template <class S>
S affine_cubic_value(const S& x, const S& y, const S& z, const S& rho) {
    return x * x * x + y * y * y + z * z * z - rho * x * y * z - scalar_traits<S>::from_int(1);
}

inline double affine_cubic_value(double x, double y, double z, double rho) {
    return x * x * x + y * y * y + z * z * z - rho * x * y * z - 1.0;
}

/// max(1, |x|^3 + |y|^3 + |z|^3 + |rho x y z|), the magnitude scale for residual tests.
double residual_scale(double x, double y, double z, double rho);

inline bool on_surface_exact(const BigRational& x, const BigRational& y, const BigRational& z,
                             const BigRational& rho = BigRational(3)) {
    return affine_cubic_value(x, y, z, rho).is_zero();
}

bool on_surface_numeric(double x, double y, double z, double rho, double tol);

// ---- exact factorization certificates ----

struct FactorizationCertificate {
    bool identity_over_q = false;       // x^3+y^3+z^3-3xyz = (x+y+z)(x^2+y^2+z^2-xy-yz-zx)
    bool identity_cyclotomic = false;   // = (x+y+z)(x+ey+e^2 z)(x+e^2 y+ez) over Q(e)
    bool half_square_identity = false;  // second factor = ((x-y)^2+(x-z)^2+(y-z)^2)/2
    bool all() const { return identity_over_q && identity_cyclotomic && half_square_identity; }
};

/// Coefficient-wise verification of the three identities; exact, no tolerance.
FactorizationCertificate verify_factorization();

// ---- slice circles ----

/// The circle cut by the plane x + y + z = t; all fields are rational in t.
template <class S>
struct SliceCircle {
    S t;
    std::array<S, 3> center;  // (t/3, t/3, t/3)
    S circle_radius_sq;       // 2/(3t)
    S sphere_radius_sq;       // 2/(3t) + t^2/3
    S plane_constant;         // t
};

SliceCircle<BigRational> slice(const BigRational& t);
SliceCircle<double> slice(double t);

// ---- meridian and surface parametrization ----

/// (t/3 + 1/(3 sqrt t), t/3 + 1/(3 sqrt t), t/3 - 2/(3 sqrt t)); t > 0.
std::array<double, 3> meridian(double t);

/// Exact meridian point when sqrt(t) is rational; nullopt otherwise. Throws for t <= 0.
std::optional<std::array<BigRational, 3>> meridian_exact(const BigRational& t);

/// The (t, theta) parametrization of the surface; t > 0.
std::array<double, 3> surface_point(double t, double theta);

// ---- rotation to revolution coordinates ----

/// Orthogonal frame sending the axis x = y = z to the Z-axis, the plane
/// x + y + z = 0 to the XY-plane, and the line x + y = 0, z = 0 to the X-axis.
struct RotationFrame {
    /// (X, Y, Z) = R^T (x, y, z)
    static std::array<double, 3> to_rotated(const std::array<double, 3>& p);
    /// (x, y, z) = R (X, Y, Z)
    static std::array<double, 3> from_rotated(const std::array<double, 3>& p);
    /// Column-major entries of R.
    static std::array<std::array<double, 3>, 3> matrix();
    /// max |(R^T R - I)_{ij}|
    static double orthogonality_error();
    static double det();
};

struct CanonicalResidual {
    bool on_axis = false;  // X^2 + Y^2 = 0; the surface has no on-axis points
    double value = 0.0;    // Z * 3 sqrt(3) * (X^2 + Y^2) - 2
};

CanonicalResidual canonical_residual(const std::array<double, 3>& rotated);

// ---- revolution invariance ----

struct InvarianceReport {
    double rho = 3.0;
    int samples_requested = 0;
    int samples_used = 0;
    int samples_skipped = 0;  // ray solve failures
    double tolerance = 0.0;
    double max_residual = 0.0;  // relative to the local magnitude scale
    bool invariant = false;
    std::array<double, 3> witness_point{};  // pre-rotation sample realizing max_residual
    double witness_angle = 0.0;
    nlohmann::json to_json() const;
};

/// Samples points of x^3+y^3+z^3-rho*xyz=1 along random rays (bracketed bisection),
/// rotates each by a random angle about (1,1,1)/sqrt(3), and reports the largest
/// relative residual. Verdict "invariant" iff max <= tol.
InvarianceReport revolution_invariance_test(double rho, int n_samples, double tol,
                                            std::uint64_t seed);

}  // namespace cubicrev

// Exact rational points on x^3 + y^3 + z^3 - 3xyz = 1: the (u, r) generator,
// its inverse, and a height-bounded enumeration oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubicrev/rational.hpp"

namespace cubicrev {

/// Rational stand-ins for (sin, cos) of the slice angle: s = 2r/(r^2+3),
/// c = (r^2-3)/(r^2+3); they satisfy 3 s^2 + c^2 = 1 exactly.
struct PythPair {
    BigRational s;
    BigRational c;
};

PythPair pyth_pair(const BigRational& r);

struct RationalParams {
    BigRational u;  // != 0
    BigRational r;
};

struct RationalPoint3 {
    BigRational x, y, z;

    friend bool operator==(const RationalPoint3& a, const RationalPoint3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const RationalPoint3& a, const RationalPoint3& b) { return !(a == b); }
    friend bool operator<(const RationalPoint3& a, const RationalPoint3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
};

/// The generator point for (u, r); throws for u = 0 or if the exact on-surface
/// certificate fails (which would indicate a broken build).
RationalPoint3 rational_point(const RationalParams& p);

enum class MembershipStatus { InFamily, LimitPoint, NotInFamily };
enum class MembershipReason {
    None,
    SumNotARationalSquare,
    RSquaredNotARationalSquare,
    ReconstructionMismatch,
};

struct MembershipResult {
    MembershipStatus status = MembershipStatus::NotInFamily;
    MembershipReason reason = MembershipReason::None;
    std::optional<RationalParams> params;  // present iff status == InFamily

    std::string status_string() const;
    std::string reason_string() const;
    nlohmann::json to_json() const;
};

/// Inverts the generator for a point that lies exactly on the surface.
/// Both square-root signs of x+y+z are examined; u > 0 is preferred when both
/// preimages exist. Off-surface input is rejected.
MembershipResult family_membership(const RationalPoint3& p);

/// All rational roots of a3 t^3 + a2 t^2 + a1 t + a0, by clearing denominators
/// and testing divisor pairs of the constant and leading integer coefficients.
/// Every root is re-verified by exact back-substitution. Lower-degree inputs
/// (a3 = 0, ...) are handled; the zero polynomial is rejected.
std::vector<BigRational> rational_roots_cubic(const BigRational& a3, const BigRational& a2,
                                              const BigRational& a1, const BigRational& a0);

/// Height of a point: max over coordinates of max(|num|, den) in lowest terms.
BigInt point_height(const RationalPoint3& p);

/// Brute-force oracle: scans reduced x, y with den <= bound and |value| <= bound
/// (a superset of all x, y of height <= bound), solves the surface cubic for z,
/// and emits every exact on-surface point, sorted lexicographically.
std::vector<RationalPoint3> enumerate_points(int height_bound);

/// CSV with header "x,y,z,height"; exact "a/b" coordinate strings.
std::string points_csv(const std::vector<RationalPoint3>& pts);

nlohmann::json points_json(const std::vector<RationalPoint3>& pts);

}  // namespace cubicrev

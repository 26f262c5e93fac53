#include "cubicrev/rational_points.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "cubicrev/surface.hpp"

namespace cubicrev {

PythPair pyth_pair(const BigRational& r) {
    BigRational d = r * r + BigRational(3);
    return {BigRational(2) * r / d, (r * r - BigRational(3)) / d};
}

RationalPoint3 rational_point(const RationalParams& p) {
    if (p.u.is_zero()) throw std::invalid_argument("rational_point: u must be nonzero");
    auto [s, c] = pyth_pair(p.r);
    const BigRational third(1, 3);
    BigRational t3 = p.u * p.u * third;
    BigRational cu = c / (BigRational(3) * p.u);
    BigRational su = s / p.u;
    RationalPoint3 out{t3 + cu + su, t3 + cu - su, t3 - BigRational(2) * cu};
    if (!on_surface_exact(out.x, out.y, out.z))
        throw std::logic_error("rational_point: on-surface certificate failed");
    return out;
}

std::string MembershipResult::status_string() const {
    switch (status) {
        case MembershipStatus::InFamily: return "in-family";
        case MembershipStatus::LimitPoint: return "limit-point";
        case MembershipStatus::NotInFamily: return "not-in-family";
    }
    return "unknown";
}

std::string MembershipResult::reason_string() const {
    switch (reason) {
        case MembershipReason::None: return "none";
        case MembershipReason::SumNotARationalSquare: return "sum-not-a-rational-square";
        case MembershipReason::RSquaredNotARationalSquare: return "r-squared-not-a-rational-square";
        case MembershipReason::ReconstructionMismatch: return "reconstruction-mismatch";
    }
    return "unknown";
}

nlohmann::json MembershipResult::to_json() const {
    nlohmann::json j{{"status", status_string()}};
    if (status == MembershipStatus::NotInFamily) j["reason"] = reason_string();
    if (params) {
        j["u"] = params->u.to_string();
        j["r"] = params->r.to_string();
    }
    return j;
}

MembershipResult family_membership(const RationalPoint3& p) {
    if (!on_surface_exact(p.x, p.y, p.z))
        throw std::invalid_argument("family_membership: point is not on the surface");
    BigRational t = p.x + p.y + p.z;  // > 0 for every real surface point
    auto u0 = exact_sqrt(t);
    if (!u0) return {MembershipStatus::NotInFamily, MembershipReason::SumNotARationalSquare, {}};
    bool limit_seen = false;
    MembershipReason fail = MembershipReason::None;
    const BigRational one(1);
    for (const BigRational& u : {*u0, -*u0}) {
        BigRational c = (t / BigRational(3) - p.z) * BigRational(3) * u / BigRational(2);
        if (c == one) {
            limit_seen = true;  // cos = 1 is approached but never attained by finite r
            continue;
        }
        BigRational r2 = BigRational(3) * (one + c) / (one - c);
        std::optional<BigRational> rabs;
        if (r2.sign() >= 0) rabs = exact_sqrt(r2);
        if (!rabs) {
            if (fail == MembershipReason::None)
                fail = MembershipReason::RSquaredNotARationalSquare;
            continue;
        }
        int sgn = (p.x - p.y).sign() * u.sign();
        RationalParams params{u, sgn < 0 ? -*rabs : *rabs};
        if (rational_point(params) == p)
            return {MembershipStatus::InFamily, MembershipReason::None, params};
        if (fail == MembershipReason::None) fail = MembershipReason::ReconstructionMismatch;
    }
    if (limit_seen) return {MembershipStatus::LimitPoint, MembershipReason::None, {}};
    return {MembershipStatus::NotInFamily,
            fail == MembershipReason::None ? MembershipReason::ReconstructionMismatch : fail,
            {}};
}

namespace {

BigInt int_abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

BigInt int_lcm(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    if (n <= 1) return out;
    if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        std::uint64_t m = n.convert_to<std::uint64_t>();
        auto take = [&](std::uint64_t p) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e) out.emplace_back(BigInt(p), e);
        };
        take(2);
        for (std::uint64_t p = 3; p * p <= m; p += 2) take(p);
        if (m > 1) out.emplace_back(BigInt(m), 1);
        return out;
    }
    // arbitrary-precision fallback; adequate for the scales this toolkit targets
    auto take = [&](const BigInt& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    take(2);
    for (BigInt p = 3; p * p <= n; p += 2) take(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = divs.size();
        BigInt pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// A3 p^3 + A2 p^2 q + A1 p q^2 + A0 q^3 == 0, with a fast fixed-width path
bool integer_cubic_root(const BigInt& a3, const BigInt& a2, const BigInt& a1, const BigInt& a0,
                        const BigInt& p, const BigInt& q) {
    static const BigInt kCoeffGate = BigInt(1) << 40;
    static const BigInt kRootGate = BigInt(1) << 26;
    if (int_abs(a3) < kCoeffGate && int_abs(a2) < kCoeffGate && int_abs(a1) < kCoeffGate &&
        int_abs(a0) < kCoeffGate && int_abs(p) < kRootGate && q < kRootGate) {
        __int128 P = p.convert_to<long long>(), Q = q.convert_to<long long>();
        __int128 v = __int128(a3.convert_to<long long>()) * P * P * P +
                     __int128(a2.convert_to<long long>()) * P * P * Q +
                     __int128(a1.convert_to<long long>()) * P * Q * Q +
                     __int128(a0.convert_to<long long>()) * Q * Q * Q;
        return v == 0;
    }
    return a3 * p * p * p + a2 * p * p * q + a1 * p * q * q + a0 * q * q * q == 0;
}

BigRational eval_cubic(const BigRational& a3, const BigRational& a2, const BigRational& a1,
                       const BigRational& a0, const BigRational& t) {
    return ((a3 * t + a2) * t + a1) * t + a0;
}

}  // namespace

std::vector<BigRational> rational_roots_cubic(const BigRational& a3, const BigRational& a2,
                                              const BigRational& a1, const BigRational& a0) {
    if (a3.is_zero() && a2.is_zero() && a1.is_zero() && a0.is_zero())
        throw std::invalid_argument("rational_roots_cubic: zero polynomial");
    std::vector<BigRational> roots;
    auto push_verified = [&](const BigRational& t) {
        if (eval_cubic(a3, a2, a1, a0, t).is_zero()) roots.push_back(t);
    };

    if (a3.is_zero()) {
        if (a2.is_zero()) {
            if (!a1.is_zero()) push_verified(-a0 / a1);
        } else {
            BigRational disc = a1 * a1 - BigRational(4) * a2 * a0;
            if (disc.sign() >= 0) {
                if (auto sd = exact_sqrt(disc)) {
                    BigRational twoa = BigRational(2) * a2;
                    push_verified((-a1 + *sd) / twoa);
                    if (!sd->is_zero()) push_verified((-a1 - *sd) / twoa);
                }
            }
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }

    // clear denominators to integer coefficients
    BigInt lcd = a3.den();
    lcd = int_lcm(lcd, a2.den());
    lcd = int_lcm(lcd, a1.den());
    lcd = int_lcm(lcd, a0.den());
    BigInt A3 = a3.num() * (lcd / a3.den());
    BigInt A2 = a2.num() * (lcd / a2.den());
    BigInt A1 = a1.num() * (lcd / a1.den());
    BigInt A0 = a0.num() * (lcd / a0.den());

    // t = 0 roots, then reduce to nonzero constant term
    if (A0 == 0) {
        push_verified(BigRational(0));
        // divide by t (at most twice; a third division would leave A3 t^3)
        A0 = A1;
        A1 = A2;
        A2 = A3;
        A3 = 0;
        if (A0 == 0) {
            A0 = A1;
            A1 = A2;
            A2 = 0;
        }
        if (A0 == 0) {
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            return roots;
        }
        // degree dropped: recurse on the reduced polynomial
        auto rest = rational_roots_cubic(BigRational(A3), BigRational(A2), BigRational(A1),
                                         BigRational(A0));
        for (const auto& t : rest) push_verified(t);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }

    const BigInt a3_abs = int_abs(A3);
    BigInt max_abs = int_abs(A2);
    max_abs = std::max(max_abs, int_abs(A1));
    max_abs = std::max(max_abs, int_abs(A0));
    const BigInt cauchy = a3_abs + max_abs;  // |p|/q <= cauchy / |A3|

    auto divp = divisors_of(int_abs(A0));
    auto divq = divisors_of(a3_abs);
    for (const BigInt& q : divq) {
        for (const BigInt& p : divp) {
            if (p * a3_abs > q * cauchy) break;  // divisors ascend; all later p too large
            if (boost::multiprecision::gcd(p, q) != 1) continue;
            if (integer_cubic_root(A3, A2, A1, A0, p, q)) push_verified(BigRational(p, q));
            if (integer_cubic_root(A3, A2, A1, A0, -p, q)) push_verified(BigRational(-p, q));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

BigInt point_height(const RationalPoint3& p) {
    BigInt h = rational_height(p.x);
    h = std::max(h, rational_height(p.y));
    h = std::max(h, rational_height(p.z));
    return h;
}

std::vector<RationalPoint3> enumerate_points(int height_bound) {
    if (height_bound < 1) throw std::invalid_argument("enumerate_points: bound must be >= 1");
    std::vector<BigRational> values;
    for (long den = 1; den <= height_bound; ++den)
        for (long num = -height_bound * den; num <= height_bound * den; ++num) {
            if (boost::multiprecision::gcd(BigInt(num < 0 ? -num : num), BigInt(den)) != 1)
                continue;
            values.emplace_back(BigInt(num), BigInt(den));
        }
    std::vector<BigRational> cubes;
    cubes.reserve(values.size());
    for (const auto& v : values) cubes.push_back(v * v * v);

    std::vector<RationalPoint3> pts;
    const BigRational minus3(-3);
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            BigRational a1 = minus3 * values[i] * values[j];
            BigRational a0 = cubes[i] + cubes[j] - BigRational(1);
            for (const auto& z : rational_roots_cubic(BigRational(1), BigRational(0), a1, a0)) {
                RationalPoint3 p{values[i], values[j], z};
                if (!on_surface_exact(p.x, p.y, p.z))
                    throw std::logic_error("enumerate_points: off-surface root");
                pts.push_back(std::move(p));
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::string points_csv(const std::vector<RationalPoint3>& pts) {
    std::string out = "x,y,z,height\n";
    for (const auto& p : pts) {
        out += p.x.to_string();
        out += ',';
        out += p.y.to_string();
        out += ',';
        out += p.z.to_string();
        out += ',';
        out += point_height(p).str();
        out += '\n';
    }
    return out;
}

nlohmann::json points_json(const std::vector<RationalPoint3>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) {
        nlohmann::json j{{"x", p.x.to_string()},
                         {"y", p.y.to_string()},
                         {"z", p.z.to_string()},
                         {"height", point_height(p).str()}};
        j["membership"] = family_membership(p).to_json();
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace cubicrev

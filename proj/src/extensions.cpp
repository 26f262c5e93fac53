#include "cubicrev/extensions.hpp"

namespace cubicrev {

namespace {

// Shared text form for a + b*u with unit symbol 'e' or 'i'. Canonical output:
// "a" when b = 0, otherwise "a+b*u" / "a-|b|*u".
std::string quad_to_string(const BigRational& a, const BigRational& b, char unit) {
    if (b.is_zero()) return a.to_string();
    std::string s = a.to_string();
    if (b.sign() < 0) {
        s += '-';
        s += (-b).to_string();
    } else {
        s += '+';
        s += b.to_string();
    }
    s += '*';
    s += unit;
    return s;
}

std::pair<BigRational, BigRational> quad_from_string(std::string_view s, char unit) {
    if (s.empty()) throw std::invalid_argument("extension scalar: empty string");
    // split at the last '+'/'-' that is not the leading sign and not right after '/'
    size_t split = std::string_view::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos || s.back() != unit) {
        // pure rational part
        return {BigRational::from_string(s), BigRational(0)};
    }
    std::string_view head = s.substr(0, split);
    std::string_view tail = s.substr(split);  // includes sign
    if (tail.size() < 3 || tail[tail.size() - 2] != '*' || tail.back() != unit)
        throw std::invalid_argument("extension scalar: malformed unit term");
    std::string_view bpart = tail.substr(0, tail.size() - 2);
    return {BigRational::from_string(head), BigRational::from_string(bpart)};
}

}  // namespace

EisensteinRational EisensteinRational::inverse() const {
    BigRational n = norm();
    if (n.is_zero()) throw std::domain_error("EisensteinRational: inverse of zero");
    EisensteinRational c = conj();
    return {c.a() / n, c.b() / n};
}

std::string EisensteinRational::to_string() const { return quad_to_string(a_, b_, 'e'); }

EisensteinRational EisensteinRational::from_string(std::string_view s) {
    auto [a, b] = quad_from_string(s, 'e');
    return {std::move(a), std::move(b)};
}

GaussianRational GaussianRational::inverse() const {
    BigRational n = norm();
    if (n.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    return {a_ / n, -b_ / n};
}

std::string GaussianRational::to_string() const { return quad_to_string(a_, b_, 'i'); }

GaussianRational GaussianRational::from_string(std::string_view s) {
    auto [a, b] = quad_from_string(s, 'i');
    return {std::move(a), std::move(b)};
}

namespace {

// Square roots in Q(sqrt(d)) for d < 0, written as u + v*sqrt(d):
// (s + t*sqrt(d))^2 = s^2 + d t^2 + 2st*sqrt(d). For v != 0 the norm
// u^2 - d v^2 must be a rational square n^2, and s^2 = (u + n)/2 or (u - n)/2.
template <class Make>
auto quad_sqrt(const BigRational& u, const BigRational& v, long d, Make make)
    -> std::optional<decltype(make(BigRational(), BigRational()))> {
    const BigRational dd(d);
    if (v.is_zero()) {
        if (u.sign() >= 0) {
            if (auto s = exact_sqrt(u)) return make(*s, BigRational(0));
        } else {
            BigRational t2 = u / dd;  // d < 0, so t2 > 0
            if (auto t = exact_sqrt(t2)) return make(BigRational(0), *t);
        }
        return std::nullopt;
    }
    BigRational n2 = u * u - dd * v * v;
    if (n2.sign() < 0) return std::nullopt;
    auto n = exact_sqrt(n2);
    if (!n) return std::nullopt;
    const BigRational half(1, 2);
    for (const BigRational& cand : {(u + *n) * half, (u - *n) * half}) {
        if (cand.sign() <= 0) continue;
        if (auto s = exact_sqrt(cand)) {
            BigRational t = v / (BigRational(2) * *s);
            return make(*s, t);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<EisensteinRational> exact_sqrt(const EisensteinRational& z) {
    // a + b*e = (a - b/2) + (b/2)*sqrt(-3); back: s + t*sqrt(-3) = (s + t) + 2t*e
    const BigRational half(1, 2);
    BigRational u = z.a() - z.b() * half;
    BigRational v = z.b() * half;
    auto made = quad_sqrt(u, v, -3, [](BigRational s, BigRational t) {
        return EisensteinRational(s + t, BigRational(2) * t);
    });
    if (made && *made * *made == z) return made;
    return std::nullopt;
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    auto made = quad_sqrt(z.a(), z.b(), -1, [](BigRational s, BigRational t) {
        return GaussianRational(std::move(s), std::move(t));
    });
    if (made && *made * *made == z) return made;
    return std::nullopt;
}

}  // namespace cubicrev

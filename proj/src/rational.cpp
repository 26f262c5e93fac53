#include "cubicrev/rational.hpp"

#include <cctype>

namespace cubicrev {

namespace {

BigInt gcd_abs(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a < 0 ? BigInt(-a) : a, b < 0 ? BigInt(-b) : b);
}

}  // namespace

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("BigRational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd_abs(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

bool BigRational::is_canonical() const {
    if (den_ <= 0) return false;
    if (num_ == 0) return den_ == 1;
    return gcd_abs(num_, den_) == 1;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.num_ == 0) throw std::domain_error("BigRational: division by zero");
    return BigRational(a.num_ * b.den_, a.den_ * b.num_);
}

BigRational BigRational::inverse() const {
    if (num_ == 0) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(den_, num_);
}

BigRational BigRational::pow(unsigned e) const {
    BigRational r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

double BigRational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string BigRational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// signed integer literal -> BigInt; throws on malformed input
BigInt parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("BigRational: malformed integer");
    BigInt v(std::string(s));
    return neg ? BigInt(-v) : v;
}

}  // namespace

BigRational BigRational::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigRational: empty string");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt n = parse_int(s.substr(0, slash));
        BigInt d = parse_int(s.substr(slash + 1));
        return BigRational(std::move(n), std::move(d));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head.remove_prefix(1);
        }
        if (head.empty() && frac.empty())
            throw std::invalid_argument("BigRational: malformed decimal");
        BigInt ipart = head.empty() ? BigInt(0) : parse_int(head);
        BigInt den(1);
        BigInt fpart(0);
        if (!frac.empty()) {
            if (!all_digits(frac)) throw std::invalid_argument("BigRational: malformed decimal");
            fpart = BigInt(std::string(frac));
            for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        }
        BigInt n = ipart * den + fpart;
        if (neg) n = -n;
        return BigRational(std::move(n), std::move(den));
    }
    return BigRational(parse_int(s));
}

std::optional<BigRational> exact_sqrt(const BigRational& q) {
    if (q.sign() < 0) throw std::domain_error("exact_sqrt: negative input");
    if (q.is_zero()) return BigRational(0);
    BigInt rn = boost::multiprecision::sqrt(q.num());
    if (rn * rn != q.num()) return std::nullopt;
    BigInt rd = boost::multiprecision::sqrt(q.den());
    if (rd * rd != q.den()) return std::nullopt;
    return BigRational(std::move(rn), std::move(rd));
}

BigInt rational_height(const BigRational& q) {
    BigInt n = q.num() < 0 ? BigInt(-q.num()) : q.num();
    return n > q.den() ? n : q.den();
}

}  // namespace cubicrev

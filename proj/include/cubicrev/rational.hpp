// Exact arbitrary-precision rational scalar.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicrev {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always held in canonical form:
/// positive denominator, gcd(|num|, den) = 1, zero represented as 0/1.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long n) : num_(n), den_(1) {}
    explicit BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
    bool is_canonical() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    BigRational inverse() const;
    BigRational abs() const { return num_ < 0 ? -*this : *this; }
    BigRational pow(unsigned e) const;

    double to_double() const;

    /// Canonical text form: "a" when integral, otherwise "a/b".
    std::string to_string() const;
    /// Parses "a", "a/b", or a plain decimal like "-1.25". Throws on malformed input.
    static BigRational from_string(std::string_view s);

private:
    BigInt num_;
    BigInt den_;  // > 0 always
};

/// Exact nonnegative square root when one exists; std::nullopt otherwise.
/// Negative input is rejected.
std::optional<BigRational> exact_sqrt(const BigRational& q);

/// Height of a rational in lowest terms: max(|num|, den).
BigInt rational_height(const BigRational& q);

}  // namespace cubicrev

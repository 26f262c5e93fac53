// Quadratic extension scalars over BigRational: a + b*e (e^2 = -1 - e) and a + b*i.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cubicrev/rational.hpp"

namespace cubicrev {

/// Element a + b*e of Q(e), e a primitive cube root of unity (e^2 + e + 1 = 0).
class EisensteinRational {
public:
    EisensteinRational() = default;
    EisensteinRational(long n) : a_(n) {}
    EisensteinRational(BigRational a) : a_(std::move(a)) {}
    EisensteinRational(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

    static EisensteinRational unit_root() { return {BigRational(0), BigRational(1)}; }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a + b*e -> (a - b) - b*e; fixes exactly the rational elements.
    EisensteinRational conj() const { return {a_ - b_, -b_}; }
    /// Field norm a^2 - a*b + b^2; zero iff the element is zero.
    BigRational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    EisensteinRational operator-() const { return {-a_, -b_}; }
    friend EisensteinRational operator+(const EisensteinRational& x, const EisensteinRational& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend EisensteinRational operator-(const EisensteinRational& x, const EisensteinRational& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    // (a + b e)(c + d e) = ac - bd + (ad + bc - bd) e, using e^2 = -1 - e
    friend EisensteinRational operator*(const EisensteinRational& x, const EisensteinRational& y) {
        BigRational bd = x.b_ * y.b_;
        return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
    }
    friend EisensteinRational operator/(const EisensteinRational& x, const EisensteinRational& y) {
        return x * y.inverse();
    }
    EisensteinRational& operator+=(const EisensteinRational& o) { return *this = *this + o; }
    EisensteinRational& operator-=(const EisensteinRational& o) { return *this = *this - o; }
    EisensteinRational& operator*=(const EisensteinRational& o) { return *this = *this * o; }

    EisensteinRational inverse() const;

    friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const EisensteinRational& x, const EisensteinRational& y) {
        return !(x == y);
    }

    std::string to_string() const;
    static EisensteinRational from_string(std::string_view s);

private:
    BigRational a_;
    BigRational b_;
};

/// Element a + b*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : a_(n) {}
    GaussianRational(BigRational a) : a_(std::move(a)) {}
    GaussianRational(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

    static GaussianRational unit_root() { return {BigRational(0), BigRational(1)}; }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    GaussianRational conj() const { return {a_, -b_}; }
    BigRational norm() const { return a_ * a_ + b_ * b_; }

    GaussianRational operator-() const { return {-a_, -b_}; }
    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        return x * y.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational inverse() const;

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) {
        return !(x == y);
    }

    std::string to_string() const;
    static GaussianRational from_string(std::string_view s);

private:
    BigRational a_;
    BigRational b_;
};

/// Exact square root inside Q(e), when one exists.
std::optional<EisensteinRational> exact_sqrt(const EisensteinRational& z);
/// Exact square root inside Q(i), when one exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

}  // namespace cubicrev

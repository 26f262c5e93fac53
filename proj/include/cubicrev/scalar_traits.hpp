// Uniform access to the four coefficient fields used by the form engine.
#pragma once

#include <complex>
#include <cstdio>
#include <string>

#include "cubicrev/extensions.hpp"
#include "cubicrev/rational.hpp"

namespace cubicrev {

using ComplexDouble = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<BigRational> {
    static constexpr bool is_exact = true;
    static BigRational from_int(long n) { return BigRational(n); }
    static bool is_zero(const BigRational& v) { return v.is_zero(); }
    static std::string to_string(const BigRational& v) { return v.to_string(); }
    static BigRational parse(std::string_view s) { return BigRational::from_string(s); }
};

template <>
struct scalar_traits<EisensteinRational> {
    static constexpr bool is_exact = true;
    static EisensteinRational from_int(long n) { return EisensteinRational(n); }
    static bool is_zero(const EisensteinRational& v) { return v.is_zero(); }
    static std::string to_string(const EisensteinRational& v) { return v.to_string(); }
    static EisensteinRational parse(std::string_view s) {
        return EisensteinRational::from_string(s);
    }
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static GaussianRational from_int(long n) { return GaussianRational(n); }
    static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
    static std::string to_string(const GaussianRational& v) { return v.to_string(); }
    static GaussianRational parse(std::string_view s) { return GaussianRational::from_string(s); }
};

template <>
struct scalar_traits<ComplexDouble> {
    static constexpr bool is_exact = false;
    static ComplexDouble from_int(long n) { return ComplexDouble(double(n), 0.0); }
    static bool is_zero(const ComplexDouble& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static std::string to_string(const ComplexDouble& v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", v.real(), v.imag());
        return buf;
    }
};

// embeddings between coefficient fields
inline EisensteinRational to_eisenstein(const BigRational& q) { return EisensteinRational(q); }
inline GaussianRational to_gaussian(const BigRational& q) { return GaussianRational(q); }
inline ComplexDouble to_complex(const BigRational& q) { return {q.to_double(), 0.0}; }
inline ComplexDouble to_complex(const GaussianRational& z) {
    return {z.a().to_double(), z.b().to_double()};
}
// e = (-1 + i*sqrt(3)) / 2
inline ComplexDouble to_complex(const EisensteinRational& z) {
    static const ComplexDouble eps(-0.5, std::sqrt(3.0) / 2.0);
    return to_complex(z.a()) + to_complex(z.b()) * eps;
}

}  // namespace cubicrev

// Dense homogeneous polynomials in (w, x, y, z), degree <= 3, over a generic scalar field.
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cubicrev/scalar_traits.hpp"

namespace cubicrev {

using Exp4 = std::array<int, 4>;

constexpr std::size_t monomial_count(int degree) {
    // C(degree + 3, 3)
    std::size_t d = static_cast<std::size_t>(degree);
    return (d + 1) * (d + 2) * (d + 3) / 6;
}

/// All exponent 4-tuples of total degree `degree`, ascending lexicographic.
const std::vector<Exp4>& monomial_table(int degree);

/// Position of `e` in monomial_table(degree); throws if absent.
std::size_t monomial_index(int degree, const Exp4& e);

template <class S, int D>
struct HomPoly {
    static constexpr int degree = D;
    static constexpr std::size_t size = monomial_count(D);
    std::array<S, size> c{};

    const S& operator[](std::size_t i) const { return c[i]; }
    S& operator[](std::size_t i) { return c[i]; }

    const S& coeff(const Exp4& e) const { return c[monomial_index(D, e)]; }
    void set(const Exp4& e, S v) { c[monomial_index(D, e)] = std::move(v); }

    bool is_zero() const {
        for (const S& v : c)
            if (!scalar_traits<S>::is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const HomPoly& f, const HomPoly& g) { return f.c == g.c; }
    friend bool operator!=(const HomPoly& f, const HomPoly& g) { return !(f == g); }

    friend HomPoly operator+(const HomPoly& f, const HomPoly& g) {
        HomPoly r;
        for (std::size_t i = 0; i < size; ++i) r.c[i] = f.c[i] + g.c[i];
        return r;
    }
    friend HomPoly operator-(const HomPoly& f, const HomPoly& g) {
        HomPoly r;
        for (std::size_t i = 0; i < size; ++i) r.c[i] = f.c[i] - g.c[i];
        return r;
    }
    friend HomPoly operator*(const S& s, const HomPoly& f) {
        HomPoly r;
        for (std::size_t i = 0; i < size; ++i) r.c[i] = s * f.c[i];
        return r;
    }
};

template <class S>
using LinearForm4 = HomPoly<S, 1>;
template <class S>
using QuadraticForm4 = HomPoly<S, 2>;
template <class S>
using CubicForm4 = HomPoly<S, 3>;

template <class S, int A, int B>
HomPoly<S, A + B> multiply(const HomPoly<S, A>& f, const HomPoly<S, B>& g) {
    HomPoly<S, A + B> r;
    const auto& ta = monomial_table(A);
    const auto& tb = monomial_table(B);
    for (std::size_t i = 0; i < f.size; ++i) {
        if (scalar_traits<S>::is_zero(f.c[i])) continue;
        for (std::size_t j = 0; j < g.size; ++j) {
            if (scalar_traits<S>::is_zero(g.c[j])) continue;
            Exp4 e{ta[i][0] + tb[j][0], ta[i][1] + tb[j][1], ta[i][2] + tb[j][2],
                   ta[i][3] + tb[j][3]};
            std::size_t k = monomial_index(A + B, e);
            r.c[k] = r.c[k] + f.c[i] * g.c[j];
        }
    }
    return r;
}

template <class S, int D>
S evaluate(const HomPoly<S, D>& f, const std::array<S, 4>& p) {
    S acc = scalar_traits<S>::from_int(0);
    const auto& tab = monomial_table(D);
    for (std::size_t i = 0; i < f.size; ++i) {
        if (scalar_traits<S>::is_zero(f.c[i])) continue;
        S term = f.c[i];
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < tab[i][v]; ++k) term = term * p[v];
        acc = acc + term;
    }
    return acc;
}

// formal partial derivative with respect to variable index 0..3
template <class S, int D>
HomPoly<S, D - 1> derivative(const HomPoly<S, D>& f, int var) {
    static_assert(D >= 1);
    HomPoly<S, D - 1> r;
    const auto& tab = monomial_table(D);
    for (std::size_t i = 0; i < f.size; ++i) {
        if (tab[i][var] == 0 || scalar_traits<S>::is_zero(f.c[i])) continue;
        Exp4 e = tab[i];
        e[var] -= 1;
        std::size_t k = monomial_index(D - 1, e);
        r.c[k] = r.c[k] + scalar_traits<S>::from_int(tab[i][var]) * f.c[i];
    }
    return r;
}

/// The four formal partials (f_w, f_x, f_y, f_z).
template <class S>
std::array<QuadraticForm4<S>, 4> gradient(const CubicForm4<S>& f) {
    return {derivative(f, 0), derivative(f, 1), derivative(f, 2), derivative(f, 3)};
}

template <class T, class S, int D, class F>
HomPoly<T, D> map_poly(const HomPoly<S, D>& f, F convert) {
    HomPoly<T, D> r;
    for (std::size_t i = 0; i < f.size; ++i) r.c[i] = convert(f.c[i]);
    return r;
}

template <class S>
struct ProjectivePoint4 {
    std::array<S, 4> v;

    explicit ProjectivePoint4(std::array<S, 4> coords) : v(std::move(coords)) {
        bool all_zero = true;
        for (const S& c : v)
            if (!scalar_traits<S>::is_zero(c)) all_zero = false;
        if (all_zero) throw std::invalid_argument("ProjectivePoint4: all coordinates zero");
    }
    ProjectivePoint4(S w, S x, S y, S z)
        : ProjectivePoint4(std::array<S, 4>{std::move(w), std::move(x), std::move(y), std::move(z)}) {}
};

/// Equality up to a nonzero scalar multiple: all 2x2 minors of [p q] vanish.
template <class S>
bool projectively_equal(const ProjectivePoint4<S>& p, const ProjectivePoint4<S>& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!scalar_traits<S>::is_zero(p.v[i] * q.v[j] - p.v[j] * q.v[i])) return false;
    return true;
}

template <class S>
struct ProjectiveLine {
    ProjectivePoint4<S> p;
    ProjectivePoint4<S> q;

    ProjectiveLine(ProjectivePoint4<S> a, ProjectivePoint4<S> b)
        : p(std::move(a)), q(std::move(b)) {
        if (projectively_equal(p, q))
            throw std::invalid_argument("ProjectiveLine: defining points are dependent");
    }
};

inline Exp4 unit_exp(int var) {
    Exp4 e{0, 0, 0, 0};
    e[var] = 1;
    return e;
}

/// Invertible change of variables; substitute() computes f(M v).
template <class S>
struct LinearSubstitution4 {
    // row j holds the linear form replacing variable j
    std::array<std::array<S, 4>, 4> m;

    static LinearSubstitution4 identity() {
        LinearSubstitution4 s{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                s.m[i][j] = scalar_traits<S>::from_int(i == j ? 1 : 0);
        return s;
    }

    S det() const {
        // cofactor expansion along the first row
        auto minor3 = [&](int skip_col) {
            std::array<int, 3> cols{};
            int n = 0;
            for (int j = 0; j < 4; ++j)
                if (j != skip_col) cols[n++] = j;
            const auto& a = m;
            return a[1][cols[0]] * (a[2][cols[1]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[1]]) -
                   a[1][cols[1]] * (a[2][cols[0]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[0]]) +
                   a[1][cols[2]] * (a[2][cols[0]] * a[3][cols[1]] - a[2][cols[1]] * a[3][cols[0]]);
        };
        S d = scalar_traits<S>::from_int(0);
        for (int j = 0; j < 4; ++j) {
            S term = m[0][j] * minor3(j);
            if (j % 2 == 1) term = scalar_traits<S>::from_int(-1) * term;
            d = d + term;
        }
        return d;
    }
};

/// g with g(v) = f(M v), by exact monomial expansion of the linear forms.
template <class S>
CubicForm4<S> substitute(const CubicForm4<S>& f, const LinearSubstitution4<S>& sub) {
    if (scalar_traits<S>::is_zero(sub.det()))
        throw std::invalid_argument("substitute: singular substitution matrix");
    std::array<LinearForm4<S>, 4> rows;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) rows[j].c[monomial_index(1, unit_exp(k))] = sub.m[j][k];
    CubicForm4<S> g;
    const auto& tab = monomial_table(3);
    for (std::size_t i = 0; i < f.size; ++i) {
        if (scalar_traits<S>::is_zero(f.c[i])) continue;
        // product of the three linear factors of this monomial
        std::array<int, 3> factors{};
        int n = 0;
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < tab[i][v]; ++k) factors[n++] = v;
        QuadraticForm4<S> q = multiply(rows[factors[0]], rows[factors[1]]);
        CubicForm4<S> cube = multiply(q, rows[factors[2]]);
        g = g + f.c[i] * cube;
    }
    return g;
}

/// Coefficients (c0..c3) of f(mu p + lambda q) = sum_k c_k mu^(3-k) lambda^k.
/// f contains the line iff all four vanish.
template <class S>
std::array<S, 4> restrict_to_line(const CubicForm4<S>& f, const ProjectiveLine<S>& line) {
    std::array<S, 4> acc{scalar_traits<S>::from_int(0), scalar_traits<S>::from_int(0),
                         scalar_traits<S>::from_int(0), scalar_traits<S>::from_int(0)};
    const auto& tab = monomial_table(3);
    for (std::size_t i = 0; i < f.size; ++i) {
        if (scalar_traits<S>::is_zero(f.c[i])) continue;
        // expand the product of binomials (p_v mu + q_v lambda)^(e_v)
        std::array<S, 4> term{f.c[i], scalar_traits<S>::from_int(0),
                              scalar_traits<S>::from_int(0), scalar_traits<S>::from_int(0)};
        int deg = 0;
        for (int v = 0; v < 4; ++v) {
            for (int k = 0; k < tab[i][v]; ++k) {
                std::array<S, 4> next{scalar_traits<S>::from_int(0), scalar_traits<S>::from_int(0),
                                      scalar_traits<S>::from_int(0), scalar_traits<S>::from_int(0)};
                for (int d = 0; d <= deg; ++d) {
                    next[d] = next[d] + term[d] * line.p.v[v];
                    next[d + 1] = next[d + 1] + term[d] * line.q.v[v];
                }
                term = next;
                ++deg;
            }
        }
        for (int d = 0; d < 4; ++d) acc[d] = acc[d] + term[d];
    }
    return acc;
}

/// True iff every coefficient of the line restriction vanishes.
template <class S>
bool line_contained(const CubicForm4<S>& f, const ProjectiveLine<S>& line) {
    auto c = restrict_to_line(f, line);
    for (const S& v : c)
        if (!scalar_traits<S>::is_zero(v)) return false;
    return true;
}

/// Rank of a small matrix over an exact field, by Gaussian elimination.
template <class S>
int matrix_rank(std::vector<std::vector<S>> m) {
    static_assert(scalar_traits<S>::is_exact);
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && scalar_traits<S>::is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (scalar_traits<S>::is_zero(m[r][col])) continue;
            S factor = m[r][col] / m[row][col];
            for (std::size_t cc = col; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - factor * m[row][cc];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// JSON form: {"monomials": [{"e": [ew,ex,ey,ez], "c": "<scalar>"}...]},
/// nonzero coefficients only, ascending lexicographic exponent order.
template <class S>
nlohmann::json to_json(const CubicForm4<S>& f) {
    nlohmann::json mono = nlohmann::json::array();
    const auto& tab = monomial_table(3);
    for (std::size_t i = 0; i < f.size; ++i) {
        if (scalar_traits<S>::is_zero(f.c[i])) continue;
        mono.push_back({{"e", tab[i]}, {"c", scalar_traits<S>::to_string(f.c[i])}});
    }
    return nlohmann::json{{"monomials", mono}};
}

template <class S>
CubicForm4<S> cubic_from_json(const nlohmann::json& j) {
    CubicForm4<S> f;
    for (const auto& m : j.at("monomials")) {
        Exp4 e = m.at("e").get<Exp4>();
        f.set(e, scalar_traits<S>::parse(m.at("c").get<std::string>()));
    }
    return f;
}

}  // namespace cubicrev

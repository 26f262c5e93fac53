#include "cubicrev/forms.hpp"

namespace cubicrev {

namespace {

std::vector<Exp4> build_table(int degree) {
    std::vector<Exp4> t;
    t.reserve(monomial_count(degree));
    for (int ew = 0; ew <= degree; ++ew)
        for (int ex = 0; ex <= degree - ew; ++ex)
            for (int ey = 0; ey <= degree - ew - ex; ++ey)
                t.push_back(Exp4{ew, ex, ey, degree - ew - ex - ey});
    return t;
}

}  // namespace

const std::vector<Exp4>& monomial_table(int degree) {
    static const std::vector<Exp4> t0 = build_table(0);
    static const std::vector<Exp4> t1 = build_table(1);
    static const std::vector<Exp4> t2 = build_table(2);
    static const std::vector<Exp4> t3 = build_table(3);
    switch (degree) {
        case 0: return t0;
        case 1: return t1;
        case 2: return t2;
        case 3: return t3;
        default: throw std::invalid_argument("monomial_table: unsupported degree");
    }
}

std::size_t monomial_index(int degree, const Exp4& e) {
    const auto& tab = monomial_table(degree);
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (tab[i] == e) return i;
    throw std::invalid_argument("monomial_index: exponent tuple not of this degree");
}

}  // namespace cubicrev

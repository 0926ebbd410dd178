#pragma once

#include "lform/matrix.hpp"

#include <random>

namespace lform::testing {

using Rng = std::mt19937_64;

inline Int rand_coeff(Rng& rng, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return Int(d(rng));
}

inline LaurentPoly rand_poly(Rng& rng, int max_deg = 2, int coeff_bound = 3) {
    LaurentPoly p;
    std::uniform_int_distribution<int> e(-max_deg, max_deg);
    std::uniform_int_distribution<int> nterms(0, 3);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(rand_coeff(rng, coeff_bound), e(rng));
    return p;
}

inline LaurentPoly rand_nonzero_poly(Rng& rng, int max_deg = 2, int coeff_bound = 3) {
    for (;;) {
        LaurentPoly p = rand_poly(rng, max_deg, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

inline LaurentPoly rand_symmetric_poly(Rng& rng, int max_deg = 2, int coeff_bound = 3) {
    LaurentPoly p(rand_coeff(rng, coeff_bound));
    std::uniform_int_distribution<int> e(1, max_deg);
    std::uniform_int_distribution<int> nterms(0, 2);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        const auto k = e(rng);
        const auto c = rand_coeff(rng, coeff_bound);
        p += LaurentPoly::monomial(c, k) + LaurentPoly::monomial(c, -k);
    }
    return p;
}

inline RingUnit rand_unit(Rng& rng, int exp_bound = 3) {
    std::uniform_int_distribution<int> e(-exp_bound, exp_bound);
    std::uniform_int_distribution<int> s(0, 1);
    return RingUnit(s(rng) ? 1 : -1, e(rng));
}

/// Random Hermitian matrix over Z[t^±1], retried until det != 0.
inline PolyMatrix rand_hermitian(Rng& rng, std::size_t n, int max_deg = 2, int coeff_bound = 3) {
    for (;;) {
        PolyMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            a(i, i) = rand_symmetric_poly(rng, max_deg, coeff_bound);
            for (std::size_t j = i + 1; j < n; ++j) {
                a(i, j) = rand_poly(rng, max_deg, coeff_bound);
                a(j, i) = a(i, j).involute();
            }
        }
        if (!det_ring(a).is_zero()) return a;
    }
}

/// Independent determinant oracle: cofactor expansion along the first row.
template <class R>
inline R cofactor_det(const Matrix<R>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return R(1);
    if (n == 1) return a(0, 0);
    R acc(0);
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const R minor = cofactor_det(a.submatrix(rows, cols));
        const R term = a(0, j) * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Random nonsingular matrix over Q(t) with small polynomial entries.
inline RatFunMatrix rand_nonsingular_ratfun(Rng& rng, std::size_t n, int max_deg = 1,
                                            int coeff_bound = 3) {
    for (;;) {
        RatFunMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = RatFun(rand_poly(rng, max_deg, coeff_bound));
        if (!det_field(a).is_zero()) return a;
    }
}

} // namespace lform::testing

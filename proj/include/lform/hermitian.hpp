#pragma once

#include "lform/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lform {

/// True iff A equals its conjugate transpose. Throws on non-square input.
inline bool check_hermitian(const PolyMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("check_hermitian: matrix must be square");
    return a == a.conj_transpose();
}

/**
 * Hermitian form over Z[t^±1]: a square matrix A with A equal to its
 * conjugate transpose under t -> t^-1.
 */
class HermitianForm {
public:
    explicit HermitianForm(PolyMatrix a) : a_(std::move(a)) {
        if (!check_hermitian(a_)) throw std::invalid_argument("matrix is not Hermitian");
    }

    const PolyMatrix& matrix() const { return a_; }
    std::size_t size() const { return a_.rows(); }

    LaurentPoly det() const { return det_ring(a_); }
    bool nondegenerate() const { return !det().is_zero(); }

    friend HermitianForm direct_sum(const HermitianForm& a, const HermitianForm& b) {
        return HermitianForm(direct_sum(a.a_, b.a_));
    }

    friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
        return a.a_ == b.a_;
    }

private:
    PolyMatrix a_;
};

/// The rank-two even form (0, t-1; t^-1-1, 0).
inline HermitianForm hyperbolic_h2() {
    PolyMatrix m(2, 2);
    m(0, 1) = LaurentPoly::monomial(1, 1) - LaurentPoly(1);
    m(1, 0) = LaurentPoly::monomial(1, -1) - LaurentPoly(1);
    return HermitianForm(m);
}

/// Direct sum of g copies of the hyperbolic form.
inline HermitianForm h2_power(std::size_t g) {
    if (g == 0) return HermitianForm(PolyMatrix(0, 0));
    HermitianForm f = hyperbolic_h2();
    for (std::size_t i = 1; i < g; ++i) f = direct_sum(f, hyperbolic_h2());
    return f;
}

/**
 * Evenness test: the form is even iff each diagonal entry d decomposes as
 * q + q̄, which for symmetric d happens exactly when its constant
 * coefficient is even. On success `witness[i]` satisfies
 * witness[i] + involute(witness[i]) = A[i][i] exactly.
 */
inline std::optional<std::vector<LaurentPoly>> is_even(const HermitianForm& form) {
    const auto& a = form.matrix();
    std::vector<LaurentPoly> witness;
    witness.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const LaurentPoly& d = a(i, i);
        const Int c0 = d.coeff(0);
        if (!is_even_int(c0)) return std::nullopt;
        LaurentPoly q(c0 / 2);
        for (const auto& [k, c] : d.coeffs())
            if (k > 0) q += LaurentPoly::monomial(c, k);
        witness.push_back(std::move(q));
    }
    return witness;
}

/// Entrywise evaluation at t = 1; symmetric by Hermitian symmetry.
inline IntMatrix augment(const HermitianForm& form) {
    return form.matrix().map([](const LaurentPoly& p) { return p.evaluate_at_one(); });
}

struct AutSearchResult {
    std::vector<PolyMatrix> isometries;
    bool rank1_complete = false; // the returned list generates all of Aut
    std::string note;
};

namespace detail {

inline std::vector<LaurentPoly> entry_pool(std::int64_t deg_bound, const Int& coeff_bound) {
    const long c = coeff_bound.convert_to<long>();
    const std::size_t slots = static_cast<std::size_t>(2 * deg_bound + 1);
    std::vector<LaurentPoly> pool;
    std::vector<long> odo(slots, -c);
    for (;;) {
        LaurentPoly p;
        for (std::size_t s = 0; s < slots; ++s)
            p += LaurentPoly::monomial(Int(odo[s]), static_cast<std::int64_t>(s) - deg_bound);
        pool.push_back(p);
        std::size_t i = 0;
        while (i < slots && odo[i] == c) odo[i++] = -c;
        if (i == slots) break;
        ++odo[i];
    }
    return pool;
}

} // namespace detail

/**
 * All isometries U of the form (conj-transpose U) A U = A, with every
 * entry supported on exponents in [-deg_bound, deg_bound] and coefficients
 * bounded by coeff_bound, unimodular over Z[t^±1]. Exhaustive within those
 * bounds for n >= 2. For n = 1 returns the generators {(-1), (t)} of the
 * full group: a rank-one isometry u satisfies u·ū = 1, hence u = ±t^k.
 */
inline AutSearchResult aut_search_bounded(const HermitianForm& form, std::int64_t deg_bound,
                                          Int coeff_bound, std::size_t cap = 4000000) {
    if (!form.nondegenerate())
        throw std::invalid_argument("aut_search_bounded: form must be nondegenerate");
    AutSearchResult out;
    const std::size_t n = form.size();
    if (n == 0) {
        out.rank1_complete = true;
        out.note = "empty form";
        return out;
    }
    if (n == 1) {
        PolyMatrix minus(1, 1), tgen(1, 1);
        minus(0, 0) = LaurentPoly(-1);
        tgen(0, 0) = LaurentPoly::t();
        out.isometries = {minus, tgen};
        out.rank1_complete = true;
        out.note = "u·conj(u) = 1 forces u = ±t^k; generated by -1 and t";
        return out;
    }

    const auto pool = detail::entry_pool(deg_bound, coeff_bound);
    double per_col = 1;
    for (std::size_t i = 0; i < n; ++i) per_col *= static_cast<double>(pool.size());
    if (per_col > static_cast<double>(cap))
        throw std::invalid_argument("aut_search_bounded: bounds give too many candidates");

    const auto& a = form.matrix();
    std::vector<std::vector<LaurentPoly>> cols(n);
    std::vector<std::vector<LaurentPoly>> a_cols(n); // A * u_j, cached per chosen column

    // candidate columns, generated once
    std::vector<std::vector<LaurentPoly>> candidates;
    {
        std::vector<std::size_t> odo(n, 0);
        for (;;) {
            std::vector<LaurentPoly> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = pool[odo[i]];
            candidates.push_back(std::move(v));
            std::size_t i = 0;
            while (i < n && odo[i] == pool.size() - 1) odo[i++] = 0;
            if (i == n) break;
            ++odo[i];
        }
    }

    auto mul_col = [&](const std::vector<LaurentPoly>& v) {
        std::vector<LaurentPoly> r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) r[i] += a(i, k) * v[k];
        return r;
    };
    auto herm_pair = [&](const std::vector<LaurentPoly>& u, const std::vector<LaurentPoly>& av) {
        LaurentPoly s;
        for (std::size_t i = 0; i < n; ++i) s += u[i].involute() * av[i];
        return s;
    };

    std::vector<std::vector<LaurentPoly>> chosen;
    std::vector<std::vector<LaurentPoly>> chosen_av;

    std::function<void(std::size_t)> dfs = [&](std::size_t j) {
        if (j == n) {
            PolyMatrix u(n, n);
            for (std::size_t col = 0; col < n; ++col) u.set_column(col, chosen[col]);
            const auto d = det_ring(u);
            if (d.as_unit().has_value()) out.isometries.push_back(u);
            return;
        }
        for (const auto& v : candidates) {
            auto av = mul_col(v);
            if (herm_pair(v, av) != a(j, j)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (herm_pair(chosen[i], av) != a(i, j)) ok = false;
            if (!ok) continue;
            chosen.push_back(v);
            chosen_av.push_back(std::move(av));
            dfs(j + 1);
            chosen.pop_back();
            chosen_av.pop_back();
        }
    };
    dfs(0);
    out.note = "exhaustive within bounds";
    return out;
}

} // namespace lform

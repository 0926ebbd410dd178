#pragma once

#include "lform/bezout.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lform {

/// The quotient ring Z[t^±1]/(m). Residues are not canonicalized; only
/// ideal membership is ever decided, by exact division.
struct ModulusRing {
    LaurentPoly modulus;

    explicit ModulusRing(LaurentPoly m) : modulus(std::move(m)) {
        if (modulus.is_zero()) throw std::invalid_argument("ModulusRing: zero modulus");
    }

    bool contains(const LaurentPoly& v) const { return divides(modulus, v); }
    bool congruent(const LaurentPoly& a, const LaurentPoly& b) const { return contains(a - b); }
};

/// u is a unitary unit of Z[t^±1]/(m): u·conj(u) = 1 in the quotient.
inline bool is_unitary_unit(const LaurentPoly& u, const LaurentPoly& m) {
    if (m.is_zero()) throw std::invalid_argument("is_unitary_unit: zero modulus");
    return divides(m, u * u.involute() - LaurentPoly(1));
}

/**
 * A coprime symmetric factorization P = a·b with Bézout witness
 * a·x + b·y = 1. Unordered; (a,b) and (-a,-b) represent the same class.
 */
struct Factorization {
    LaurentPoly a, b; // symmetric, a·b = P
    LaurentPoly x, y; // a·x + b·y = 1

    void validate() const {
        if (!a.is_symmetric() || !b.is_symmetric())
            throw std::invalid_argument("Factorization: factors must be symmetric");
        if (a * x + b * y != LaurentPoly(1))
            throw std::invalid_argument("Factorization: witness identity fails");
    }
};

/**
 * The unitary unit Phi(a,b) = -a·x + b·y of Z[t^±1]/(2ab). Independent of
 * the Bézout witness modulo 2ab; swapping a and b changes it by the unit -1.
 */
inline LaurentPoly phi(const Factorization& f) {
    f.validate();
    const LaurentPoly u = -(f.a * f.x) + f.b * f.y;
    const LaurentPoly m = LaurentPoly(2) * f.a * f.b;
    if (!m.is_zero() && !is_unitary_unit(u, m))
        throw std::logic_error("phi: residue failed the unitarity check");
    return u;
}

/// phi against an explicit modulus (defaulting to 2ab elsewhere).
inline LaurentPoly phi(const Factorization& f, const LaurentPoly& m) {
    f.validate();
    const LaurentPoly u = -(f.a * f.x) + f.b * f.y;
    if (!is_unitary_unit(u, m)) throw std::logic_error("phi: residue failed the unitarity check");
    return u;
}

struct FactorizationList {
    std::vector<Factorization> items;
    /// true when some candidate pair had an inconclusive Bézout search, so
    /// the count is only a lower bound for n_P
    bool lower_bound_only = false;

    std::size_t count() const { return items.size(); }
};

namespace detail {

/// Exact square root in Z[t^±1], up to global sign (returns the root with
/// positive leading coefficient).
inline std::optional<LaurentPoly> laurent_sqrt(const LaurentPoly& q) {
    if (q.is_zero()) return LaurentPoly(0);
    if (q.min_exp() % 2 != 0 || q.max_exp() % 2 != 0) return std::nullopt;
    const auto v = q.min_exp();
    ZxPoly Q = zx_from(q); // constant term nonzero
    const int D = zx_deg(Q);
    if (D % 2 != 0) return std::nullopt;
    const int d = D / 2;
    // leading coefficient must be a perfect square
    if (Q.back() < 0) return std::nullopt;
    Int lead = boost::multiprecision::sqrt(Q.back());
    if (lead * lead != Q.back()) return std::nullopt;
    ZxPoly s(static_cast<std::size_t>(d) + 1, Int(0));
    s[static_cast<std::size_t>(d)] = lead;
    for (int k = d - 1; k >= 0; --k) {
        // match the coefficient of t^(d+k): 2 s_d s_k + sum_{i+j=d+k, d>i,j>k} s_i s_j
        Int acc = 0;
        for (int i = d; i > k; --i) {
            const int j = d + k - i;
            if (j <= k || j > d) continue;
            acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        const Int target = Q[static_cast<std::size_t>(d + k)] - acc;
        const Int twice = 2 * lead;
        if (target % twice != 0) return std::nullopt;
        s[static_cast<std::size_t>(k)] = target / twice;
    }
    const LaurentPoly root = zx_to_laurent(s).shifted(v / 2);
    if (root * root != q) return std::nullopt;
    return root;
}

inline std::string pair_key(const LaurentPoly& a, const LaurentPoly& b) {
    const auto str = [](const LaurentPoly& p, const LaurentPoly& q) {
        return to_string(p) + " || " + to_string(q);
    };
    std::string best = str(a, b);
    for (const auto& cand : {str(b, a), str(-a, -b), str(-b, -a)})
        if (cand < best) best = cand;
    return best;
}

inline std::vector<Int> positive_divisors(Int n) {
    n = abs_int(n);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    return divs;
}

} // namespace detail

/**
 * Enumerates unordered factorizations P = a·b into symmetric coprime
 * factors with a Bézout identity, the count n_P of the unit-class bound.
 *
 * For integer P the enumeration over divisor pairs is complete. For
 * non-constant P the candidates come from integer-content splitting,
 * caller-supplied symmetric factor hints (closed under subset products),
 * and the quadratic shift P = a(a+1); each candidate is certified by the
 * Bézout search, so the returned count is a lower bound whenever that
 * search reports unknown on some pair.
 */
inline FactorizationList coprime_symmetric_factorizations(
    const LaurentPoly& P, const std::vector<LaurentPoly>& factor_hints = {}) {
    if (P.is_zero()) throw std::invalid_argument("factorizations: P must be nonzero");
    if (!P.is_symmetric()) throw std::invalid_argument("factorizations: P must be symmetric");

    FactorizationList out;
    std::set<std::string> seen;
    auto consider = [&](const LaurentPoly& a, const LaurentPoly& b) {
        if (a * b != P) return;
        if (!a.is_symmetric() || !b.is_symmetric()) return;
        const auto key = detail::pair_key(a, b);
        if (!seen.insert(key).second) return;
        auto bez = bezout_one(a, b);
        if (bez.found()) {
            out.items.push_back(Factorization{a, b, bez.x, bez.y});
        } else if (bez.unknown()) {
            out.lower_bound_only = true;
        }
    };

    if (P.is_constant()) {
        const Int n = P.constant_value();
        for (const auto& d : detail::positive_divisors(n))
            consider(LaurentPoly(d), LaurentPoly(n / d));
        return out;
    }

    const Int content = P.content();
    const auto prim = divide_exact(P, LaurentPoly(content));
    if (!prim) throw std::logic_error("factorizations: content division failed");

    // polynomial splittings of the primitive part
    std::vector<std::pair<LaurentPoly, LaurentPoly>> splittings;
    splittings.emplace_back(LaurentPoly(1), *prim);
    {
        // subset products of the symmetric hints that divide prim
        std::vector<LaurentPoly> sym_hints;
        for (const auto& h : factor_hints)
            if (h.is_symmetric() && !h.is_zero() && !h.as_unit()) sym_hints.push_back(h);
        const std::size_t hn = std::min<std::size_t>(sym_hints.size(), 12);
        for (std::size_t mask = 1; mask < (std::size_t(1) << hn); ++mask) {
            LaurentPoly f(1);
            for (std::size_t i = 0; i < hn; ++i)
                if (mask & (std::size_t(1) << i)) f *= sym_hints[i];
            auto g = divide_exact(*prim, f);
            if (g && g->is_symmetric()) splittings.emplace_back(f, *g);
        }
        // quadratic shift: prim = a(a+1) iff 1 + 4*prim is a square
        if (auto s = detail::laurent_sqrt(LaurentPoly(1) + LaurentPoly(4) * *prim)) {
            const LaurentPoly sm1 = *s - LaurentPoly(1);
            if (sm1.coeffs_divisible_by(2)) {
                auto a = divide_exact(sm1, LaurentPoly(2));
                if (a && a->is_symmetric()) splittings.emplace_back(*a, *a + LaurentPoly(1));
            }
        }
    }

    for (const auto& d : detail::positive_divisors(content)) {
        const Int e = content / d;
        for (const auto& [f, g] : splittings) {
            consider(f.scaled(d), g.scaled(e));
            consider(g.scaled(d), f.scaled(e));
        }
    }
    return out;
}

/**
 * Lower bound for |U(Z[t^±1]/2P)/U(Z[t^±1])|: number of pairwise distinct
 * classes among the Phi values of the coprime symmetric factorizations.
 *
 * Classes of u, u' coincide iff u - v·u' is divisible by 2P for a unit
 * v = ±t^k. Every Phi value is congruent to 1 mod 2 (Phi - 1 = -2ax), and
 * reduction mod 2 forces v = ±1; the implementation re-verifies that
 * congruence for each residue before testing only v = ±1.
 */
inline std::size_t distinct_classes(const LaurentPoly& P,
                                    const std::vector<LaurentPoly>& factor_hints = {}) {
    const auto facs = coprime_symmetric_factorizations(P, factor_hints);
    const LaurentPoly m = LaurentPoly(2) * P;
    std::vector<LaurentPoly> reps;
    for (const auto& f : facs.items) {
        const LaurentPoly u = phi(f);
        if (!(u - LaurentPoly(1)).coeffs_divisible_by(2))
            throw std::logic_error("distinct_classes: residue not congruent to 1 mod 2");
        bool fresh = true;
        for (const auto& r : reps) {
            if (divides(m, u - r) || divides(m, u + r)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(u);
    }
    return reps.size();
}

} // namespace lform

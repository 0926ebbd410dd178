#pragma once

#include "lform/matrix.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lform {

/// Symmetric integer bilinear form.
class IntSymForm {
public:
    explicit IntSymForm(IntMatrix s) : s_(std::move(s)) {
        if (!s_.is_square()) throw std::invalid_argument("IntSymForm: matrix must be square");
        if (s_ != s_.transpose()) throw std::invalid_argument("IntSymForm: matrix must be symmetric");
    }

    const IntMatrix& matrix() const { return s_; }
    std::size_t size() const { return s_.rows(); }

    friend IntSymForm direct_sum(const IntSymForm& a, const IntSymForm& b) {
        return IntSymForm(direct_sum(a.matrix(), b.matrix()));
    }

    /// S ⊕ 0^k.
    IntSymForm padded(std::size_t k) const {
        return IntSymForm(direct_sum(s_, IntMatrix(k, k)));
    }

    friend bool operator==(const IntSymForm& a, const IntSymForm& b) { return a.s_ == b.s_; }

private:
    IntMatrix s_;
};

namespace detail {

/// All size-k subsets of {0, ..., n-1}, each ascending.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> sel;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (sel.size() == k) {
            out.push_back(sel);
            return;
        }
        for (std::size_t i = start; i + (k - sel.size()) <= n; ++i) {
            sel.push_back(i);
            rec(i + 1);
            sel.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace detail

struct IntInvariants {
    std::size_t rank = 0;
    long signature = 0;   // #positive - #negative diagonal entries
    bool even = false;    // x^T S x in 2Z for all integer x
    Int det_nondeg = 1;   // determinant of the nondegenerate part (1 if rank 0)
};

/**
 * Congruence invariants of a symmetric integer form: rank and signature by
 * exact symmetric diagonalization over Q, parity by diagonal evenness, and
 * the determinant of the form with the radical split off (computed as the
 * signed gcd of all rank-sized minors).
 */
inline IntInvariants int_invariants(const IntSymForm& form) {
    IntInvariants inv;
    const std::size_t n = form.size();
    Matrix<Rat> m = form.matrix().map([](const Int& v) { return Rat(v); });

    // congruence diagonalization with symmetric pivoting
    std::size_t pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_i = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, i) != 0) {
                    swap_i = i;
                    break;
                }
            if (swap_i < n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_i, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, swap_i));
            } else {
                // all remaining diagonal entries vanish: absorb an
                // off-diagonal 2x2 block by a row+column addition
                std::size_t j_found = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (m(k, j) != 0) {
                        j_found = j;
                        break;
                    }
                if (j_found == n) continue; // zero row: radical direction
                for (std::size_t j = 0; j < n; ++j) m(k, j) += m(j_found, j);
                for (std::size_t i = 0; i < n; ++i) m(i, k) += m(i, j_found);
            }
        }
        if (m(k, k) == 0) continue;
        if (m(k, k) > 0) ++pos;
        else ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rat f = m(i, k) / m(k, k);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
            for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
        }
    }
    inv.rank = pos + neg;
    inv.signature = static_cast<long>(pos) - static_cast<long>(neg);

    inv.even = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_even_int(form.matrix()(i, i))) {
            inv.even = false;
            break;
        }

    // |det| of the nondegenerate part = gcd of all rank x rank minors
    const std::size_t r = inv.rank;
    if (r == 0) {
        inv.det_nondeg = 1;
        return inv;
    }
    Int g = 0;
    const auto subsets = detail::index_subsets(n, r);
    for (const auto& rows_sel : subsets) {
        for (const auto& cols_sel : subsets) {
            g = gcd_int(g, det_ring(form.matrix().submatrix(rows_sel, cols_sel)));
            if (g == 1) break;
        }
        if (g == 1) break;
    }
    if (g < 0) g = -g;
    inv.det_nondeg = (neg % 2 == 1) ? Int(-g) : g;
    return inv;
}

struct CongruenceVerdict {
    enum class Kind { congruent, not_congruent, inconclusive };
    Kind kind = Kind::inconclusive;
    std::optional<IntMatrix> witness; // U with U^T S1 U = S2, det U = ±1
    std::string obstruction;          // one of rank/signature/determinant/parity
    Int bound_used = 0;

    bool congruent() const { return kind == Kind::congruent; }
    bool not_congruent() const { return kind == Kind::not_congruent; }
};

namespace detail {

inline std::vector<std::vector<Int>> bounded_vectors(std::size_t n, long b) {
    std::vector<std::vector<Int>> out;
    std::vector<long> odo(n, -b);
    for (;;) {
        out.emplace_back(odo.begin(), odo.end());
        std::size_t i = 0;
        while (i < n && odo[i] == b) odo[i++] = -b;
        if (i == n) break;
        ++odo[i];
    }
    // small vectors first so canonical witnesses (like the identity) win
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        Int nx = 0, ny = 0;
        for (const auto& v : x) nx += abs_int(v);
        for (const auto& v : y) ny += abs_int(v);
        return nx < ny;
    });
    return out;
}

} // namespace detail

/**
 * Decides congruence of symmetric integer forms: first a screen by the
 * invariants (rank, signature, determinant, parity), then an exhaustive
 * search for a unimodular U with entries bounded by coeff_bound satisfying
 * U^T S1 U = S2. Sizes above 4 are reported inconclusive after the screen.
 */
inline CongruenceVerdict int_congruent_bounded(const IntSymForm& s1, const IntSymForm& s2,
                                               Int coeff_bound = 3) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("int_congruent_bounded: size mismatch");
    CongruenceVerdict v;
    v.bound_used = coeff_bound;
    const std::size_t n = s1.size();
    if (s1 == s2) {
        v.kind = CongruenceVerdict::Kind::congruent;
        v.witness = IntMatrix::identity(n);
        return v;
    }
    const auto i1 = int_invariants(s1), i2 = int_invariants(s2);
    auto fail = [&](const char* name) {
        v.kind = CongruenceVerdict::Kind::not_congruent;
        v.obstruction = name;
        return v;
    };
    if (i1.rank != i2.rank) return fail("rank");
    if (i1.signature != i2.signature) return fail("signature");
    if (i1.det_nondeg != i2.det_nondeg) return fail("determinant");
    if (i1.even != i2.even) return fail("parity");

    if (n > 4) {
        v.kind = CongruenceVerdict::Kind::inconclusive;
        return v;
    }

    const auto cands = detail::bounded_vectors(n, coeff_bound.convert_to<long>());
    const auto& a = s1.matrix();
    auto mul = [&](const std::vector<Int>& x) {
        std::vector<Int> r(n, Int(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) r[i] += a(i, k) * x[k];
        return r;
    };
    auto dot = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
        return s;
    };

    std::vector<std::vector<Int>> chosen, chosen_a;
    std::function<bool(std::size_t)> dfs = [&](std::size_t j) -> bool {
        if (j == n) {
            IntMatrix u(n, n);
            for (std::size_t col = 0; col < n; ++col) u.set_column(col, chosen[col]);
            const Int d = det_ring(u);
            if (d != 1 && d != -1) return false;
            v.kind = CongruenceVerdict::Kind::congruent;
            v.witness = u;
            return true;
        }
        for (const auto& x : cands) {
            auto ax = mul(x);
            if (dot(x, ax) != s2.matrix()(j, j)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (dot(chosen[i], ax) != s2.matrix()(i, j)) ok = false;
            if (!ok) continue;
            chosen.push_back(x);
            chosen_a.push_back(ax);
            if (dfs(j + 1)) return true;
            chosen.pop_back();
            chosen_a.pop_back();
        }
        return false;
    };
    if (dfs(0)) {
        // exact recheck of the witness
        IntMatrix u = *v.witness;
        if (u.transpose() * s1.matrix() * u != s2.matrix())
            throw std::logic_error("int_congruent_bounded: witness recheck failed");
        return v;
    }
    v.kind = CongruenceVerdict::Kind::inconclusive;
    return v;
}

} // namespace lform

#pragma once

#include "lform/ratfun.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lform {

inline LaurentPoly lf_conj(const LaurentPoly& p) { return p.involute(); }
inline RatFun lf_conj(const RatFun& f) { return f.conj(); }
inline Int lf_conj(const Int& x) { return x; }
inline Rat lf_conj(const Rat& x) { return x; }

inline bool lf_is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool lf_is_zero(const RatFun& f) { return f.is_zero(); }
inline bool lf_is_zero(const Int& x) { return x == 0; }
inline bool lf_is_zero(const Rat& x) { return x == 0; }

/// Dense row-major matrix over an exact coefficient type.
template <class T>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : r_(rows), c_(cols), d_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = m.d_[i] + b.d_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = m.d_[i] - b.d_[i];
        return m;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.d_) x = T(0) - x;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                if (lf_is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    m(i, j) = m(i, j) + a(i, k) * b(k, j);
            }
        return m;
    }

    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& x : m.d_) x = x * s;
        return m;
    }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix conj() const {
        Matrix m = *this;
        for (auto& x : m.d_) x = lf_conj(x);
        return m;
    }

    Matrix conj_transpose() const { return conj().transpose(); }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!lf_is_zero(x)) return false;
        return true;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(c_);
        for (std::size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    void set_column(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    Matrix submatrix(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const {
        Matrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
        return m;
    }

    /// Block diagonal sum.
    friend Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix m(a.r_ + b.r_, a.c_ + b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) m(a.r_ + i, a.c_ + j) = b(i, j);
        return m;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t r_, c_;
    std::vector<T> d_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using RatFunMatrix = Matrix<RatFun>;
using IntMatrix = Matrix<Int>;

inline RatFunMatrix to_ratfun_matrix(const PolyMatrix& a) {
    return a.map([](const LaurentPoly& p) { return RatFun(p); });
}

/// Entrywise conversion back to Z[t^±1]; nullopt if any entry is not integral.
inline std::optional<PolyMatrix> to_poly_matrix(const RatFunMatrix& a) {
    PolyMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_integral_laurent()) return std::nullopt;
            m(i, j) = a(i, j).to_laurent();
        }
    return m;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over a field (RatFun or Rat)
// ---------------------------------------------------------------------------

/// Result of Gaussian column reduction: pivot column indices, in order.
template <class F>
struct ColumnReduction {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Rank via Gaussian elimination (works on a copy).
template <class F>
std::size_t rank_field(Matrix<F> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && lf_is_zero(a(piv, pc))) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(pr, j));
        const F inv = F(1) / a(pr, pc);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (lf_is_zero(a(i, pc))) continue;
            const F f = a(i, pc) * inv;
            for (std::size_t j = pc; j < cols; ++j) a(i, j) = a(i, j) - f * a(pr, j);
        }
        ++pr;
        ++rank;
    }
    return rank;
}

/// Pivot columns of the column-space, scanning left to right.
template <class F>
ColumnReduction<F> column_reduce(Matrix<F> a) {
    ColumnReduction<F> out;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && lf_is_zero(a(piv, pc))) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(pr, j));
        const F inv = F(1) / a(pr, pc);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (lf_is_zero(a(i, pc))) continue;
            const F f = a(i, pc) * inv;
            for (std::size_t j = pc; j < cols; ++j) a(i, j) = a(i, j) - f * a(pr, j);
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

template <class F>
F det_field(Matrix<F> a) {
    if (!a.is_square()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = a.rows();
    F det = F(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && lf_is_zero(a(piv, k))) ++piv;
        if (piv == n) return F(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            det = F(0) - det;
        }
        det = det * a(k, k);
        const F inv = F(1) / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (lf_is_zero(a(i, k))) continue;
            const F f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    return det;
}

template <class F>
std::optional<Matrix<F>> inverse_field(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> a = m, inv = Matrix<F>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && lf_is_zero(a(piv, k))) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        const F d = F(1) / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) * d;
            inv(k, j) = inv(k, j) * d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || lf_is_zero(a(i, k))) continue;
            const F f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Solves a x = b; nullopt when inconsistent. Free variables are set to 0.
template <class F>
std::optional<std::vector<F>> solve_field(Matrix<F> a, std::vector<F> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("solve_field: rhs size mismatch");
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && lf_is_zero(a(piv, pc))) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(pr, j));
        std::swap(b[piv], b[pr]);
        const F d = F(1) / a(pr, pc);
        for (std::size_t j = 0; j < cols; ++j) a(pr, j) = a(pr, j) * d;
        b[pr] = b[pr] * d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || lf_is_zero(a(i, pc))) continue;
            const F f = a(i, pc);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = a(i, j) - f * a(pr, j);
            b[i] = b[i] - f * b[pr];
        }
        pivot_of_col[pc] = pr;
        ++pr;
    }
    for (std::size_t i = pr; i < rows; ++i)
        if (!lf_is_zero(b[i])) return std::nullopt;
    std::vector<F> x(cols, F(0));
    for (std::size_t j = 0; j < cols; ++j)
        if (pivot_of_col[j] != SIZE_MAX) x[j] = b[pivot_of_col[j]];
    return x;
}

/// Basis of the right kernel.
template <class F>
std::vector<std::vector<F>> kernel_field(Matrix<F> a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && lf_is_zero(a(piv, pc))) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(pr, j));
        const F d = F(1) / a(pr, pc);
        for (std::size_t j = 0; j < cols; ++j) a(pr, j) = a(pr, j) * d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || lf_is_zero(a(i, pc))) continue;
            const F f = a(i, pc);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = a(i, j) - f * a(pr, j);
        }
        pivot_of_col[pc] = pr;
        ++pr;
    }
    std::vector<std::vector<F>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_of_col[j] != SIZE_MAX) continue;
        std::vector<F> v(cols, F(0));
        v[j] = F(1);
        for (std::size_t k = 0; k < cols; ++k)
            if (pivot_of_col[k] != SIZE_MAX) v[k] = F(0) - a(pivot_of_col[k], j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over the rings Z[t^±1] and Z
// ---------------------------------------------------------------------------

namespace detail {
inline std::optional<LaurentPoly> ring_div(const LaurentPoly& a, const LaurentPoly& b) {
    return divide_exact(a, b);
}
inline std::optional<Int> ring_div(const Int& a, const Int& b) {
    if (b == 0) return std::nullopt;
    if (a % b != 0) return std::nullopt;
    return Int(a / b);
}
} // namespace detail

/// Fraction-free Bareiss determinant over an integral domain with exact division.
template <class R>
R det_ring(Matrix<R> a) {
    if (!a.is_square()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return R(1);
    R prev = R(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && lf_is_zero(a(piv, k))) ++piv;
        if (piv == n) return R(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                auto q = detail::ring_div(num, prev);
                if (!q) throw std::logic_error("det_ring: inexact Bareiss division");
                a(i, j) = *q;
            }
        prev = a(k, k);
    }
    R d = a(n - 1, n - 1);
    return sign < 0 ? R(0) - d : d;
}

/// Classical adjugate (transposed cofactor matrix): adj(A)·A = det(A)·I.
template <class R>
Matrix<R> adjugate_ring(const Matrix<R>& a) {
    if (!a.is_square()) throw std::invalid_argument("adjugate of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<R> adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = R(1);
        return adj;
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rs, cs;
            for (auto r : all)
                if (r != i) rs.push_back(r);
            for (auto c : all)
                if (c != j) cs.push_back(c);
            R m = det_ring(a.submatrix(rs, cs));
            if ((i + j) % 2 != 0) m = R(0) - m;
            adj(j, i) = m; // transposed cofactor
        }
    return adj;
}

} // namespace lform

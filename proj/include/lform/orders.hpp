#pragma once

#include "lform/bezout.hpp"
#include "lform/intform.hpp" // detail::index_subsets
#include "lform/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lform {

/// Order of a module, well defined up to ±t^k; stored normalized
/// (positive leading coefficient, lowest exponent 0). Equality is ≐.
class OrderPoly {
public:
    OrderPoly() = default;
    explicit OrderPoly(const LaurentPoly& rep) : rep_(rep.normalized()) {}

    const LaurentPoly& representative() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_unit() const { return rep_ == LaurentPoly(1); }

    friend bool operator==(const OrderPoly& a, const OrderPoly& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const OrderPoly& a, const OrderPoly& b) { return !(a == b); }

private:
    LaurentPoly rep_; // normalized representative
};

/**
 * Finitely presented Z[t^±1]-module: m relations (rows) acting on n
 * generators, zero-padded so that m >= n.
 */
class PresentedModule {
public:
    explicit PresentedModule(PolyMatrix relations) : m_(std::move(relations)) {
        if (m_.rows() < m_.cols()) {
            PolyMatrix padded(m_.cols(), m_.cols());
            for (std::size_t i = 0; i < m_.rows(); ++i)
                for (std::size_t j = 0; j < m_.cols(); ++j) padded(i, j) = m_(i, j);
            m_ = padded;
        }
    }

    const PolyMatrix& relations() const { return m_; }
    std::size_t generators() const { return m_.cols(); }
    bool square_presentation() const {
        // square after discarding all-zero padding rows
        std::size_t nonzero_rows = 0;
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            bool zero = true;
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (!m_(i, j).is_zero()) zero = false;
            if (!zero) ++nonzero_rows;
        }
        return nonzero_rows <= m_.cols();
    }

private:
    PolyMatrix m_;
};

/**
 * The order: gcd of all n x n minors of the presentation matrix (the
 * generator of the smallest principal ideal containing E_0). For a square
 * presentation this is det(A) up to ±t^k.
 */
inline OrderPoly order(const PresentedModule& mod) {
    const auto& m = mod.relations();
    const std::size_t n = m.cols();
    if (n == 0) return OrderPoly(LaurentPoly(1)); // no generators: trivial module
    LaurentPoly g;
    std::vector<std::size_t> all_cols(n);
    for (std::size_t j = 0; j < n; ++j) all_cols[j] = j;
    for (const auto& rows_sel : detail::index_subsets(m.rows(), n)) {
        g = gcd(g, det_ring(m.submatrix(rows_sel, all_cols)));
        if (g == LaurentPoly(1)) break; // gcd can only stay 1
    }
    return OrderPoly(g);
}

struct TrivialityVerdict {
    enum class Status { trivial, nontrivial, unknown };
    Status status = Status::unknown;
    std::string reason;
};

/**
 * Is the presented module zero? For a square presentation the order
 * decides this: P = 0 iff the order is a unit. Without a square
 * presentation a unit order proves nothing (Z[t^±1]/(2, t-1) has order 1),
 * so the implementation only certifies nontriviality through a visibly
 * nonzero cyclic quotient of a single generator.
 */
inline TrivialityVerdict is_trivial_module(const PresentedModule& mod) {
    TrivialityVerdict v;
    const OrderPoly ord = order(mod);
    if (mod.square_presentation()) {
        if (ord.is_unit()) {
            v.status = TrivialityVerdict::Status::trivial;
            v.reason = "square presentation with unit order";
        } else {
            v.status = TrivialityVerdict::Status::nontrivial;
            v.reason = "square presentation with order " + to_string(ord.representative());
        }
        return v;
    }
    // non-square: look for a generator whose cyclic quotient is certified
    // proper (killing the other generators surjects the module onto it)
    const auto& m = mod.relations();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<LaurentPoly> column_ideal;
        for (std::size_t i = 0; i < m.rows(); ++i) column_ideal.push_back(m(i, j));
        const auto iv = ideal_verdict(column_ideal);
        if (iv.status == IdealVerdict::Status::proper) {
            v.status = TrivialityVerdict::Status::nontrivial;
            v.reason = "generator " + std::to_string(j) +
                       " has a nonzero cyclic quotient: " + iv.certificate;
            return v;
        }
    }
    v.status = TrivialityVerdict::Status::unknown;
    v.reason = ord.is_unit() ? "unit order but no square presentation"
                             : "no certificate found";
    return v;
}

} // namespace lform

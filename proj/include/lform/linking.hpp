#pragma once

#include "lform/bezout.hpp"
#include "lform/hermitian.hpp"
#include "lform/matrix.hpp"
#include "lform/orders.hpp"
#include "lform/units.hpp"

#include <optional>
#include <string>

namespace lform {

/**
 * A linking form on a torsion Z[t^±1]-module: the module is the cokernel
 * of the presentation matrix acting on columns, and values(i,j) is the
 * Q(t)/Z[t^±1]-value of the form on the i-th and j-th generator classes.
 *
 * The pairing is linear in the first slot and antilinear in the second:
 * on coordinate vectors it is (x, y) -> x^T B conj(y), with B the value
 * matrix. Every matrix formula in this header follows from that one
 * convention.
 */
class LinkingForm {
public:
    LinkingForm(PolyMatrix presentation, RatFunMatrix values)
        : p_(std::move(presentation)), b_(std::move(values)) {
        validate();
    }

    const PolyMatrix& presentation() const { return p_; }
    const RatFunMatrix& values() const { return b_; }
    std::size_t generators() const { return p_.cols(); }

    OrderPoly module_order() const { return OrderPoly(det_ring(p_)); }
    bool trivial_module() const { return module_order().is_unit(); }

    friend LinkingForm negate(const LinkingForm& l) {
        return LinkingForm(l.p_, l.b_.map([](const RatFun& f) { return -f; }));
    }

private:
    void validate() const {
        if (!p_.is_square()) throw std::invalid_argument("LinkingForm: presentation must be square");
        if (b_.rows() != p_.rows() || b_.cols() != p_.cols())
            throw std::invalid_argument("LinkingForm: value matrix size mismatch");
        if (det_ring(p_).is_zero())
            throw std::invalid_argument("LinkingForm: presentation must have nonzero determinant");
        const std::size_t n = p_.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!quot_eq(b_(i, j), b_(j, i).conj()))
                    throw std::invalid_argument("LinkingForm: values not Hermitian mod Z[t^±1]");
        // relations pair to zero: second slot is antilinear, first linear
        const RatFunMatrix relations = to_ratfun_matrix(p_);
        const RatFunMatrix second = b_ * relations.conj();
        const RatFunMatrix first = relations.transpose() * b_;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!second(i, j).is_integral_laurent())
                    throw std::invalid_argument("LinkingForm: form does not kill relations");
                if (!first(i, j).is_integral_laurent())
                    throw std::invalid_argument("LinkingForm: form does not kill relations");
            }
    }

    PolyMatrix p_;
    RatFunMatrix b_;
};

/**
 * The boundary linking form of a nondegenerate Hermitian form A: the
 * module presented by A^T with value matrix adj(A)/det(A). Solving
 * λ(-, z) = det(A)·e_i via conj(z) = adj(A)·e_i gives the value
 * ∂λ([e_i],[e_j]) = e_j(z)/det(A) = adj(A)_ij/det(A), i.e. the entries of
 * A^{-1} reduced mod Z[t^±1].
 */
inline LinkingForm boundary_form(const HermitianForm& form) {
    if (!form.nondegenerate())
        throw std::invalid_argument("boundary_form: form must be nondegenerate");
    const PolyMatrix& a = form.matrix();
    const LaurentPoly det = det_ring(a);
    const PolyMatrix adj = adjugate_ring(a);
    RatFunMatrix values(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) values(i, j) = RatFun(adj(i, j), det);
    return LinkingForm(a.transpose(), values);
}

/// A module map between presented modules, given on generators.
struct LinkIsometry {
    PolyMatrix matrix;
};

enum class TriBool { yes, no, unknown };

struct IsometryVerdict {
    TriBool verdict = TriBool::unknown;
    std::string reason;

    bool yes() const { return verdict == TriBool::yes; }
    bool no() const { return verdict == TriBool::no; }
};

/**
 * Does U define an isometry coker(P1) -> coker(P2) carrying the first
 * form to the second?  Checks, in order: equality of module orders,
 * well-definedness (U·P1 factors through P2 over Z[t^±1]), value
 * preservation ((U^T B2 conj(U))_ij = (B1)_ij mod Z[t^±1]), and
 * invertibility modulo relations. Invertibility is certified by a unit
 * determinant, by a Bézout identity in the cyclic case, or by bounded-
 * degree solving for preimages of all generators; if no certificate is
 * reached within bounds the verdict is unknown.
 */
inline IsometryVerdict isometry_check(const PolyMatrix& u, const LinkingForm& l1,
                                      const LinkingForm& l2, std::int64_t extra_degree = 4) {
    const std::size_t n = l1.generators();
    if (l2.generators() != n || u.rows() != n || u.cols() != n)
        throw std::invalid_argument("isometry_check: incompatible sizes");
    IsometryVerdict out;
    if (n == 0) {
        out.verdict = TriBool::yes;
        out.reason = "empty modules";
        return out;
    }

    const LaurentPoly d1 = det_ring(l1.presentation()), d2 = det_ring(l2.presentation());
    if (!doteq(d1, d2).has_value()) {
        out.verdict = TriBool::no;
        out.reason = "module orders differ";
        return out;
    }

    // well-definedness: U P1 = P2 V with V integral
    const RatFunMatrix p2inv = *inverse_field(to_ratfun_matrix(l2.presentation()));
    const RatFunMatrix v = p2inv * to_ratfun_matrix(u * l1.presentation());
    if (!to_poly_matrix(v)) {
        out.verdict = TriBool::no;
        out.reason = "does not carry relations into relations";
        return out;
    }

    // value preservation, sesquilinearly
    const RatFunMatrix uq = to_ratfun_matrix(u);
    const RatFunMatrix transformed = uq.transpose() * l2.values() * uq.conj();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!quot_eq(transformed(i, j), l1.values()(i, j))) {
                out.verdict = TriBool::no;
                out.reason = "values not preserved";
                return out;
            }

    // invertibility modulo relations
    if (det_ring(u).as_unit().has_value()) {
        out.verdict = TriBool::yes;
        out.reason = "unimodular matrix";
        return out;
    }
    if (n == 1) {
        const auto bez = bezout_one(u(0, 0), l2.presentation()(0, 0));
        if (bez.found()) {
            out.verdict = TriBool::yes;
            out.reason = "cyclic: Bézout inverse " + to_string(bez.x);
        } else if (bez.impossible()) {
            out.verdict = TriBool::no;
            out.reason = "cyclic: not invertible modulo the relation (" + bez.certificate + ")";
        } else {
            out.verdict = TriBool::unknown;
            out.reason = "cyclic: Bézout search inconclusive";
        }
        return out;
    }
    // surjectivity: solve U x + P2 y = e_k for every generator; with equal
    // orders and square nonsingular presentations this forces bijectivity
    std::int64_t maxabs = 0;
    auto widen = [&](const PolyMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero())
                    maxabs = std::max<std::int64_t>(
                        maxabs, std::max(std::abs(m(i, j).min_exp()), std::abs(m(i, j).max_exp())));
    };
    widen(u);
    widen(l2.presentation());
    const std::int64_t window = maxabs + d2.span() + extra_degree;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<LaurentPoly>> coeffs(n, std::vector<LaurentPoly>(2 * n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                coeffs[i][j] = u(i, j);
                coeffs[i][n + j] = l2.presentation()(i, j);
            }
        std::vector<LaurentPoly> rhs(n);
        rhs[k] = LaurentPoly(1);
        if (!solve_poly_linear(coeffs, rhs, -window, window)) {
            out.verdict = TriBool::unknown;
            out.reason = "surjectivity not certified within degree bounds";
            return out;
        }
    }
    out.verdict = TriBool::yes;
    out.reason = "surjective onto all generators; orders agree";
    return out;
}

/**
 * The automorphism action G·h = h ∘ ∂G^{-1} of an isometry G of the
 * Hermitian form on isometries h out of its boundary form. In the A^T
 * presentation coordinates ∂G is the map induced by (G^*)^{-1}, whose
 * matrix is the inverse conjugate transpose of G, so ∂G^{-1} acts by the
 * conjugate transpose itself (integral for any G).
 */
inline LinkIsometry aut_action(const PolyMatrix& g, const LinkingForm& l, const LinkIsometry& h) {
    const std::size_t n = l.generators();
    if (!g.is_square() || g.rows() != n || h.matrix.rows() != n || h.matrix.cols() != n)
        throw std::invalid_argument("aut_action: incompatible sizes");
    const PolyMatrix lambda = l.presentation().transpose();
    if (!check_hermitian(lambda))
        throw std::invalid_argument("aut_action: presentation does not come from a Hermitian form");
    if (g.conj_transpose() * lambda * g != lambda)
        throw std::invalid_argument("aut_action: G is not an isometry of the Hermitian form");
    return LinkIsometry{h.matrix * g.conj_transpose()};
}

/**
 * Lower bound for the isometry classes Aut(∂λ)/Aut(λ) of a rank-one form:
 * when the scalar is 2P with P symmetric this is the unit-class count of
 * Z[t^±1]/(2P); otherwise the trivial bound 1.
 */
inline std::size_t orbit_lower_bound_rank1(const LaurentPoly& lambda_scalar,
                                           const std::vector<LaurentPoly>& factor_hints = {}) {
    if (lambda_scalar.is_zero())
        throw std::invalid_argument("orbit_lower_bound_rank1: scalar must be nonzero");
    if (!lambda_scalar.is_symmetric())
        throw std::invalid_argument("orbit_lower_bound_rank1: scalar must be symmetric");
    if (!lambda_scalar.coeffs_divisible_by(2)) return 1;
    const auto half = divide_exact(lambda_scalar, LaurentPoly(2));
    return distinct_classes(*half, factor_hints);
}

} // namespace lform

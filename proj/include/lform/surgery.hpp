#pragma once

#include "lform/hermitian.hpp"
#include "lform/orders.hpp"
#include "lform/torsion.hpp"

#include <optional>
#include <string>

namespace lform {

/**
 * Equivariant linking matrix: Hermitian over Q(t), diagonal entries the
 * framings r_i(t) (genuinely rational), off-diagonal entries the pairwise
 * equivariant linking numbers.
 */
class EquivLinkingMatrix {
public:
    explicit EquivLinkingMatrix(RatFunMatrix m) : m_(std::move(m)) {
        if (!m_.is_square())
            throw std::invalid_argument("EquivLinkingMatrix: matrix must be square");
        if (m_ != m_.conj_transpose())
            throw std::invalid_argument("EquivLinkingMatrix: matrix must be Hermitian");
    }

    const RatFunMatrix& matrix() const { return m_; }
    std::size_t size() const { return m_.rows(); }
    RatFun det() const { return det_field(m_); }

private:
    RatFunMatrix m_;
};

/// The linking matrix of the dual framed link: -A^{-1}.
inline EquivLinkingMatrix dual_matrix(const EquivLinkingMatrix& a) {
    auto inv = inverse_field(a.matrix());
    if (!inv) throw std::invalid_argument("dual_matrix: singular linking matrix");
    return EquivLinkingMatrix(-*inv);
}

/// Every framing r_i must satisfy r_i(t^-1) = r_i(t). The raw-matrix
/// overload checks only the diagonal, so it can reject candidates that
/// are not even Hermitian.
inline bool check_framing_symmetry(const RatFunMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("check_framing_symmetry: matrix must be square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a(i, i).is_symmetric()) return false;
    return true;
}

inline bool check_framing_symmetry(const EquivLinkingMatrix& a) {
    return check_framing_symmetry(a.matrix());
}

struct AlexanderTransform {
    RatFun product;                    // det(A) · Δ_Y, exact in Q(t)
    std::optional<OrderPoly> order;    // normalized when the product is integral
    std::string note;
};

/**
 * The Alexander polynomial of the surgered manifold: Δ_{Y'} equals
 * det(A)·Δ_Y up to ±t^k. Returns the exact product and, when it is an
 * integral Laurent polynomial, its order normalization.
 */
inline AlexanderTransform alexander_transform(const OrderPoly& delta_y,
                                              const EquivLinkingMatrix& a) {
    AlexanderTransform out;
    const RatFun det = a.det();
    if (det.is_zero()) throw std::invalid_argument("alexander_transform: singular matrix");
    out.product = det * RatFun(delta_y.representative());
    if (out.product.is_integral_laurent()) {
        out.order = OrderPoly(out.product.to_laurent());
    } else {
        out.note = "product is not an integral Laurent polynomial";
    }
    return out;
}

/**
 * The algebraic realisation pipeline for a nondegenerate Hermitian form Q:
 * each field records one matrix identity of the surgery construction,
 * with the witnesses needed to re-verify it.
 */
struct RealisationReport {
    RatFunMatrix linking_matrix;     // A_L = -Q^{-T}
    bool framing_symmetric = false;  // diagonal of A_L fixed by the involution
    bool dual_is_qt = false;         // dual_matrix(A_L) = Q^T
    OrderPoly delta_y;               // order of coker(Q^T)
    bool order_matches_det = false;  // delta_y ≐ det(Q)
    RatFun alexander_product;        // det(A_L)·Δ_Y
    bool alexander_trivial = false;  // ≐ 1
    RatFun tau_les_l;                // torsion of the surgery long exact sequence, original link
    RatFun tau_les_lprime;           // same for the dual link
    bool les_torsion_matches = false; // τ' = det(-A_L^{-1})^{-1} and τ'/τ ≐ det(A_L)
    bool all_passed = false;
};

namespace detail {

/// The only nontrivial stretch of the surgery long exact sequence, as a
/// based acyclic complex: identity in the top two degrees, the given
/// boundary map in the bottom two (degrees 0..4, middle degree zero).
inline BasedComplex surgery_les_complex(const RatFunMatrix& bottom) {
    const std::size_t n = bottom.rows();
    BasedComplex c;
    c.dims = {n, n, 0, n, n};
    c.boundaries = {bottom, RatFunMatrix(n, 0), RatFunMatrix(0, n), RatFunMatrix::identity(n)};
    c.homology_bases.resize(5);
    return c;
}

} // namespace detail

/**
 * Runs the matrix side of the two surgery steps on Q and checks every
 * identity: the linking matrix -Q^{-T} has symmetric framings, its dual is
 * Q^T, the order of coker(Q^T) is det(Q) up to units, the transformed
 * Alexander polynomial is trivial, and the long-exact-sequence torsions
 * reproduce det(A_L). All checks pass for any valid input.
 */
inline RealisationReport realisation_report(const HermitianForm& q) {
    if (!q.nondegenerate())
        throw std::invalid_argument("realisation_report: form must be nondegenerate");
    RealisationReport rep;
    const std::size_t n = q.size();
    const RatFunMatrix qt = to_ratfun_matrix(q.matrix().transpose());

    // (i) A_L = -Q^{-T}
    const RatFunMatrix a_l = -*inverse_field(qt);
    rep.linking_matrix = a_l;
    const EquivLinkingMatrix a(a_l);

    // (ii) framing symmetry
    rep.framing_symmetric = check_framing_symmetry(a);

    // (iii) the dual link has linking matrix Q^T
    rep.dual_is_qt = dual_matrix(a).matrix() == qt;

    // (iv) Q^T presents the module; its order is det(Q) up to units
    rep.delta_y = order(PresentedModule(q.matrix().transpose()));
    rep.order_matches_det = doteq(rep.delta_y.representative(), q.det()).has_value();

    // (v) Δ_{Y'} = det(A_L)·Δ_Y ≐ 1
    const auto alex = alexander_transform(rep.delta_y, a);
    rep.alexander_product = alex.product;
    rep.alexander_trivial = doteq(alex.product, RatFun(1)).has_value();

    // (vi) torsion bookkeeping of the long exact sequences: the dual-link
    // sequence has bottom boundary -A_L^{-1}, the original has the identity
    const RatFunMatrix bottom_lprime = -*inverse_field(a_l);
    rep.tau_les_l = torsion(detail::surgery_les_complex(RatFunMatrix::identity(n))).value;
    rep.tau_les_lprime = torsion(detail::surgery_les_complex(bottom_lprime)).value;
    const bool two_term_identity =
        rep.tau_les_lprime == RatFun(1) / det_field(bottom_lprime);
    const bool ratio_matches =
        doteq(rep.tau_les_lprime / rep.tau_les_l, det_field(a_l)).has_value();
    rep.les_torsion_matches = two_term_identity && ratio_matches && rep.tau_les_l == RatFun(1);

    rep.all_passed = rep.framing_symmetric && rep.dual_is_qt && rep.order_matches_det &&
                     rep.alexander_trivial && rep.les_torsion_matches;
    return rep;
}

} // namespace lform

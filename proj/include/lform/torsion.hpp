#pragma once

#include "lform/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lform {

/**
 * A finite based chain complex over Q(t): C_m -> ... -> C_1 -> C_0,
 * with distinguished bases (the coordinates) and optional per-degree
 * homology bases given by cycle representatives.
 *
 * dims[i] is dim C_i; boundaries[i] maps C_{i+1} into C_i and has shape
 * dims[i] x dims[i+1].
 */
struct BasedComplex {
    std::vector<std::size_t> dims;
    std::vector<RatFunMatrix> boundaries;
    std::vector<std::optional<std::vector<std::vector<RatFun>>>> homology_bases;

    std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }

    static BasedComplex two_term(const RatFunMatrix& a) {
        BasedComplex c;
        c.dims = {a.rows(), a.cols()};
        c.boundaries = {a};
        c.homology_bases.resize(2);
        return c;
    }

    void validate() const {
        if (dims.empty()) throw std::invalid_argument("BasedComplex: empty complex");
        if (boundaries.size() + 1 != dims.size())
            throw std::invalid_argument("BasedComplex: need one boundary per adjacent pair");
        for (std::size_t i = 0; i < boundaries.size(); ++i)
            if (boundaries[i].rows() != dims[i] || boundaries[i].cols() != dims[i + 1])
                throw std::invalid_argument("BasedComplex: boundary shape mismatch at degree " +
                                            std::to_string(i));
        for (std::size_t i = 0; i + 1 < boundaries.size(); ++i)
            if (!(boundaries[i] * boundaries[i + 1]).is_zero())
                throw std::invalid_argument("BasedComplex: boundary squared is nonzero at degree " +
                                            std::to_string(i));
        if (!homology_bases.empty() && homology_bases.size() != dims.size())
            throw std::invalid_argument("BasedComplex: homology_bases size mismatch");
    }
};

struct TorsionValue {
    RatFun value;
};

struct TorsionOptions {
    /// nonzero: deterministically perturb the internal choices (image
    /// bases, lifts, homology representatives' lifts); the result must not
    /// change
    std::uint64_t choice_seed = 0;
};

namespace detail {

struct DegreeData {
    RatFunMatrix image_basis;  // b_i: columns span im(C_{i+1} -> C_i)
    RatFunMatrix lifts;        // columns in C_{i+1}, boundary of lifts = image_basis
    std::size_t rank = 0;
};

inline RatFunMatrix columns_matrix(std::size_t dim, const std::vector<std::vector<RatFun>>& cols) {
    RatFunMatrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim)
            throw std::invalid_argument("torsion: vector dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

} // namespace detail

/**
 * Reidemeister torsion of a based chain complex with homology basis,
 * following the convention that places the odd-degree change-of-basis
 * determinants in the numerator:
 *
 *   tau = prod det(S_{2i+1}) / prod det(S_{2i}),
 *
 * where S_i = [b_i | lifted homology basis | lifts of b_{i-1}] written in
 * the distinguished basis of C_i. The value does not depend on the choice
 * of the image bases b_i or the lifts (exercise TorsionOptions to vary
 * them). Degrees with nonzero homology require a supplied basis; an
 * acyclic complex needs none. For the two-term complex C_1 -> C_0 with
 * matrix A this yields det(A)^{-1}.
 */
inline TorsionValue torsion(const BasedComplex& c, TorsionOptions opts = {}) {
    c.validate();
    const std::size_t m = c.top_degree();
    std::mt19937_64 rng(opts.choice_seed);
    std::uniform_int_distribution<int> small(-2, 2);

    // image bases and lifts per degree
    std::vector<detail::DegreeData> data(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const RatFunMatrix& d = c.boundaries[i];
        const auto red = column_reduce(d);
        detail::DegreeData dd;
        dd.rank = red.rank;
        dd.image_basis = RatFunMatrix(c.dims[i], red.rank);
        dd.lifts = RatFunMatrix(c.dims[i + 1], red.rank);
        for (std::size_t k = 0; k < red.rank; ++k) {
            const std::size_t j = red.pivot_cols[k];
            for (std::size_t r = 0; r < c.dims[i]; ++r) dd.image_basis(r, k) = d(r, j);
            dd.lifts(j, k) = RatFun(1);
        }
        if (opts.choice_seed != 0 && dd.rank > 0) {
            // change of image basis by a random unimodular matrix
            RatFunMatrix t = RatFunMatrix::identity(dd.rank);
            for (int step = 0; step < 3; ++step) {
                std::uniform_int_distribution<std::size_t> pick(0, dd.rank - 1);
                const std::size_t x = pick(rng), y = pick(rng);
                if (x == y) continue;
                const RatFun f = RatFun(small(rng));
                for (std::size_t r = 0; r < dd.rank; ++r) t(r, y) = t(r, y) + f * t(r, x);
            }
            dd.image_basis = dd.image_basis * t;
            dd.lifts = dd.lifts * t;
            // perturb lifts by kernel elements of the boundary
            const auto ker = kernel_field(d);
            for (const auto& kv : ker)
                for (std::size_t k = 0; k < dd.rank; ++k) {
                    const RatFun f = RatFun(small(rng));
                    if (f.is_zero()) continue;
                    for (std::size_t r = 0; r < c.dims[i + 1]; ++r)
                        dd.lifts(r, k) = dd.lifts(r, k) + f * kv[r];
                }
        }
        data[i] = std::move(dd);
    }

    RatFun numerator(1), denominator(1);
    for (std::size_t i = 0; i <= m; ++i) {
        const std::size_t rank_in = (i < m) ? data[i].rank : 0;
        const std::size_t rank_out =
            (i > 0) ? data[i - 1].rank : 0; // rank of boundary leaving C_i equals |b_{i-1}|
        if (c.dims[i] < rank_in + rank_out)
            throw std::logic_error("torsion: rank bookkeeping failure");
        const std::size_t h_dim = c.dims[i] - rank_in - rank_out;

        RatFunMatrix hcols(c.dims[i], 0);
        if (h_dim > 0) {
            if (c.homology_bases.size() <= i || !c.homology_bases[i])
                throw std::domain_error("torsion: degree " + std::to_string(i) +
                                        " has homology of rank " + std::to_string(h_dim) +
                                        " but no homology basis was supplied");
            const auto& given = *c.homology_bases[i];
            if (given.size() != h_dim)
                throw std::invalid_argument("torsion: homology basis at degree " +
                                            std::to_string(i) + " must have " +
                                            std::to_string(h_dim) + " vectors");
            hcols = detail::columns_matrix(c.dims[i], given);
            if (i > 0 && !(c.boundaries[i - 1] * hcols).is_zero())
                throw std::invalid_argument("torsion: homology vectors at degree " +
                                            std::to_string(i) + " are not cycles");
            if (opts.choice_seed != 0 && rank_in > 0) {
                // shift the representatives by boundaries
                for (std::size_t k = 0; k < h_dim; ++k) {
                    for (std::size_t b = 0; b < rank_in; ++b) {
                        const RatFun f = RatFun(small(rng));
                        if (f.is_zero()) continue;
                        for (std::size_t r = 0; r < c.dims[i]; ++r)
                            hcols(r, k) = hcols(r, k) + f * data[i].image_basis(r, b);
                    }
                }
            }
        } else if (c.homology_bases.size() > i && c.homology_bases[i] &&
                   !c.homology_bases[i]->empty()) {
            throw std::invalid_argument("torsion: degree " + std::to_string(i) +
                                        " is acyclic but a homology basis was supplied");
        }

        // S_i = [b_i | h~_i | lifts of b_{i-1}]
        RatFunMatrix s(c.dims[i], c.dims[i]);
        std::size_t col = 0;
        for (std::size_t k = 0; k < rank_in; ++k, ++col)
            for (std::size_t r = 0; r < c.dims[i]; ++r) s(r, col) = data[i].image_basis(r, k);
        for (std::size_t k = 0; k < h_dim; ++k, ++col)
            for (std::size_t r = 0; r < c.dims[i]; ++r) s(r, col) = hcols(r, k);
        for (std::size_t k = 0; k < rank_out; ++k, ++col)
            for (std::size_t r = 0; r < c.dims[i]; ++r) s(r, col) = data[i - 1].lifts(r, k);

        const RatFun ds = det_field(s);
        if (ds.is_zero())
            throw std::invalid_argument("torsion: combined basis at degree " + std::to_string(i) +
                                        " is singular (homology basis not independent?)");
        if (i % 2 == 1) numerator *= ds;
        else denominator *= ds;
    }
    return TorsionValue{numerator / denominator};
}

/// det(A)^{-1}, the torsion of the two-term complex with boundary A.
inline TorsionValue torsion_two_term(const RatFunMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("torsion_two_term: matrix must be square");
    const RatFun d = det_field(a);
    if (d.is_zero()) throw std::invalid_argument("torsion_two_term: matrix is singular");
    return TorsionValue{RatFun(1) / d};
}

struct MultiplicativityReport {
    RatFun tau_sub, tau_total, tau_quot, tau_les;
    RatFun discrepancy; // tau_total / (tau_sub · tau_quot · tau_les)
    bool exact_equal = false;
};

namespace detail {

/// Coordinates of the homology class of cycle v in the given basis:
/// solve [H | B] c = v and keep the H-block.
inline std::vector<RatFun> class_coords(const RatFunMatrix& hbasis, const RatFunMatrix& ibasis,
                                        const std::vector<RatFun>& v) {
    const std::size_t dim = v.size();
    RatFunMatrix sys(dim, hbasis.cols() + ibasis.cols());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < hbasis.cols(); ++j) sys(i, j) = hbasis(i, j);
        for (std::size_t j = 0; j < ibasis.cols(); ++j) sys(i, hbasis.cols() + j) = ibasis(i, j);
    }
    auto sol = solve_field(sys, v);
    if (!sol)
        throw std::invalid_argument("multiplicativity: a cycle is not expressible in the "
                                    "homology and image bases (bases inconsistent?)");
    return std::vector<RatFun>(sol->begin(), sol->begin() + static_cast<long>(hbasis.cols()));
}

} // namespace detail

/**
 * Multiplicativity of torsion for a based short exact sequence
 * 0 -> C' -> C -> C'' -> 0 (all with homology bases): computes the long
 * exact homology sequence as a based acyclic complex H and reports whether
 * tau(C) = tau(C') · tau(C'') · tau(H) holds exactly, along with the
 * discrepancy factor.
 *
 * Based compatibility is required in the strict form: every inclusion
 * must be [I; 0] and every projection [0 | I] in the given bases, i.e.
 * the basis of C is the basis of C' followed by lifts of the basis of
 * C''. The long exact sequence is placed so that H_i(C'') sits in degree
 * 3i, H_i(C) in degree 3i+1 and H_i(C') in degree 3i+2; connecting maps
 * are computed by lift-boundary-restrict.
 */
inline MultiplicativityReport multiplicativity_check(const BasedComplex& sub,
                                                     const BasedComplex& total,
                                                     const BasedComplex& quot,
                                                     const std::vector<RatFunMatrix>& inclusions,
                                                     const std::vector<RatFunMatrix>& projections) {
    sub.validate();
    total.validate();
    quot.validate();
    const std::size_t m = total.top_degree();
    if (sub.dims.size() != total.dims.size() || quot.dims.size() != total.dims.size())
        throw std::invalid_argument("multiplicativity: the complexes must share their degree range");
    if (inclusions.size() != m + 1 || projections.size() != m + 1)
        throw std::invalid_argument("multiplicativity: need one inclusion/projection per degree");

    for (std::size_t i = 0; i <= m; ++i) {
        if (sub.dims[i] + quot.dims[i] != total.dims[i])
            throw std::invalid_argument("multiplicativity: sequence not exact (dimension count)");
        const auto& inc = inclusions[i];
        const auto& prj = projections[i];
        if (inc.rows() != total.dims[i] || inc.cols() != sub.dims[i] ||
            prj.rows() != quot.dims[i] || prj.cols() != total.dims[i])
            throw std::invalid_argument("multiplicativity: inclusion/projection shape mismatch");
        for (std::size_t r = 0; r < inc.rows(); ++r)
            for (std::size_t cidx = 0; cidx < inc.cols(); ++cidx)
                if (inc(r, cidx) != ((r == cidx) ? RatFun(1) : RatFun(0)))
                    throw std::invalid_argument("multiplicativity: bases incompatible (inclusion "
                                                "is not [I; 0])");
        for (std::size_t r = 0; r < prj.rows(); ++r)
            for (std::size_t cidx = 0; cidx < prj.cols(); ++cidx)
                if (prj(r, cidx) != ((cidx == sub.dims[i] + r) ? RatFun(1) : RatFun(0)))
                    throw std::invalid_argument("multiplicativity: bases incompatible (projection "
                                                "is not [0 | I])");
    }
    // chain maps commute with the boundaries
    for (std::size_t i = 0; i + 1 <= m; ++i) {
        if (total.boundaries[i] * inclusions[i + 1] != inclusions[i] * sub.boundaries[i])
            throw std::invalid_argument("multiplicativity: inclusion is not a chain map");
        if (projections[i] * total.boundaries[i] != quot.boundaries[i] * projections[i + 1])
            throw std::invalid_argument("multiplicativity: projection is not a chain map");
    }

    // homology data of one complex: image bases plus lifted homology matrices
    struct Homology {
        std::vector<RatFunMatrix> hbasis; // per degree
        std::vector<RatFunMatrix> ibasis;
        std::vector<std::size_t> hdim;
    };
    auto analyze = [&](const BasedComplex& c) {
        Homology h;
        const std::size_t top = c.top_degree();
        h.hbasis.resize(top + 1);
        h.ibasis.resize(top + 1);
        h.hdim.resize(top + 1);
        std::vector<std::size_t> rank_in(top + 1, 0);
        for (std::size_t i = 0; i < top; ++i) {
            const auto red = column_reduce(c.boundaries[i]);
            rank_in[i] = red.rank;
            h.ibasis[i] = RatFunMatrix(c.dims[i], red.rank);
            for (std::size_t k = 0; k < red.rank; ++k)
                for (std::size_t r = 0; r < c.dims[i]; ++r)
                    h.ibasis[i](r, k) = c.boundaries[i](r, red.pivot_cols[k]);
        }
        h.ibasis[top] = RatFunMatrix(c.dims[top], 0);
        for (std::size_t i = 0; i <= top; ++i) {
            const std::size_t rank_out = (i > 0) ? rank_in[i - 1] : 0;
            h.hdim[i] = c.dims[i] - rank_in[i] - rank_out;
            if (h.hdim[i] == 0) {
                h.hbasis[i] = RatFunMatrix(c.dims[i], 0);
                continue;
            }
            if (c.homology_bases.size() <= i || !c.homology_bases[i])
                throw std::domain_error("multiplicativity: missing homology basis");
            h.hbasis[i] = detail::columns_matrix(c.dims[i], *c.homology_bases[i]);
        }
        return h;
    };
    const Homology hs = analyze(sub), ht = analyze(total), hq = analyze(quot);

    // long exact sequence as an acyclic based complex
    BasedComplex les;
    les.dims.assign(3 * (m + 1), 0);
    for (std::size_t i = 0; i <= m; ++i) {
        les.dims[3 * i] = hq.hdim[i];
        les.dims[3 * i + 1] = ht.hdim[i];
        les.dims[3 * i + 2] = hs.hdim[i];
    }
    while (les.dims.size() > 1 && les.dims.back() == 0) les.dims.pop_back();
    les.boundaries.assign(les.dims.size() - 1, RatFunMatrix());
    les.homology_bases.resize(les.dims.size());

    auto set_boundary = [&](std::size_t target_degree, RatFunMatrix mtx) {
        if (target_degree + 1 >= les.dims.size()) {
            if (!mtx.is_zero())
                throw std::logic_error("multiplicativity: boundary beyond the top degree");
            return;
        }
        les.boundaries[target_degree] = std::move(mtx);
    };

    for (std::size_t i = 0; i <= m; ++i) {
        // iota_*: H_i(C') -> H_i(C), in degree 3i+2 -> 3i+1
        {
            RatFunMatrix mtx(ht.hdim[i], hs.hdim[i]);
            for (std::size_t k = 0; k < hs.hdim[i]; ++k) {
                std::vector<RatFun> img(total.dims[i], RatFun(0));
                for (std::size_t r = 0; r < sub.dims[i]; ++r) img[r] = hs.hbasis[i](r, k);
                const auto coords = detail::class_coords(ht.hbasis[i], ht.ibasis[i], img);
                for (std::size_t r = 0; r < ht.hdim[i]; ++r) mtx(r, k) = coords[r];
            }
            set_boundary(3 * i + 1, std::move(mtx));
        }
        // pi_*: H_i(C) -> H_i(C''), in degree 3i+1 -> 3i
        {
            RatFunMatrix mtx(hq.hdim[i], ht.hdim[i]);
            for (std::size_t k = 0; k < ht.hdim[i]; ++k) {
                std::vector<RatFun> img(quot.dims[i], RatFun(0));
                for (std::size_t r = 0; r < quot.dims[i]; ++r)
                    img[r] = ht.hbasis[i](sub.dims[i] + r, k);
                const auto coords = detail::class_coords(hq.hbasis[i], hq.ibasis[i], img);
                for (std::size_t r = 0; r < hq.hdim[i]; ++r) mtx(r, k) = coords[r];
            }
            set_boundary(3 * i, std::move(mtx));
        }
        // delta: H_i(C'') -> H_{i-1}(C'), in degree 3i -> 3i-1 = 3(i-1)+2
        if (i > 0) {
            RatFunMatrix mtx(hs.hdim[i - 1], hq.hdim[i]);
            for (std::size_t k = 0; k < hq.hdim[i]; ++k) {
                // lift through the based splitting, take the boundary,
                // restrict to the subcomplex block
                std::vector<RatFun> lift(total.dims[i], RatFun(0));
                for (std::size_t r = 0; r < quot.dims[i]; ++r)
                    lift[sub.dims[i] + r] = hq.hbasis[i](r, k);
                std::vector<RatFun> bd(total.dims[i - 1], RatFun(0));
                for (std::size_t r = 0; r < total.dims[i - 1]; ++r)
                    for (std::size_t j = 0; j < total.dims[i]; ++j)
                        bd[r] = bd[r] + total.boundaries[i - 1](r, j) * lift[j];
                for (std::size_t r = sub.dims[i - 1]; r < total.dims[i - 1]; ++r)
                    if (!bd[r].is_zero())
                        throw std::logic_error("multiplicativity: connecting map left the "
                                               "subcomplex");
                std::vector<RatFun> restricted(bd.begin(),
                                               bd.begin() + static_cast<long>(sub.dims[i - 1]));
                const auto coords =
                    detail::class_coords(hs.hbasis[i - 1], hs.ibasis[i - 1], restricted);
                for (std::size_t r = 0; r < hs.hdim[i - 1]; ++r) mtx(r, k) = coords[r];
            }
            set_boundary(3 * i - 1, std::move(mtx));
        }
    }
    // fill untouched boundaries with correctly-shaped zero matrices
    for (std::size_t d = 0; d + 1 < les.dims.size(); ++d)
        if (les.boundaries[d].rows() != les.dims[d] || les.boundaries[d].cols() != les.dims[d + 1])
            les.boundaries[d] = RatFunMatrix(les.dims[d], les.dims[d + 1]);

    MultiplicativityReport rep;
    rep.tau_sub = torsion(sub).value;
    rep.tau_total = torsion(total).value;
    rep.tau_quot = torsion(quot).value;
    rep.tau_les = torsion(les).value;
    rep.discrepancy = rep.tau_total / (rep.tau_sub * rep.tau_quot * rep.tau_les);
    rep.exact_equal = rep.discrepancy == RatFun(1);
    return rep;
}

} // namespace lform

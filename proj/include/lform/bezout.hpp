#pragma once

#include "lform/laurent.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace lform {

namespace detail {

// ----- arithmetic in F_p[t] for small primes -----------------------------

using FpPoly = std::vector<long>; // coeff of t^i at index i, no trailing zeros

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Reduce a Laurent polynomial mod p, then strip the t-power unit.
inline FpPoly fp_from(const LaurentPoly& a, long p) {
    if (a.is_zero()) return {};
    const auto lo = a.min_exp();
    FpPoly f(static_cast<std::size_t>(a.max_exp() - lo) + 1, 0);
    for (const auto& [k, c] : a.coeffs()) {
        Int r = c % p;
        if (r < 0) r += p;
        f[static_cast<std::size_t>(k - lo)] = r.convert_to<long>();
    }
    fp_trim(f);
    // strip lowest-degree zeros: t is a unit in F_p[t^±1]
    std::size_t v = 0;
    while (v < f.size() && f[v] == 0) ++v;
    if (v > 0) f.erase(f.begin(), f.begin() + static_cast<long>(v));
    return f;
}

inline long fp_inv(long a, long p) {
    long t0 = 0, t1 = 1, r0 = p, r1 = a % p;
    while (r1 != 0) {
        long q = r0 / r1;
        long t2 = t0 - q * t1, r2 = r0 - q * r1;
        t0 = t1;
        t1 = t2;
        r0 = r1;
        r1 = r2;
    }
    return ((t0 % p) + p) % p;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    while (!b.empty()) {
        // a mod b
        const long inv = fp_inv(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            const long c = static_cast<long>((static_cast<long long>(a.back()) * inv) % p);
            const std::size_t sh = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                long long v = a[sh + i] - static_cast<long long>(c) * b[i];
                a[sh + i] = static_cast<long>(((v % p) + p) % p);
            }
            fp_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// ----- extended Euclid in Q[t] --------------------------------------------

using QxPoly = std::vector<Rat>;

inline void qx_trim(QxPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline QxPoly qx_from(const LaurentPoly& a) {
    if (a.is_zero()) return {};
    const auto lo = a.min_exp();
    QxPoly f(static_cast<std::size_t>(a.max_exp() - lo) + 1, Rat(0));
    for (const auto& [k, c] : a.coeffs()) f[static_cast<std::size_t>(k - lo)] = Rat(c);
    return f;
}

inline QxPoly qx_sub_scaled_shift(QxPoly a, const QxPoly& b, const Rat& c, std::size_t sh) {
    if (a.size() < b.size() + sh) a.resize(b.size() + sh, Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
    qx_trim(a);
    return a;
}

inline QxPoly qx_mul(const QxPoly& a, const QxPoly& b) {
    if (a.empty() || b.empty()) return {};
    QxPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qx_trim(r);
    return r;
}

inline QxPoly qx_sub(QxPoly a, const QxPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qx_trim(a);
    return a;
}

/// (q, r) with a = q b + r, deg r < deg b.
inline std::pair<QxPoly, QxPoly> qx_divmod(QxPoly a, const QxPoly& b) {
    QxPoly q;
    if (b.empty()) throw std::domain_error("qx_divmod: zero divisor");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Rat c = a.back() / b.back();
        const std::size_t sh = a.size() - b.size();
        q[sh] = c;
        a = qx_sub_scaled_shift(std::move(a), b, c, sh);
    }
    qx_trim(q);
    return {q, a};
}

/// Extended Euclid: g = gcd (monic), with a*x + b*y = g over Q[t].
inline std::tuple<QxPoly, QxPoly, QxPoly> qx_ext_gcd(QxPoly a, QxPoly b) {
    QxPoly x0{Rat(1)}, y0{}, x1{}, y1{Rat(1)};
    if (a.empty()) std::swap(a, b), std::swap(x0, x1), std::swap(y0, y1);
    while (!b.empty()) {
        auto [q, r] = qx_divmod(a, b);
        a = b;
        b = r;
        QxPoly x2 = qx_sub(x0, qx_mul(q, x1));
        QxPoly y2 = qx_sub(y0, qx_mul(q, y1));
        x0 = std::move(x1);
        y0 = std::move(y1);
        x1 = std::move(x2);
        y1 = std::move(y2);
    }
    if (!a.empty() && a.back() != 1) {
        const Rat lc = a.back();
        for (auto& c : a) c /= lc;
        for (auto& c : x0) c /= lc;
        for (auto& c : y0) c /= lc;
    }
    return {a, x0, y0};
}

// ----- integer linear systems (column Hermite reduction) -------------------

/// Solves M z = c over the integers. Returns nullopt when no integral
/// solution exists (within this exact system; no windowing here).
inline std::optional<std::vector<Int>> solve_integer_system(std::vector<std::vector<Int>> m,
                                                            std::vector<Int> c) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    // column transform: z = U w
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (std::size_t i = 0; i < cols; ++i) u[i][dst] += f * u[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][a], u[i][b]);
    };

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t pc = 0;
    for (std::size_t r = 0; r < rows && pc < cols; ++r) {
        // gcd-reduce entries of row r across columns >= pc
        while (true) {
            std::size_t jmin = SIZE_MAX;
            for (std::size_t j = pc; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                if (jmin == SIZE_MAX || abs_int(m[r][j]) < abs_int(m[r][jmin])) jmin = j;
            }
            if (jmin == SIZE_MAX) break; // all zero in this row
            bool reduced_any = false;
            for (std::size_t j = pc; j < cols; ++j) {
                if (j == jmin || m[r][j] == 0) continue;
                Int q = m[r][j] / m[r][jmin];
                if (q != 0) col_addmul(j, jmin, -q);
                reduced_any = reduced_any || m[r][j] != 0;
            }
            bool done = true;
            for (std::size_t j = pc; j < cols; ++j)
                if (j != jmin && m[r][j] != 0) done = false;
            if (done) {
                col_swap(pc, jmin);
                pivots.emplace_back(r, pc);
                ++pc;
                break;
            }
            (void)reduced_any;
        }
    }

    // Forward substitution against the echelon columns.
    std::vector<Int> w(cols, Int(0));
    std::vector<Int> residual = c;
    std::size_t next_pivot = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (next_pivot < pivots.size() && pivots[next_pivot].first == r) {
            const std::size_t j = pivots[next_pivot].second;
            if (residual[r] % m[r][j] != 0) return std::nullopt;
            const Int wj = residual[r] / m[r][j];
            w[j] = wj;
            if (wj != 0)
                for (std::size_t i = r; i < rows; ++i) residual[i] -= wj * m[i][j];
            ++next_pivot;
        } else if (residual[r] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> z(cols, Int(0));
    for (std::size_t i = 0; i < cols; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols; ++j)
            if (w[j] != 0) s += u[i][j] * w[j];
        z[i] = s;
    }
    return z;
}

inline std::vector<long> trial_factor(Int n, long bound = 1000000) {
    std::vector<long> primes;
    n = abs_int(n);
    for (long p = 2; p <= bound && Int(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1 && n <= bound) primes.push_back(n.convert_to<long>());
    else if (n > 1) primes.push_back(-1); // sentinel: unfactored remainder
    return primes;
}

} // namespace detail

/**
 * Outcome of the Bézout search over Z[t^±1]. `found` comes with an exact
 * witness; `impossible` with a human-readable certificate (a common
 * divisor, or a prime p modulo which both inputs share a factor);
 * `unknown` means the bounded procedure was inconclusive.
 */
struct BezoutResult {
    enum class Status { found, impossible, unknown };
    Status status = Status::unknown;
    LaurentPoly x, y;
    std::string certificate;

    bool found() const { return status == Status::found; }
    bool impossible() const { return status == Status::impossible; }
    bool unknown() const { return status == Status::unknown; }
};

/**
 * Certificate-based verdict about the ideal (a_1, ..., a_m) of Z[t^±1]:
 * `proper` (with certificate), `unit` (the ideal is everything), or
 * `unknown`.
 */
struct IdealVerdict {
    enum class Status { proper, unit, unknown };
    Status status = Status::unknown;
    std::string certificate;
};

namespace detail {

/// Mod-p obstruction: true when all generators share a factor in F_p[t^±1].
inline std::optional<std::string> modp_obstruction(const std::vector<LaurentPoly>& gens, long p) {
    FpPoly g;
    bool all_zero = true;
    for (const auto& a : gens) {
        FpPoly f = fp_from(a, p);
        if (!f.empty()) all_zero = false;
        g = g.empty() ? f : fp_gcd(g, f, p);
    }
    if (all_zero) return "all generators vanish mod " + std::to_string(p);
    if (g.size() >= 2)
        return "common factor of degree " + std::to_string(g.size() - 1) + " mod " +
               std::to_string(p);
    return std::nullopt;
}

} // namespace detail

/**
 * Decides, by certificates, whether the ideal generated by `gens` is proper.
 * Sound but incomplete: `unknown` is possible only when an integer arising
 * from the Q[t] Bézout combination cannot be fully factored.
 */
inline IdealVerdict ideal_verdict(const std::vector<LaurentPoly>& gens) {
    IdealVerdict v;
    LaurentPoly g;
    bool all_zero = true;
    for (const auto& a : gens) {
        g = gcd(g, a);
        if (!a.is_zero()) all_zero = false;
    }
    if (all_zero) {
        v.status = IdealVerdict::Status::proper;
        v.certificate = "zero ideal";
        return v;
    }
    if (g != LaurentPoly(1)) {
        v.status = IdealVerdict::Status::proper;
        v.certificate = "common divisor " + to_string(g);
        return v;
    }
    // gcd 1: combine generators over Q[t] into a Bézout identity
    // sum a_i U_i = g with g constant; every maximal ideal containing the
    // generators must then contain a prime of the witness denominators.
    std::vector<detail::QxPoly> witnesses;
    detail::QxPoly run;
    std::vector<std::size_t> used;
    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
        if (gens[idx].is_zero()) continue;
        auto f = detail::qx_from(gens[idx]);
        if (run.empty()) {
            run = f;
            used.push_back(idx);
            witnesses.assign(1, detail::QxPoly{Rat(1)});
            continue;
        }
        if (run.size() == 1) break; // already constant
        auto [gq, x, y] = detail::qx_ext_gcd(run, f);
        for (auto& w : witnesses) w = detail::qx_mul(w, x);
        witnesses.push_back(y);
        used.push_back(idx);
        run = gq;
    }
    if (run.size() != 1) {
        // positive-degree gcd over Q[t] despite Laurent gcd 1: inconclusive.
        v.status = IdealVerdict::Status::unknown;
        return v;
    }
    // normalize the identity sum a_i U_i = c to right-hand side 1
    const Rat constant = run[0];
    for (auto& w : witnesses)
        for (auto& c : w) c /= constant;
    Int denom_lcm = 1;
    for (const auto& w : witnesses)
        for (const auto& c : w)
            denom_lcm = denom_lcm / gcd_int(denom_lcm, Int(boost::multiprecision::denominator(c))) *
                        Int(boost::multiprecision::denominator(c));
    auto primes = detail::trial_factor(denom_lcm);
    bool unfactored = false;
    for (long p : primes) {
        if (p == -1) {
            unfactored = true;
            continue;
        }
        if (auto c = detail::modp_obstruction(gens, p)) {
            v.status = IdealVerdict::Status::proper;
            v.certificate = *c;
            return v;
        }
    }
    if (!unfactored) {
        v.status = IdealVerdict::Status::unit;
        return v;
    }
    return v;
}

/**
 * Searches for x, y in Z[t^±1] with a·x + b·y = 1.
 *
 * Strategy: unit shortcuts, then a gcd screen (common divisor certifies
 * impossibility), then mod-p certificates for the primes dividing the
 * denominator of the Q[t] Bézout identity, then a bounded integer-linear
 * search over exponent windows of width up to `degree_bound`.
 */
inline BezoutResult bezout_one(const LaurentPoly& a, const LaurentPoly& b,
                               int degree_bound = 6) {
    BezoutResult res;
    if (a.is_zero() && b.is_zero()) {
        res.status = BezoutResult::Status::impossible;
        res.certificate = "both inputs are zero";
        return res;
    }
    if (auto ub = b.as_unit()) {
        res.status = BezoutResult::Status::found;
        res.x = LaurentPoly(0);
        res.y = to_poly(ub->inverse());
        return res;
    }
    if (auto ua = a.as_unit()) {
        res.status = BezoutResult::Status::found;
        res.x = to_poly(ua->inverse());
        res.y = LaurentPoly(0);
        return res;
    }
    if (a.is_zero() || b.is_zero()) {
        res.status = BezoutResult::Status::impossible;
        res.certificate = "one input is zero and the other is not a unit";
        return res;
    }

    // integer case
    if (a.is_constant() && b.is_constant()) {
        auto [g, x, y] = ext_gcd(a.constant_value(), b.constant_value());
        if (g == 1) {
            res.status = BezoutResult::Status::found;
            res.x = LaurentPoly(x);
            res.y = LaurentPoly(y);
            return res;
        }
        res.status = BezoutResult::Status::impossible;
        res.certificate = "integer gcd " + g.str();
        return res;
    }

    const LaurentPoly g = gcd(a, b);
    if (g != LaurentPoly(1)) {
        res.status = BezoutResult::Status::impossible;
        res.certificate = "common divisor " + to_string(g);
        return res;
    }

    // Q[t] Bézout identity; collect the integer we must invert.
    auto fa = detail::qx_from(a), fb = detail::qx_from(b);
    auto [gq, x0, y0] = detail::qx_ext_gcd(fa, fb);
    if (gq.size() != 1) {
        res.status = BezoutResult::Status::impossible;
        res.certificate = "common polynomial factor over Q[t]";
        return res;
    }
    Int denom_lcm = 1;
    for (const auto& c : x0)
        denom_lcm = denom_lcm / gcd_int(denom_lcm, Int(boost::multiprecision::denominator(c))) *
                    Int(boost::multiprecision::denominator(c));
    for (const auto& c : y0)
        denom_lcm = denom_lcm / gcd_int(denom_lcm, Int(boost::multiprecision::denominator(c))) *
                    Int(boost::multiprecision::denominator(c));

    const auto sa = a.min_exp(), sb = b.min_exp();
    if (denom_lcm == 1) {
        LaurentPoly x, y;
        for (std::size_t i = 0; i < x0.size(); ++i)
            x += LaurentPoly::monomial(Int(boost::multiprecision::numerator(x0[i])),
                                       static_cast<std::int64_t>(i));
        for (std::size_t i = 0; i < y0.size(); ++i)
            y += LaurentPoly::monomial(Int(boost::multiprecision::numerator(y0[i])),
                                       static_cast<std::int64_t>(i));
        x = x.shifted(-sa);
        y = y.shifted(-sb);
        if (a * x + b * y == LaurentPoly(1)) {
            res.status = BezoutResult::Status::found;
            res.x = x;
            res.y = y;
            return res;
        }
    }

    auto primes = detail::trial_factor(denom_lcm);
    bool unfactored = false;
    for (long p : primes) {
        if (p == -1) {
            unfactored = true;
            continue;
        }
        if (auto c = detail::modp_obstruction({a, b}, p)) {
            res.status = BezoutResult::Status::impossible;
            res.certificate = *c;
            return res;
        }
    }

    // Bounded search: unknowns are the coefficients of x and y over
    // exponent windows; solve the integer linear system exactly.
    for (int extra = 0; extra <= degree_bound; extra += 2) {
        const std::int64_t xlo = -a.max_exp() - extra, xhi = -a.min_exp() + extra;
        const std::int64_t ylo = -b.max_exp() - extra, yhi = -b.min_exp() + extra;
        const std::int64_t rlo = std::min(a.min_exp() + xlo, b.min_exp() + ylo);
        const std::int64_t rhi = std::max(a.max_exp() + xhi, b.max_exp() + yhi);
        const std::size_t nx = static_cast<std::size_t>(xhi - xlo + 1);
        const std::size_t ny = static_cast<std::size_t>(yhi - ylo + 1);
        const std::size_t rows = static_cast<std::size_t>(rhi - rlo + 1);
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(nx + ny, Int(0)));
        std::vector<Int> rhs(rows, Int(0));
        rhs[static_cast<std::size_t>(-rlo)] = 1;
        for (std::size_t j = 0; j < nx; ++j)
            for (const auto& [e, c] : a.coeffs())
                m[static_cast<std::size_t>(e + xlo + static_cast<std::int64_t>(j) - rlo)][j] += c;
        for (std::size_t j = 0; j < ny; ++j)
            for (const auto& [e, c] : b.coeffs())
                m[static_cast<std::size_t>(e + ylo + static_cast<std::int64_t>(j) - rlo)][nx + j] += c;
        auto sol = detail::solve_integer_system(std::move(m), std::move(rhs));
        if (sol) {
            LaurentPoly x, y;
            for (std::size_t j = 0; j < nx; ++j)
                x += LaurentPoly::monomial((*sol)[j], xlo + static_cast<std::int64_t>(j));
            for (std::size_t j = 0; j < ny; ++j)
                y += LaurentPoly::monomial((*sol)[nx + j], ylo + static_cast<std::int64_t>(j));
            if (a * x + b * y == LaurentPoly(1)) {
                res.status = BezoutResult::Status::found;
                res.x = x;
                res.y = y;
                return res;
            }
        }
    }

    res.status = BezoutResult::Status::unknown;
    res.certificate = unfactored ? "search bounds exhausted (unfactored denominator)"
                                 : "search bounds exhausted (no mod-p obstruction found)";
    return res;
}

/**
 * Bounded-degree solve of sum_j coeffs(i,j)·x_j = rhs_i over Z[t^±1]:
 * the unknowns x_j range over polynomials supported on exponents in
 * [window_lo, window_hi]. Returns an exact solution or nullopt when none
 * exists within the window.
 */
inline std::optional<std::vector<LaurentPoly>> solve_poly_linear(
    const std::vector<std::vector<LaurentPoly>>& coeffs, const std::vector<LaurentPoly>& rhs,
    std::int64_t window_lo, std::int64_t window_hi) {
    const std::size_t eqs = coeffs.size();
    if (rhs.size() != eqs) throw std::invalid_argument("solve_poly_linear: rhs size mismatch");
    const std::size_t vars = eqs == 0 ? 0 : coeffs[0].size();
    if (window_hi < window_lo) throw std::invalid_argument("solve_poly_linear: empty window");
    const std::size_t width = static_cast<std::size_t>(window_hi - window_lo + 1);

    // exponent range of each equation row group
    std::int64_t elo = 0, ehi = 0;
    bool any = false;
    auto stretch = [&](std::int64_t lo, std::int64_t hi) {
        if (!any) {
            elo = lo;
            ehi = hi;
            any = true;
        } else {
            elo = std::min(elo, lo);
            ehi = std::max(ehi, hi);
        }
    };
    for (std::size_t i = 0; i < eqs; ++i) {
        for (std::size_t j = 0; j < vars; ++j)
            if (!coeffs[i][j].is_zero())
                stretch(coeffs[i][j].min_exp() + window_lo, coeffs[i][j].max_exp() + window_hi);
        if (!rhs[i].is_zero()) stretch(rhs[i].min_exp(), rhs[i].max_exp());
    }
    if (!any) {
        // zero system: solvable iff rhs is zero (it is, by the loop above)
        return std::vector<LaurentPoly>(vars);
    }
    const std::size_t rows_per_eq = static_cast<std::size_t>(ehi - elo + 1);
    std::vector<std::vector<Int>> m(eqs * rows_per_eq, std::vector<Int>(vars * width, Int(0)));
    std::vector<Int> c(eqs * rows_per_eq, Int(0));
    for (std::size_t i = 0; i < eqs; ++i) {
        for (const auto& [e, cv] : rhs[i].coeffs())
            c[i * rows_per_eq + static_cast<std::size_t>(e - elo)] = cv;
        for (std::size_t j = 0; j < vars; ++j)
            for (const auto& [e, cv] : coeffs[i][j].coeffs())
                for (std::size_t k = 0; k < width; ++k) {
                    const std::int64_t row_exp = e + window_lo + static_cast<std::int64_t>(k);
                    m[i * rows_per_eq + static_cast<std::size_t>(row_exp - elo)][j * width + k] +=
                        cv;
                }
    }
    auto sol = detail::solve_integer_system(std::move(m), std::move(c));
    if (!sol) return std::nullopt;
    std::vector<LaurentPoly> xs(vars);
    for (std::size_t j = 0; j < vars; ++j)
        for (std::size_t k = 0; k < width; ++k)
            xs[j] += LaurentPoly::monomial((*sol)[j * width + k],
                                           window_lo + static_cast<std::int64_t>(k));
    // exact recheck
    for (std::size_t i = 0; i < eqs; ++i) {
        LaurentPoly s;
        for (std::size_t j = 0; j < vars; ++j) s += coeffs[i][j] * xs[j];
        if (s != rhs[i]) return std::nullopt;
    }
    return xs;
}

} // namespace lform

#pragma once

#include "lform/integers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lform {

class LaurentPoly;
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// A unit of Z[t^±1], i.e. exactly ±t^k.
struct RingUnit {
    int sign = 1; // +1 or -1
    std::int64_t exp = 0;

    RingUnit() = default;
    RingUnit(int s, std::int64_t k) : sign(s), exp(k) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("RingUnit: sign must be ±1");
    }

    RingUnit inverse() const { return RingUnit(sign, -exp); }
    friend RingUnit operator*(const RingUnit& a, const RingUnit& b) {
        return RingUnit(a.sign * b.sign, a.exp + b.exp);
    }
    friend bool operator==(const RingUnit& a, const RingUnit& b) {
        return a.sign == b.sign && a.exp == b.exp;
    }
};

/**
 * Sparse integer Laurent polynomial: an element of Z[t^±1].
 *
 * Invariant: no stored coefficient is zero; the zero polynomial is the
 * empty map. Exponents are arbitrary (possibly negative) integers and
 * coefficients are arbitrary-precision.
 */
class LaurentPoly {
public:
    using Exp = std::int64_t;
    using Map = std::map<Exp, Int>;

    LaurentPoly() = default;
    LaurentPoly(const Int& c) {
        if (c != 0) c_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(Int(c)) {}
    LaurentPoly(int c) : LaurentPoly(Int(c)) {}

    static LaurentPoly monomial(const Int& c, Exp k) {
        LaurentPoly p;
        if (c != 0) p.c_[k] = c;
        return p;
    }
    static LaurentPoly t(Exp k = 1) { return monomial(1, k); }
    static LaurentPoly from_map(Map m) {
        LaurentPoly p;
        for (auto& [k, c] : m)
            if (c != 0) p.c_.emplace(k, std::move(c));
        return p;
    }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t num_terms() const { return c_.size(); }

    Int coeff(Exp k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Int(0) : it->second;
    }

    Exp min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return c_.begin()->first;
    }
    Exp max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
        return c_.rbegin()->first;
    }
    /// max_exp - min_exp; 0 for the zero polynomial.
    Exp span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    Int leading_coeff() const { return is_zero() ? Int(0) : c_.rbegin()->second; }

    bool is_constant() const { return is_zero() || (c_.size() == 1 && c_.begin()->first == 0); }
    Int constant_value() const {
        if (!is_constant()) throw std::domain_error("not a constant polynomial");
        return is_zero() ? Int(0) : c_.begin()->second;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [k, c] : b.c_) r.add_term(k, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [k, c] : b.c_) r.add_term(k, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    LaurentPoly scaled(const Int& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [k, c] : c_) r.c_.emplace(k, c * s);
        return r;
    }
    /// Multiply by t^k.
    LaurentPoly shifted(Exp k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
        return r;
    }
    LaurentPoly scaled_by_unit(const RingUnit& u) const {
        return shifted(u.exp).scaled(u.sign);
    }

    /// The involution t -> t^-1 (a ring automorphism of order two).
    LaurentPoly involute() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_) r.c_.emplace(-k, c);
        return r;
    }

    bool is_symmetric() const { return *this == involute(); }

    /// Sum of coefficients, i.e. the augmentation evaluation at t = 1.
    Int evaluate_at_one() const {
        Int s = 0;
        for (const auto& [k, c] : c_) s += c;
        return s;
    }

    /// gcd of all coefficients, >= 0 (0 only for the zero polynomial).
    Int content() const {
        Int g = 0;
        for (const auto& [k, c] : c_) g = gcd_int(g, c);
        return g;
    }

    /// If this is ±t^k returns that unit.
    std::optional<RingUnit> as_unit() const {
        if (c_.size() != 1) return std::nullopt;
        const auto& [k, c] = *c_.begin();
        if (c == 1) return RingUnit(1, k);
        if (c == -1) return RingUnit(-1, k);
        return std::nullopt;
    }

    /// Multiply by the unique unit making the lowest exponent 0 and the
    /// leading (highest-exponent) coefficient positive.
    LaurentPoly normalized() const {
        if (is_zero()) return LaurentPoly();
        LaurentPoly r = shifted(-min_exp());
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }

    /// True if every coefficient is divisible by m.
    bool coeffs_divisible_by(const Int& m) const {
        for (const auto& [k, c] : c_)
            if (c % m != 0) return false;
        return true;
    }

private:
    void add_term(Exp k, const Int& c) {
        if (c == 0) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    Map c_;
};

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<LaurentPoly::Exp, Int> acc;
    for (const auto& [ka, ca] : a.coeffs())
        for (const auto& [kb, cb] : b.coeffs()) acc[ka + kb] += ca * cb;
    return LaurentPoly::from_map(std::move(acc));
}

inline LaurentPoly to_poly(const RingUnit& u) { return LaurentPoly::monomial(u.sign, u.exp); }

/// Canonical textual form: ascending exponents, explicit t^k, spaces
/// around binary signs, e.g. "-t^-1 + 2 - t". Frozen for golden tests.
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.coeffs()) {
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "t";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << to_string(p);
}

namespace detail {

/// Dense Z[t] polynomial, coefficient of t^i at index i, no trailing zeros.
using ZxPoly = std::vector<Int>;

inline void zx_trim(ZxPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZxPoly zx_from(const LaurentPoly& p) {
    ZxPoly r;
    if (p.is_zero()) return r;
    auto lo = p.min_exp();
    r.assign(static_cast<std::size_t>(p.max_exp() - lo) + 1, Int(0));
    for (const auto& [k, c] : p.coeffs()) r[static_cast<std::size_t>(k - lo)] = c;
    return r;
}

inline LaurentPoly zx_to_laurent(const ZxPoly& p) {
    LaurentPoly::Map m;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) m[static_cast<LaurentPoly::Exp>(i)] = p[i];
    return LaurentPoly::from_map(std::move(m));
}

inline int zx_deg(const ZxPoly& p) { return static_cast<int>(p.size()) - 1; } // -1 for 0

inline ZxPoly zx_mul(const ZxPoly& a, const ZxPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZxPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zx_trim(r);
    return r;
}

inline ZxPoly zx_scale(const ZxPoly& a, const Int& s) {
    if (s == 0) return {};
    ZxPoly r = a;
    for (auto& c : r) c *= s;
    return r;
}

inline ZxPoly zx_sub(const ZxPoly& a, const ZxPoly& b) {
    ZxPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zx_trim(r);
    return r;
}

inline Int zx_content(const ZxPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd_int(g, c);
    return g;
}

inline ZxPoly zx_primitive(const ZxPoly& p) {
    Int g = zx_content(p);
    if (g == 0) return {};
    ZxPoly r = p;
    for (auto& c : r) c /= g;
    if (r.back() < 0)
        for (auto& c : r) c = -c;
    return r;
}

/// Pseudo-remainder: returns R with lc(B)^(degA-degB+1) * A = Q*B + R.
inline ZxPoly zx_prem(ZxPoly a, const ZxPoly& b) {
    const int db = zx_deg(b);
    const Int lb = b.back();
    int scale_left = zx_deg(a) - db + 1;
    while (!a.empty() && zx_deg(a) >= db) {
        const int da = zx_deg(a);
        const Int la = a.back();
        // a = lb*a - la * t^(da-db) * b
        ZxPoly sh(static_cast<std::size_t>(da - db), Int(0));
        sh.insert(sh.end(), b.begin(), b.end());
        a = zx_sub(zx_scale(a, lb), zx_scale(sh, la));
        --scale_left;
        if (zx_deg(a) == da) throw std::logic_error("zx_prem: no degree drop");
    }
    // degree steps can be skipped; make up the full classical scaling
    for (; scale_left > 0; --scale_left) a = zx_scale(a, lb);
    return a;
}

/// Subresultant PRS gcd of two Z[t] polynomials, up to sign.
inline ZxPoly zx_gcd(ZxPoly a, ZxPoly b) {
    if (a.empty()) return zx_primitive(b);
    if (b.empty()) return zx_primitive(a);
    Int cont = gcd_int(zx_content(a), zx_content(b));
    a = zx_primitive(a);
    b = zx_primitive(b);
    if (zx_deg(a) < zx_deg(b)) std::swap(a, b);
    Int g = 1, h = 1;
    while (!b.empty() && zx_deg(b) > 0) {
        const int delta = zx_deg(a) - zx_deg(b);
        ZxPoly r = zx_prem(a, b);
        a = b;
        if (r.empty()) {
            b = r;
            break;
        }
        // divide r by g*h^delta (exact, by the subresultant theory)
        Int divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        b = r;
        for (auto& c : b) {
            if (c % divisor != 0) throw std::logic_error("zx_gcd: inexact subresultant step");
            c /= divisor;
        }
        g = a.back();
        // h = h^(1-delta) * g^delta
        if (delta == 0) {
            // unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int num = 1;
            for (int i = 0; i < delta; ++i) num *= g;
            Int den = 1;
            for (int i = 0; i < delta - 1; ++i) den *= h;
            if (num % den != 0) throw std::logic_error("zx_gcd: inexact h update");
            h = num / den;
        }
    }
    ZxPoly res;
    if (!b.empty()) {
        // gcd of the primitive parts is a constant
        res = ZxPoly{Int(1)};
    } else {
        res = zx_primitive(a);
    }
    // reattach content
    ZxPoly out = zx_scale(res, cont);
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

/// Exact division in Z[t]; nullopt if b does not divide a.
inline std::optional<ZxPoly> zx_div_exact(const ZxPoly& a, const ZxPoly& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return ZxPoly{};
    if (zx_deg(a) < zx_deg(b)) return std::nullopt;
    ZxPoly r = a;
    ZxPoly q(static_cast<std::size_t>(zx_deg(a) - zx_deg(b)) + 1, Int(0));
    const Int lb = b.back();
    while (!r.empty() && zx_deg(r) >= zx_deg(b)) {
        if (r.back() % lb != 0) return std::nullopt;
        const Int c = r.back() / lb;
        const int sh = zx_deg(r) - zx_deg(b);
        q[static_cast<std::size_t>(sh)] = c;
        ZxPoly sb(static_cast<std::size_t>(sh), Int(0));
        sb.insert(sb.end(), b.begin(), b.end());
        r = zx_sub(r, zx_scale(sb, c));
    }
    if (!r.empty()) return std::nullopt;
    zx_trim(q);
    return q;
}

} // namespace detail

/// Exact division in Z[t^±1]; nullopt when q does not divide p.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return LaurentPoly();
    const auto sp = p.min_exp(), sq = q.min_exp();
    auto quot = detail::zx_div_exact(detail::zx_from(p), detail::zx_from(q));
    if (!quot) return std::nullopt;
    return detail::zx_to_laurent(*quot).shifted(sp - sq);
}

inline bool divides(const LaurentPoly& q, const LaurentPoly& p) {
    return divide_exact(p, q).has_value();
}

/**
 * A greatest common divisor in the UFD Z[t^±1], normalized so the lowest
 * exponent is 0 and the leading coefficient is positive. gcd(0,0) = 0.
 */
inline LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    auto g = detail::zx_gcd(detail::zx_from(p), detail::zx_from(q));
    return detail::zx_to_laurent(g).normalized();
}

/**
 * Decides p ≐ q (equality up to ±t^k). Returns the unit u with p = u·q
 * when it exists. (0,0) yields the identity unit; (0, nonzero) none.
 */
inline std::optional<RingUnit> doteq(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() && q.is_zero()) return RingUnit(1, 0);
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    if (p.num_terms() != q.num_terms()) return std::nullopt;
    const auto k = p.min_exp() - q.min_exp();
    for (int sign : {1, -1}) {
        bool ok = true;
        for (const auto& [e, c] : q.coeffs()) {
            if (p.coeff(e + k) != (sign > 0 ? c : Int(-c))) {
                ok = false;
                break;
            }
        }
        if (ok) return RingUnit(sign, k);
    }
    return std::nullopt;
}

} // namespace lform

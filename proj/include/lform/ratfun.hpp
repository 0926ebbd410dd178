#pragma once

#include "lform/laurent.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lform {

/**
 * Exact element of the rational function field Q(t).
 *
 * Canonical form: value = t^shift * num / den with num, den in Z[t],
 * nonzero constant terms (so the net power of t lives in `shift`),
 * gcd(num, den) = 1 in Z[t] including integer content, and den with
 * positive leading coefficient. Zero is (shift 0, num 0, den 1).
 * Equality of canonical forms is structural equality.
 */
class RatFun {
public:
    RatFun() : num_(0), den_(1), shift_(0) {}
    RatFun(const Int& c) : RatFun(LaurentPoly(c)) {}
    RatFun(long c) : RatFun(LaurentPoly(c)) {}
    RatFun(int c) : RatFun(LaurentPoly(c)) {}
    RatFun(const LaurentPoly& p) : num_(0), den_(1), shift_(0) { init(p, LaurentPoly(1)); }
    RatFun(const LaurentPoly& numerator, const LaurentPoly& denominator)
        : num_(0), den_(1), shift_(0) {
        init(numerator, denominator);
    }
    RatFun(const Rat& q)
        : RatFun(LaurentPoly(Int(boost::multiprecision::numerator(q))),
                 LaurentPoly(Int(boost::multiprecision::denominator(q)))) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::int64_t shift() const { return shift_; }

    bool is_zero() const { return num_.is_zero(); }

    /// Numerator with the monomial shift folded in (a Laurent polynomial).
    LaurentPoly shifted_num() const { return num_.shifted(shift_); }

    bool is_integral_laurent() const { return den_ == LaurentPoly(1); }

    LaurentPoly to_laurent() const {
        if (!is_integral_laurent()) throw std::domain_error("RatFun: not in Z[t^±1]");
        return shifted_num();
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.shifted_num() * b.den_ + b.shifted_num() * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.shifted_num() * b.den_ - b.shifted_num() * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.shifted_num() * b.shifted_num(), a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.shifted_num() * b.den_, a.den_ * b.shifted_num());
    }
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
    RatFun& operator/=(const RatFun& b) { return *this = *this / b; }

    RatFun inverse() const { return RatFun(1) / *this; }

    /// Field involution extending t -> t^-1 on Z[t^±1].
    RatFun conj() const {
        if (is_zero()) return RatFun();
        return RatFun(shifted_num().involute(), den_.involute());
    }

    bool is_symmetric() const { return *this == conj(); }

private:
    void init(const LaurentPoly& n, const LaurentPoly& d) {
        if (d.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (n.is_zero()) {
            num_ = LaurentPoly(0);
            den_ = LaurentPoly(1);
            shift_ = 0;
            return;
        }
        const auto sn = n.min_exp(), sd = d.min_exp();
        shift_ = sn - sd;
        LaurentPoly N = n.shifted(-sn), D = d.shifted(-sd);
        const LaurentPoly g = lform::gcd(N, D);
        auto qn = divide_exact(N, g), qd = divide_exact(D, g);
        if (!qn || !qd) throw std::logic_error("RatFun: gcd does not divide");
        num_ = *qn;
        den_ = *qd;
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    LaurentPoly num_, den_; // elements of Z[t] with nonzero constant term
    std::int64_t shift_;
};

/// f ≐ g in Q(t): f = ±t^k g. Returns the unit when it exists.
inline std::optional<RingUnit> doteq(const RatFun& f, const RatFun& g) {
    if (f.is_zero() && g.is_zero()) return RingUnit(1, 0);
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    const RatFun q = f / g;
    if (!q.is_integral_laurent()) return std::nullopt;
    return q.to_laurent().as_unit();
}

inline std::string to_string(const RatFun& f) {
    if (f.is_integral_laurent()) return to_string(f.to_laurent());
    return to_string(f.shifted_num()) + " / " + to_string(f.den());
}

inline std::ostream& operator<<(std::ostream& os, const RatFun& f) {
    return os << to_string(f);
}

/**
 * An element of Q(t) regarded modulo Z[t^±1]. Two representatives are
 * identified exactly when their difference is an integral Laurent
 * polynomial.
 */
class QuotClass {
public:
    QuotClass() = default;
    explicit QuotClass(RatFun rep) : rep_(std::move(rep)) {}

    const RatFun& representative() const { return rep_; }

    bool is_trivial() const { return rep_.is_integral_laurent(); }

    friend bool operator==(const QuotClass& a, const QuotClass& b) {
        return (a.rep_ - b.rep_).is_integral_laurent();
    }
    friend bool operator!=(const QuotClass& a, const QuotClass& b) { return !(a == b); }

    QuotClass operator-() const { return QuotClass(-rep_); }

private:
    RatFun rep_;
};

/// Equality in Q(t)/Z[t^±1].
inline bool quot_eq(const RatFun& f, const RatFun& g) {
    return (f - g).is_integral_laurent();
}

} // namespace lform

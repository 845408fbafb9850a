// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_REAL_HPP
#define ZCL_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "zcl/errors.hpp"
#include "zcl/rational.hpp"

namespace zcl {

/// Binary precision comfortably covering `digits` significant decimal digits.
inline mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

/// Arbitrary-precision real scalar (MPFR, round-to-nearest).
///
/// Every value carries its own precision, fixed at construction; arithmetic
/// results take the larger precision of their operands.  There is no global
/// precision state, so concurrent evaluation under distinct precision
/// contexts is safe.
class Real {
public:
    Real() { mpfr_init2(v_, 53); }  // NaN placeholder for containers

    Real(long value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    Real(const Integer& value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    Real(const Rational& value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    Real(Real&& other) noexcept {
        mpfr_init2(v_, 53);
        mpfr_swap(v_, other.v_);
    }

    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    static Real nan(mpfr_prec_t bits) { return Real(with_prec{bits}); }

    static Real from_string(std::string_view text, mpfr_prec_t bits) {
        Real r(with_prec{bits});
        std::string s(text);
        if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw parse_error("malformed real literal: " + s);
        return r;
    }

    static Real pi(mpfr_prec_t bits) {
        Real r(with_prec{bits});
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    /// Euler's constant from MPFR; used as a test anchor, never as a production path.
    static Real euler(mpfr_prec_t bits) {
        Real r(with_prec{bits});
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    /// Copy rounded to exactly `bits` of precision.
    Real to_prec(mpfr_prec_t bits) const {
        Real r(with_prec{bits});
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// True iff the value is an exact integer.
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    mpfr_srcptr mp() const { return v_; }
    mpfr_ptr mp() { return v_; }  // library-internal construction only

    // -- arithmetic ---------------------------------------------------------

    friend Real operator-(const Real& a) {
        Real r = make_for(a, a);
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, const Real& b) {
        Real r = make_for(a, b);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r = make_for(a, b);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r = make_for(a, b);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r = make_for(a, b);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, long b) {
        Real r = make_for(a, a);
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, long b) {
        Real r = make_for(a, a);
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long a, const Real& b) {
        Real r = make_for(b, b);
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r = make_for(a, a);
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r = make_for(a, a);
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r = make_for(b, b);
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }
    Real& operator+=(long b) { mpfr_add_si(v_, v_, b, MPFR_RNDN); return *this; }
    Real& operator-=(long b) { mpfr_sub_si(v_, v_, b, MPFR_RNDN); return *this; }
    Real& operator*=(long b) { mpfr_mul_si(v_, v_, b, MPFR_RNDN); return *this; }
    Real& operator/=(long b) { mpfr_div_si(v_, v_, b, MPFR_RNDN); return *this; }

    // comparisons return false on NaN, matching IEEE semantics
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0 && !a.is_nan(); }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0 && !a.is_nan(); }
    friend bool operator<=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Real& a, long b) { return !(a == b); }

    // -- elementary functions ------------------------------------------------

    friend Real abs(const Real& a) {
        Real r = make_for(a, a);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& a) {
        if (a < 0) throw domain_error("sqrt of negative value");
        Real r = make_for(a, a);
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real log(const Real& a) {
        if (a.is_zero() || a < 0) throw domain_error("log requires a positive argument");
        Real r = make_for(a, a);
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real log1p(const Real& a) {
        Real r = make_for(a, a);
        mpfr_log1p(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real exp(const Real& a) {
        Real r = make_for(a, a);
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real expm1(const Real& a) {
        Real r = make_for(a, a);
        mpfr_expm1(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& base, const Real& e) {
        if (base.is_zero() && e <= 0) throw domain_error("pow: zero base with nonpositive exponent");
        if (base < 0 && !e.is_integer()) throw domain_error("pow: negative base with non-integer exponent");
        Real r = make_for(base, e);
        mpfr_pow(r.v_, base.v_, e.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& base, long e) {
        if (base.is_zero() && e < 0) throw domain_error("pow: zero base with negative exponent");
        Real r = make_for(base, base);
        mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real sin(const Real& a) {
        Real r = make_for(a, a);
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cos(const Real& a) {
        Real r = make_for(a, a);
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend void sin_cos(Real& s, Real& c, const Real& a) {
        s = make_for(a, a);
        c = make_for(a, a);
        mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
    }
    friend Real sinh(const Real& a) {
        Real r = make_for(a, a);
        mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cosh(const Real& a) {
        Real r = make_for(a, a);
        mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real tanh(const Real& a) {
        Real r = make_for(a, a);
        mpfr_tanh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real atan2(const Real& y, const Real& x) {
        Real r = make_for(y, x);
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& x, const Real& y) {
        Real r = make_for(x, y);
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real floor(const Real& a) {
        Real r = make_for(a, a);
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    friend Real ceil(const Real& a) {
        Real r = make_for(a, a);
        mpfr_ceil(r.v_, a.v_);
        return r;
    }
    friend Real ldexp(const Real& a, long e) {
        Real r = make_for(a, a);
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real fmax(const Real& a, const Real& b) {
        Real r = make_for(a, b);
        mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real fmin(const Real& a, const Real& b) {
        Real r = make_for(a, b);
        mpfr_min(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    /// MPFR gamma / log-gamma, exposed for test oracles.
    friend Real tgamma_oracle(const Real& a) {
        Real r = make_for(a, a);
        mpfr_gamma(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real lgamma_oracle(const Real& a) {
        if (a <= 0) throw domain_error("lgamma_oracle requires positive argument");
        Real r = make_for(a, a);
        mpfr_lngamma(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

private:
    struct with_prec {
        mpfr_prec_t bits;
    };
    explicit Real(with_prec wp) { mpfr_init2(v_, std::max<mpfr_prec_t>(wp.bits, MPFR_PREC_MIN)); }

    static Real make_for(const Real& a, const Real& b) {
        return Real(with_prec{std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_))});
    }

    mpfr_t v_;
};

enum class RealFormat { automatic, fixed, scientific };

/// Renders `digits` significant figures; scientific notation for
/// |x| < 1e-4 or |x| >= 1e7 in automatic mode.
inline std::string to_string(const Real& x, std::size_t digits,
                             RealFormat fmt = RealFormat::automatic) {
    if (x.is_nan()) return "nan";
    if (x.is_inf()) return x.sign() > 0 ? "inf" : "-inf";
    if (x.is_zero()) return "0";
    if (digits < 1) digits = 1;

    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, x.mp(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(mant.begin());
    // value = 0.mant * 10^e ; normalized scientific exponent is e-1
    long sci_exp = static_cast<long>(e) - 1;

    bool use_sci = fmt == RealFormat::scientific ||
                   (fmt == RealFormat::automatic && (sci_exp < -4 || sci_exp >= 7));
    std::string out;
    if (use_sci) {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e";
        out += (sci_exp < 0 ? "-" : "+");
        std::string ed = std::to_string(sci_exp < 0 ? -sci_exp : sci_exp);
        if (ed.size() < 2) ed.insert(ed.begin(), '0');
        out += ed;
    } else if (e <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
    } else if (static_cast<std::size_t>(e) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
    }
    return neg ? "-" + out : out;
}

}  // namespace zcl

#endif

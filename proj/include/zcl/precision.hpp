// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_PRECISION_HPP
#define ZCL_PRECISION_HPP

#include <string>
#include <string_view>

#include "zcl/complex.hpp"
#include "zcl/errors.hpp"
#include "zcl/real.hpp"

namespace zcl {

/// Working precision and comparison tolerances, threaded explicitly through
/// every numeric operation.  Immutable after construction.
class PrecisionContext {
public:
    /// digits >= 15, guard_digits >= 5, tolerances positive and >= 10^-digits.
    static PrecisionContext make(long digits = 50, long guard_digits = 10,
                                 std::string_view tol_abs = "1e-40",
                                 std::string_view tol_rel = "1e-40") {
        if (digits < 15) throw domain_error("PrecisionContext: digits must be >= 15");
        if (guard_digits < 5) throw domain_error("PrecisionContext: guard_digits must be >= 5");
        PrecisionContext ctx;
        ctx.digits_ = digits;
        ctx.guard_digits_ = guard_digits;
        ctx.bits_ = bits_for_digits(digits + guard_digits);
        ctx.tol_abs_ = Real::from_string(tol_abs, ctx.bits_);
        ctx.tol_rel_ = Real::from_string(tol_rel, ctx.bits_);
        Real tol_floor = pow(Real(10, ctx.bits_), -digits);
        if (!(ctx.tol_abs_ > 0) || !(ctx.tol_rel_ > 0))
            throw domain_error("PrecisionContext: tolerances must be positive");
        if (ctx.tol_abs_ < tol_floor || ctx.tol_rel_ < tol_floor)
            throw domain_error("PrecisionContext: tolerances below 10^-digits are not resolvable");
        // Euler-Maclaurin plans must land below half the guard headroom.
        ctx.plan_threshold_ = pow(Real(10, ctx.bits_), -(digits + guard_digits / 2));
        return ctx;
    }

    long digits() const { return digits_; }
    long guard_digits() const { return guard_digits_; }
    long working_digits() const { return digits_ + guard_digits_; }
    mpfr_prec_t bits() const { return bits_; }
    const Real& tol_abs() const { return tol_abs_; }
    const Real& tol_rel() const { return tol_rel_; }
    const Real& plan_threshold() const { return plan_threshold_; }

    /// Context at roughly half the digits, for deep series terms whose
    /// contribution is suppressed factorially.
    PrecisionContext reduced() const {
        long d = std::max<long>(15, digits_ / 2);
        std::string tol = "1e-" + std::to_string(std::max<long>(10, d - 5));
        return make(d, guard_digits_, tol, tol);
    }

    Real real(long v) const { return Real(v, bits_); }
    Real real(const Rational& v) const { return Real(v, bits_); }
    Complex complex(long re) const { return Complex(re, bits_); }
    Complex complex(const Rational& re, const Rational& im) const {
        return {Real(re, bits_), Real(im, bits_)};
    }

private:
    PrecisionContext() = default;

    long digits_ = 50;
    long guard_digits_ = 10;
    mpfr_prec_t bits_ = bits_for_digits(60);
    Real tol_abs_, tol_rel_, plan_threshold_;
};

/// |x - y| <= tol_abs + tol_rel * max(|x|, |y|)
inline bool approx_equal(const Real& x, const Real& y, const PrecisionContext& ctx) {
    return abs(x - y) <= ctx.tol_abs() + ctx.tol_rel() * fmax(abs(x), abs(y));
}

inline bool approx_equal(const Complex& x, const Complex& y, const PrecisionContext& ctx) {
    return abs(x - y) <= ctx.tol_abs() + ctx.tol_rel() * fmax(abs(x), abs(y));
}

}  // namespace zcl

#endif

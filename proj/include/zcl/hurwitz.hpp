// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_HURWITZ_HPP
#define ZCL_HURWITZ_HPP

#include <algorithm>
#include <utility>

#include "zcl/bernoulli.hpp"
#include "zcl/complex.hpp"
#include "zcl/errors.hpp"
#include "zcl/precision.hpp"

namespace zcl {

/// Accepted Euler-Maclaurin truncation: N directly summed terms, J Bernoulli
/// tail terms, and the a-priori remainder bound that justified acceptance.
struct EulerMaclaurinPlan {
    long shift_terms = 0;   // N
    long tail_order = 0;    // J
    Real error_bound;       // bound on |R| (and on |dR/ds| when planned for it)
};

namespace detail {

inline constexpr long kMaxShiftTerms = 1000000;  // hard caps for the planner
inline constexpr long kMaxTailOrder = 200;

/// ((s)_m, d/ds (s)_m) by the product rule; robust at s = -i (no division).
inline std::pair<Complex, Complex> pochhammer_pair(const Complex& s, long m) {
    mpfr_prec_t wb = s.prec();
    Complex p(1, wb), d(0, wb);
    for (long i = 0; i < m; ++i) {
        Complex f = s + i;
        d = d * f + p;
        p = p * f;
    }
    return {p, d};
}

/// Remainder bound for the truncation (N, J) at point s, base N+a.
///
/// Value form: |B_{2J+2}/(2J+2)!| |(s)_{2J+1}| (N+a)^{-sigma-2J-1} |s+2J+1|/(sigma+2J+1).
/// Derivative form (from differentiating the remainder integral, with
/// sup |periodized B_{2J+1}| <= 4 (2J+1)!/(2pi)^{2J+1}):
///   4 (2pi)^{-(2J+1)} (N+a)^{-sigma-2J}/(sigma+2J)
///     * [ |d/ds (s)_{2J+1}| + |(s)_{2J+1}| (ln(N+a) + 1/(sigma+2J)) ].
/// Returns +inf when the validity condition sigma + 2J > 0 fails.
inline Real em_tail_bound(const Complex& s, const Real& a, long n_terms, long j_order,
                          bool for_derivative) {
    mpfr_prec_t wb = std::max(s.prec(), a.prec());
    const Real& sigma = s.re;
    Real two_j(2 * j_order, wb);
    if (!(sigma + two_j > Real(0, wb))) {
        Real inf = Real(1, wb) / Real(0, wb);
        return inf;
    }
    Real base = a + n_terms;
    auto [poch, dpoch] = pochhammer_pair(s, 2 * j_order + 1);
    Real abs_poch = abs(poch);

    Rational bfac = bernoulli_number(2 * j_order + 2) /
                    Rational(factorial_int(2 * j_order + 2));
    Real value_bound = abs(Real(bfac, wb));
    value_bound *= abs_poch * pow(base, -(sigma + two_j + 1));
    value_bound *= abs(s + (2 * j_order + 1)) / (sigma + two_j + 1);
    if (!for_derivative) return value_bound;

    Real two_pi = 2 * Real::pi(wb);
    Real deriv_bound = 4 * pow(two_pi, -(2 * j_order + 1));
    deriv_bound *= pow(base, -(sigma + two_j)) / (sigma + two_j);
    deriv_bound *= abs(dpoch) + abs_poch * (log(base) + 1 / (sigma + two_j));
    return fmax(value_bound, deriv_bound);
}

}  // namespace detail

/// Chooses (N, J) adaptively: start at N = max(20, ceil(1.3 digits)), J = 10,
/// then double N and increment J until the rigorous remainder bound drops
/// below 10^-(digits + guard/2).  Caps: N <= 10^6, J <= 200.
inline EulerMaclaurinPlan plan_hurwitz(const Complex& s, const Real& a,
                                       const PrecisionContext& ctx, bool for_derivative) {
    long n_terms = std::max<long>(20, static_cast<long>(std::ceil(1.3 * ctx.digits())));
    long j_order = 10;
    double sigma_d = s.re.to_double();
    while (sigma_d + 2 * j_order <= 0.5) ++j_order;

    const Real& threshold = ctx.plan_threshold();
    for (;;) {
        Real bound = detail::em_tail_bound(s, a, n_terms, j_order, for_derivative);
        if (bound.is_finite() && bound <= threshold)
            return {n_terms, j_order, bound};
        if (n_terms >= detail::kMaxShiftTerms && j_order >= detail::kMaxTailOrder)
            throw plan_error("hurwitz: requested precision unreachable within resource caps");
        n_terms = std::min(2 * n_terms, detail::kMaxShiftTerms);
        j_order = std::min(j_order + 1, detail::kMaxTailOrder);
    }
}

namespace detail {

struct HurwitzResult {
    Complex value;
    Complex ds;
};

/// Evaluates the accepted plan.  The same truncation produces value and
/// derivative so the two never disagree by a truncation mismatch.
inline HurwitzResult hurwitz_eval(const Complex& s_in, const Real& a_in,
                                  const PrecisionContext& ctx, bool need_ds,
                                  const EulerMaclaurinPlan& plan) {
    // Direct terms grow like (n+a)^{-Re s} for Re s < 1 and cancel against the
    // integral term; widen the working precision by their magnitude.
    long extra_digits = 0;
    double sigma_d = s_in.re.to_double();
    if (sigma_d < 1.0) {
        double mag = (1.0 - sigma_d) *
                     std::log10(plan.shift_terms + std::max(1.0, a_in.to_double()));
        extra_digits = static_cast<long>(std::ceil(std::max(0.0, mag))) + 2;
    }
    mpfr_prec_t wb = bits_for_digits(ctx.working_digits() + extra_digits);

    Complex s = s_in.to_prec(wb);
    Real a = a_in.to_prec(wb);
    const long n_terms = plan.shift_terms;
    const long j_order = plan.tail_order;
    const bool s_real = s.is_real();

    Complex value(0, wb), ds(0, wb);
    Complex neg_s = -s;
    for (long n = 0; n < n_terms; ++n) {
        Real x = a + n;
        if (need_ds || !s_real) {
            Real lx = log(x);
            Complex t = exp(neg_s * lx);
            value += t;
            if (need_ds) ds -= t * lx;
        } else {
            value += Complex(pow(x, neg_s.re));
        }
    }

    Real base = a + n_terms;
    Real ln_base = log(base);
    Complex sm1 = s - 1;
    Complex a1 = exp((Complex(1, wb) - s) * ln_base) / sm1;  // (N+a)^{1-s}/(s-1)
    Complex a0 = a1 * sm1 / base;                            // (N+a)^{-s}
    value += a1 + a0 / 2;
    if (need_ds) {
        ds += -(a1 * ln_base) - a1 / sm1;  // d/ds of (N+a)^{1-s}/(s-1)
        ds -= a0 * ln_base / 2;
    }

    // Bernoulli tail: sum_j B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
    Complex poch = s, dpoch(1, wb);
    Complex xpow = a0 / base;  // (N+a)^{-s-1}
    Real inv_base2 = 1 / (base * base);
    for (long j = 1; j <= j_order; ++j) {
        if (j > 1) {
            long m = 2 * j - 3;  // advance (s)_m from m to m+2
            Complex f1 = s + m, f2 = s + (m + 1);
            Complex f12 = f1 * f2;
            dpoch = dpoch * f12 + poch * (f1 + f2);
            poch = poch * f12;
            xpow = xpow * inv_base2;
        }
        Rational coeff_q = bernoulli_number(2 * j) / Rational(factorial_int(2 * j));
        Real coeff(coeff_q, wb);
        Complex term = poch * xpow;
        value += term * coeff;
        if (need_ds) ds += (dpoch * xpow - term * ln_base) * coeff;
    }

    mpfr_prec_t out = ctx.bits();
    return {value.to_prec(out), ds.to_prec(out)};
}

inline void check_hurwitz_args(const Complex& s, const Real& a) {
    if (!(a > 0)) throw domain_error("hurwitz_zeta: a must be positive");
    if (s.is_real() && s.re == 1) throw pole_error("hurwitz_zeta: pole at s = 1");
}

}  // namespace detail

/// Hurwitz zeta zeta(s, a) for complex s != 1 and real a > 0.
inline Complex hurwitz_zeta(const Complex& s, const Real& a, const PrecisionContext& ctx) {
    detail::check_hurwitz_args(s, a);
    EulerMaclaurinPlan plan = plan_hurwitz(s, a, ctx, false);
    return detail::hurwitz_eval(s, a, ctx, false, plan).value;
}

/// Value and s-derivative from one shared plan.
inline std::pair<Complex, Complex> hurwitz_zeta_with_ds(const Complex& s, const Real& a,
                                                        const PrecisionContext& ctx) {
    detail::check_hurwitz_args(s, a);
    EulerMaclaurinPlan plan = plan_hurwitz(s, a, ctx, true);
    auto r = detail::hurwitz_eval(s, a, ctx, true, plan);
    return {r.value, r.ds};
}

/// d/ds zeta(s, a).
inline Complex hurwitz_zeta_ds(const Complex& s, const Real& a, const PrecisionContext& ctx) {
    return hurwitz_zeta_with_ds(s, a, ctx).second;
}

/// Riemann zeta as zeta(s, 1).
inline Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    return hurwitz_zeta(s, Real(1, ctx.bits()), ctx);
}

}  // namespace zcl

#endif

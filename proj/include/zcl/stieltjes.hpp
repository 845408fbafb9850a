// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_STIELTJES_HPP
#define ZCL_STIELTJES_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "zcl/hurwitz.hpp"
#include "zcl/logpoly.hpp"
#include "zcl/precision.hpp"

namespace zcl {

inline constexpr long kStieltjesKMaxDefault = 16;

/// Laurent data of zeta(s, a) about s = 1: gamma_0(a) ... gamma_K(a).
struct StieltjesVector {
    Real a;
    std::vector<Real> gammas;
    long achieved_digits = 0;
};

namespace detail {

/// Derivative chain f, f', f'', ... for f(x) = ln^k(x)/x, grown on demand.
struct LogPolyChain {
    explicit LogPolyChain(long k) { derivs.push_back(LogPolynomial::single(Integer(1), k, 1)); }
    const LogPolynomial& order(long d) {
        while (static_cast<long>(derivs.size()) <= d) derivs.push_back(derivs.back().derivative());
        return derivs[static_cast<std::size_t>(d)];
    }
    std::vector<LogPolynomial> derivs;
};

/// First-omitted-term remainder heuristic, times 4 (gated elsewhere by the
/// dual-path oracle comparison).
inline Real stieltjes_tail_bound(LogPolyChain& chain, long n_terms, long j_order,
                                 const Real& a, mpfr_prec_t wb) {
    Real base = (a + n_terms).to_prec(wb);
    Rational bfac = bernoulli_number(2 * (j_order + 1)) /
                    Rational(factorial_int(2 * (j_order + 1)));
    Real coeff(bfac, wb);
    return 4 * abs(coeff * chain.order(2 * j_order + 1).evaluate(base));
}

}  // namespace detail

/// Stieltjes constant gamma_k(a) by Euler-Maclaurin summation of ln^k(x)/x:
///   gamma_k(a) = sum_{n<N} ln^k(n+a)/(n+a) - ln^{k+1}(N+a)/(k+1)
///              + (1/2) ln^k(N+a)/(N+a) - sum_{j<=J} B_{2j}/(2j)! f^{(2j-1)}(N+a) + R.
inline Real stieltjes_gamma(long k, const Real& a, const PrecisionContext& ctx,
                            long k_max = kStieltjesKMaxDefault) {
    if (!(a > 0)) throw domain_error("stieltjes_gamma: a must be positive");
    if (k < 0 || k > k_max) throw domain_error("stieltjes_gamma: k out of range");

    long n_terms = std::max<long>(20, static_cast<long>(std::ceil(1.3 * ctx.digits())));
    long j_order = 10;
    detail::LogPolyChain chain(k);
    const Real& threshold = ctx.plan_threshold();
    for (;;) {
        Real bound = detail::stieltjes_tail_bound(chain, n_terms, j_order, a, ctx.bits());
        if (bound.is_finite() && bound <= threshold) break;
        if (n_terms >= detail::kMaxShiftTerms && j_order >= detail::kMaxTailOrder)
            throw plan_error("stieltjes_gamma: requested precision unreachable");
        n_terms = std::min(2 * n_terms, detail::kMaxShiftTerms);
        j_order = std::min(j_order + 1, detail::kMaxTailOrder);
    }

    // The partial sum carries magnitude ~ ln^{k+1}(N+a)/(k+1) that cancels
    // against the integral term; widen working precision accordingly.
    double lnb = std::log(n_terms + std::max(1.0, a.to_double()));
    long extra = static_cast<long>(std::ceil(std::max(0.0, (k + 1) * std::log10(lnb)))) + 4;
    mpfr_prec_t wb = bits_for_digits(ctx.working_digits() + extra);

    Real aw = a.to_prec(wb);
    Real acc(0, wb);
    for (long n = 0; n < n_terms; ++n) {
        Real x = aw + n;
        acc += pow(log(x), k) / x;
    }
    Real base = aw + n_terms;
    Real lb = log(base);
    acc -= pow(lb, k + 1) / (k + 1);
    acc += pow(lb, k) / base / 2;

    std::vector<Real> lnp(static_cast<std::size_t>(k) + 1, Real(1, wb));
    for (std::size_t i = 1; i < lnp.size(); ++i) lnp[i] = lnp[i - 1] * lb;
    std::vector<Real> invp(static_cast<std::size_t>(2 * j_order + 2), Real(1, wb));
    Real inv_base = 1 / base;
    for (std::size_t i = 1; i < invp.size(); ++i) invp[i] = invp[i - 1] * inv_base;

    for (long j = 1; j <= j_order; ++j) {
        Rational coeff_q = bernoulli_number(2 * j) / Rational(factorial_int(2 * j));
        Real deriv(0, wb);
        for (const auto& t : chain.order(2 * j - 1).terms())
            deriv += Real(t.coeff, wb) * lnp[static_cast<std::size_t>(t.logpow)] *
                     invp[static_cast<std::size_t>(t.invpow)];
        acc -= Real(coeff_q, wb) * deriv;
    }
    return acc.to_prec(ctx.bits());
}

/// Memoized variant for exact rational arguments (grid evaluation reuses
/// small k and repeated abscissae heavily).
inline Real stieltjes_gamma(long k, const Rational& a, const PrecisionContext& ctx,
                            long k_max = kStieltjesKMaxDefault) {
    using Key = std::tuple<long, long, long, Rational>;
    struct Cache {
        std::mutex mu;
        std::map<Key, Real> values;
    };
    static Cache cache;
    Key key{k, ctx.digits(), ctx.guard_digits(), a};
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    Real value = stieltjes_gamma(k, Real(a, ctx.bits()), ctx, k_max);
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.values.emplace(key, value).first->second;
}

/// Taylor-coefficient oracle: gamma_k(a) = (-1)^k k! c_k with c_k recovered by
/// a discrete circle average of g(s) = zeta(s,a) - 1/(s-1) about s = 1.
/// Radii r and r/2 are compared; the r result is returned.
inline Real stieltjes_gamma_oracle(long k, const Real& a, const Real& radius, long points,
                                   const PrecisionContext& ctx, Real* error_estimate = nullptr) {
    if (!(a > 0)) throw domain_error("stieltjes_gamma_oracle: a must be positive");
    if (!(radius > 0) || !(radius < 1))
        throw domain_error("stieltjes_gamma_oracle: radius must lie in (0,1)");
    if (points < 4 * k + 16) throw domain_error("stieltjes_gamma_oracle: too few sample points");
    long q = points + (points % 2);  // conjugate pairing needs an even count

    mpfr_prec_t wb = ctx.bits();
    auto estimate = [&](const Real& r) {
        Real two_pi = 2 * Real::pi(wb);
        Real sum(0, wb);
        for (long m = 0; m <= q / 2; ++m) {
            Real theta = two_pi * m / q;
            Real st = Real(), ct = Real();
            sin_cos(st, ct, theta);
            Complex w(r * ct, r * st);  // s - 1 on the circle
            Complex s = w + 1;
            Complex g = hurwitz_zeta(s, a, ctx) - Complex(1, wb) / w;
            Real sk = Real(), ck = Real();
            sin_cos(sk, ck, theta * k);
            if (m == 0 || m == q / 2) {
                Real contrib = g.re * ck;  // endpoints are real; e^{-ik theta} = cos
                sum += contrib;
            } else {
                sum += 2 * (g.re * ck + g.im * sk);
            }
        }
        Real ck_coeff = sum / q / pow(r, k);
        Real gamma = Real(factorial_int(static_cast<unsigned long>(k)), wb) * ck_coeff;
        if (k % 2 == 1) gamma = -gamma;
        return gamma;
    };

    Real r = radius.to_prec(wb);
    Real at_r = estimate(r);
    Real at_half = estimate(r / 2);
    if (error_estimate) *error_estimate = abs(at_r - at_half);
    return at_r;
}

/// Default oracle policy: radius 1/2, Q = max(64, 8k + 16).
inline Real stieltjes_gamma_oracle(long k, const Real& a, const PrecisionContext& ctx,
                                   Real* error_estimate = nullptr) {
    return stieltjes_gamma_oracle(k, a, Real(1, ctx.bits()) / 2, std::max<long>(64, 8 * k + 16),
                                  ctx, error_estimate);
}

/// gamma_0(a) ... gamma_K(a).
inline StieltjesVector stieltjes_vector(const Real& a, long K, const PrecisionContext& ctx,
                                        long k_max = kStieltjesKMaxDefault) {
    StieltjesVector v{a.to_prec(ctx.bits()), {}, ctx.digits()};
    v.gammas.reserve(static_cast<std::size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) v.gammas.push_back(stieltjes_gamma(k, a, ctx, k_max));
    return v;
}

namespace detail {

inline void check_psi_pole(const Real& x) {
    if (x.is_integer() && x <= 0) throw pole_error("digamma/polygamma: pole at nonpositive integer");
}

}  // namespace detail

/// psi(x) = -gamma_0(x) for x > 0; negative non-integer arguments are lifted
/// with psi(x) = psi(x+1) - 1/x applied ceil(-x)+1 times.
inline Real digamma(const Real& x, const PrecisionContext& ctx) {
    detail::check_psi_pole(x);
    if (x > 0) return -stieltjes_gamma(0, x, ctx);
    long lifts = (-x).is_integer() ? (-x).to_long() + 1 : ceil(-x).to_long() + 1;
    Real xx = x.to_prec(ctx.bits());
    Real acc(0, ctx.bits());
    for (long i = 0; i < lifts; ++i) {
        acc -= 1 / xx;
        xx += 1;
    }
    return acc - stieltjes_gamma(0, xx, ctx);
}

/// Exact-argument digamma; the recurrence terms 1/(x+i) stay rational.
inline Real digamma(const Rational& x, const PrecisionContext& ctx) {
    if (x > 0) return -stieltjes_gamma(0, x, ctx);
    if (x.get_den() == 1) throw pole_error("digamma: pole at nonpositive integer");
    Rational xx = x;
    Rational acc(0);
    while (xx <= 0) {
        acc -= Rational(1) / xx;
        xx += 1;
    }
    return Real(acc, ctx.bits()) - stieltjes_gamma(0, xx, ctx);
}

/// psi^(n)(x) = (-1)^{n+1} n! zeta(n+1, x) for x > 0, lifted by
/// psi^(n)(x) = psi^(n)(x+1) - (-1)^n n!/x^{n+1} for negative non-integers.
inline Real polygamma(long n, const Real& x, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("polygamma: n must be >= 1");
    detail::check_psi_pole(x);
    mpfr_prec_t wb = ctx.bits();
    Real nfact(factorial_int(static_cast<unsigned long>(n)), wb);
    Real sign_front = (n % 2 == 0) ? Real(-1, wb) : Real(1, wb);  // (-1)^{n+1}
    if (x > 0)
        return sign_front * nfact * hurwitz_zeta(Complex(n + 1, wb), x, ctx).re;
    long lifts = (-x).is_integer() ? (-x).to_long() + 1 : ceil(-x).to_long() + 1;
    Real xx = x.to_prec(wb);
    Real acc(0, wb);
    Real sign_rec = (n % 2 == 0) ? Real(1, wb) : Real(-1, wb);  // (-1)^n
    for (long i = 0; i < lifts; ++i) {
        acc -= sign_rec * nfact / pow(xx, n + 1);
        xx += 1;
    }
    return acc + sign_front * nfact * hurwitz_zeta(Complex(n + 1, wb), xx, ctx).re;
}

inline Real polygamma(long n, const Rational& x, const PrecisionContext& ctx) {
    if (x > 0) return polygamma(n, Real(x, ctx.bits()), ctx);
    if (x.get_den() == 1) throw pole_error("polygamma: pole at nonpositive integer");
    if (n < 1) throw domain_error("polygamma: n must be >= 1");
    Rational nfact(factorial_int(static_cast<unsigned long>(n)));
    Rational acc(0);
    Rational xx = x;
    while (xx <= 0) {
        Rational step = nfact / rational_pow(xx, n + 1);
        acc -= (n % 2 == 0) ? step : -step;
        xx += 1;
    }
    return Real(acc, ctx.bits()) + polygamma(n, Real(xx, ctx.bits()), ctx);
}

}  // namespace zcl

#endif

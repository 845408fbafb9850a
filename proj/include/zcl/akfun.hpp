// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_AKFUN_HPP
#define ZCL_AKFUN_HPP

#include <string>

#include "zcl/hurwitz.hpp"
#include "zcl/stieltjes.hpp"

namespace zcl {

inline constexpr long kAkSeriesMaxTerms = 40;

enum class AkPath { derivative, series };

struct AkValue {
    long k = 1;
    Real q;
    Real value;
    AkPath path = AkPath::derivative;
};

struct AkSeriesResult {
    Real value;
    Real truncation_estimate;  // magnitude of the last included series term
    bool converged = true;     // false when that term exceeds tol_abs
};

/// A_k(q) = k * d/dz zeta(z, q) at z = 1 - k.
inline Real a_k(long k, const Real& q, const PrecisionContext& ctx) {
    if (k < 1) throw domain_error("a_k: k must be >= 1");
    if (!(q > 0)) throw domain_error("a_k: q must be positive");
    return hurwitz_zeta_ds(Complex(1 - k, ctx.bits()), q, ctx).re * k;
}

namespace detail {

template <typename GammaAt>
AkSeriesResult ak_series_impl(long k, long n_max, const PrecisionContext& ctx, GammaAt&& gamma_at) {
    if (k < 1) throw domain_error("a_k_series: k must be >= 1");
    if (n_max < 0 || n_max > kAkSeriesMaxTerms)
        throw domain_error("a_k_series: n_max must lie in [0, 40]");
    mpfr_prec_t wb = ctx.bits();
    PrecisionContext reduced = ctx.reduced();

    Real sum(0, wb);
    Real k_pow(1, wb);          // k^n
    Real inv_fact(1, wb);       // 1/n!
    Real last_term(0, wb);
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) {
            k_pow *= k;
            inv_fact /= n;
        }
        // deep terms are damped by k^n/n!; half precision suffices past n = 20
        Real g = gamma_at(n + 1, n <= 20 ? ctx : reduced);
        last_term = g.to_prec(wb) * k_pow * inv_fact;
        sum += last_term;
    }
    AkSeriesResult r{Real(-1, wb) / k - sum * k, abs(last_term * k), true};
    r.converged = r.truncation_estimate <= ctx.tol_abs();
    return r;
}

}  // namespace detail

/// Truncation of Eq-style series A_k(q) = -1/k - k sum_n gamma_{n+1}(q) k^n / n!.
inline AkSeriesResult a_k_series(long k, const Real& q, long n_max, const PrecisionContext& ctx) {
    if (!(q > 0)) throw domain_error("a_k_series: q must be positive");
    return detail::ak_series_impl(k, n_max, ctx, [&](long n, const PrecisionContext& c) {
        return stieltjes_gamma(n, q, c, n_max + 1);
    });
}

/// Rational-argument variant routed through the Stieltjes memo cache.
inline AkSeriesResult a_k_series(long k, const Rational& q, long n_max,
                                 const PrecisionContext& ctx) {
    if (!(q > 0)) throw domain_error("a_k_series: q must be positive");
    return detail::ak_series_impl(k, n_max, ctx, [&](long n, const PrecisionContext& c) {
        return stieltjes_gamma(n, q, c, n_max + 1);
    });
}

}  // namespace zcl

#endif

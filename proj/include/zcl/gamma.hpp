// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_GAMMA_HPP
#define ZCL_GAMMA_HPP

#include "zcl/hurwitz.hpp"
#include "zcl/precision.hpp"

namespace zcl {

/// Gamma(s) for real s > 0 through the Lerch formula
/// ln Gamma(a) = d/dz zeta(z, a)|_{z=0} + (1/2) ln(2 pi),
/// with the base argument shifted upward (Gamma(s+1) = s Gamma(s)) so the
/// zeta derivative is evaluated at a well-conditioned point.
inline Real gamma_function(const Real& s, const PrecisionContext& ctx) {
    if (!(s > 0)) throw domain_error("gamma_function: s must be positive");
    mpfr_prec_t wb = ctx.bits();
    Real base = s.to_prec(wb);
    Real divisor(1, wb);
    while (base < 2) {
        divisor *= base;
        base += 1;
    }
    Real half_ln_two_pi = log(2 * Real::pi(wb)) / 2;
    Real ln_gamma = hurwitz_zeta_ds(Complex(0, wb), base, ctx).re + half_ln_two_pi;
    return exp(ln_gamma) / divisor;
}

}  // namespace zcl

#endif

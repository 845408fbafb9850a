// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_ZCL_HPP
#define ZCL_ZCL_HPP

#include "zcl/akfun.hpp"
#include "zcl/bernoulli.hpp"
#include "zcl/complex.hpp"
#include "zcl/errors.hpp"
#include "zcl/gamma.hpp"
#include "zcl/hurwitz.hpp"
#include "zcl/identities.hpp"
#include "zcl/logpoly.hpp"
#include "zcl/numerics.hpp"
#include "zcl/precision.hpp"
#include "zcl/quadrature.hpp"
#include "zcl/ratzeta.hpp"
#include "zcl/rational.hpp"
#include "zcl/real.hpp"
#include "zcl/stieltjes.hpp"

#endif

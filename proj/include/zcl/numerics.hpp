// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_NUMERICS_HPP
#define ZCL_NUMERICS_HPP

#include <span>
#include <string>

#include "zcl/complex.hpp"
#include "zcl/errors.hpp"
#include "zcl/precision.hpp"

namespace zcl {

enum class ElementaryOp { ln, exp, pow, binomial_coefficient };

inline ElementaryOp elementary_op_from_string(std::string_view tag) {
    if (tag == "ln") return ElementaryOp::ln;
    if (tag == "exp") return ElementaryOp::exp;
    if (tag == "pow") return ElementaryOp::pow;
    if (tag == "binomial-coefficient") return ElementaryOp::binomial_coefficient;
    throw parse_error("unknown elementary op tag: " + std::string(tag));
}

/// Tagged dispatch over the elementary operations; binomial arguments must be
/// nonnegative integers and the result is exact.
inline Complex elementary(ElementaryOp op, std::span<const Complex> args,
                          const PrecisionContext& ctx) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw domain_error("elementary: wrong argument count");
    };
    switch (op) {
        case ElementaryOp::ln:
            need(1);
            return log(args[0]);
        case ElementaryOp::exp:
            need(1);
            return exp(args[0]);
        case ElementaryOp::pow:
            need(2);
            return pow(args[0], args[1]);
        case ElementaryOp::binomial_coefficient: {
            need(2);
            const Complex& n = args[0];
            const Complex& k = args[1];
            if (!n.is_real() || !k.is_real() || !n.re.is_integer() || !k.re.is_integer() ||
                n.re < 0 || k.re < 0)
                throw domain_error("binomial-coefficient requires nonnegative integers");
            Integer c = binomial_int(static_cast<unsigned long>(n.re.to_long()),
                                     static_cast<unsigned long>(k.re.to_long()));
            return Complex(Real(c, ctx.bits()));
        }
    }
    throw domain_error("elementary: unreachable op");
}

}  // namespace zcl

#endif

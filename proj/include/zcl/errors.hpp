// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_ERRORS_HPP
#define ZCL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zcl {

/// Argument outside the mathematical domain of an operation (a <= 0, ln(0), ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation exactly at a pole (s = 1 for zeta, nonpositive integers for psi).
struct pole_error : domain_error {
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

/// The adaptive Euler-Maclaurin planner hit its resource caps before the
/// remainder bound reached the target precision.
struct plan_error : std::runtime_error {
    explicit plan_error(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature failed to converge to the requested accuracy.
struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

/// Identity parameters violate the constraints stated for that identity.
struct constraint_error : std::invalid_argument {
    explicit constraint_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input (numbers, parameter lists, complex literals).
struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace zcl

#endif

// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_RATIONAL_HPP
#define ZCL_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "zcl/errors.hpp"

namespace zcl {

// Exact arithmetic carriers.  GMP keeps rationals canonical (lowest terms,
// positive denominator) through all arithmetic operators.
using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rational from numerator/denominator, canonicalized.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact binomial coefficient C(n, k); 0 for k > n.
inline Integer binomial_int(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial_int(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer pow_int(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e % 2 == 1)) r = -r;
    return r;
}

/// base^e for integer e of either sign (exact; throws on 0^negative).
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw domain_error("rational_pow: 0 to a negative power");
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag);
    return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

/// p^e fitting in long, else constraint_error (guards grid parameters).
inline long checked_pow_long(long base, long e, long cap = 100000000L) {
    Integer v = pow_int(base, static_cast<unsigned long>(e));
    if (!v.fits_slong_p() || v.get_si() > cap)
        throw constraint_error("parameter power " + v.get_str() + " exceeds supported range");
    return v.get_si();
}

inline bool is_prime_long(long p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(Integer(p).get_mpz_t(), 40) != 0;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "3", "-5/7" or a plain decimal like "2.5" / "-0.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Rational r(s);
            r.canonicalize();
            return r;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Integer(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) throw parse_error("malformed decimal: " + s);
        Integer num(digits);
        Integer den = pow_int(10, frac_len);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational literal: " + s);
    }
}

}  // namespace zcl

#endif

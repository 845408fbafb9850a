// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_COMPLEX_HPP
#define ZCL_COMPLEX_HPP

#include <string>
#include <utility>

#include "zcl/errors.hpp"
#include "zcl/real.hpp"

namespace zcl {

/// Complex scalar over Real.  ln and pow use the principal branch; the cut
/// lies along the negative real axis.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(Real(0, r.prec())) {}
    Complex(long r, mpfr_prec_t bits) : re(r, bits), im(0, bits) {}

    bool is_real() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    Complex to_prec(mpfr_prec_t bits) const { return {re.to_prec(bits), im.to_prec(bits)}; }

    friend Complex operator-(const Complex& z) { return {-z.re, -z.im}; }
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw domain_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    friend Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
    friend Complex operator+(const Real& a, const Complex& b) { return b + a; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
    friend Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
    friend Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }

    Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
    Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    friend Complex conj(const Complex& z) { return {z.re, -z.im}; }
    friend Real abs(const Complex& z) { return z.is_real() ? abs(z.re) : hypot(z.re, z.im); }
    friend Real arg(const Complex& z) { return atan2(z.im, z.re); }

    friend Complex log(const Complex& z) {
        if (z.is_zero()) throw domain_error("log(0) is undefined");
        if (z.is_real() && z.re > 0) return Complex(log(z.re));
        return {log(hypot(z.re, z.im)), atan2(z.im, z.re)};
    }

    friend Complex exp(const Complex& z) {
        if (z.is_real()) return Complex(exp(z.re));
        Real s = Real(), c = Real();
        sin_cos(s, c, z.im);
        Real m = exp(z.re);
        return {m * c, m * s};
    }

    friend Complex pow(const Complex& base, const Complex& e) {
        if (base.is_zero()) {
            if (e.is_real() && e.re > 0) return Complex(Real(0, base.prec()));
            throw domain_error("pow: zero base with nonpositive exponent");
        }
        return exp(e * log(base));
    }
};

/// x^s for real x > 0 and complex s (the common case in zeta sums).
inline Complex pow(const Real& base, const Complex& e) {
    if (base.is_zero() || base < 0) throw domain_error("pow: base must be positive");
    if (e.is_real()) return Complex(pow(base, e.re));
    return exp(e * log(base));
}

/// Renders "a", "a+bi" or "a-bi" with `digits` significant figures per part.
inline std::string to_string(const Complex& z, std::size_t digits,
                             RealFormat fmt = RealFormat::automatic) {
    if (z.is_real()) return to_string(z.re, digits, fmt);
    std::string im = to_string(abs(z.im), digits, fmt);
    return to_string(z.re, digits, fmt) + (z.im.sign() < 0 ? "-" : "+") + im + "i";
}

}  // namespace zcl

#endif

// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_RATZETA_HPP
#define ZCL_RATZETA_HPP

#include <numeric>
#include <vector>

#include "zcl/gamma.hpp"
#include "zcl/hurwitz.hpp"
#include "zcl/quadrature.hpp"
#include "zcl/rational.hpp"

namespace zcl {

/// f(T) = p(T) / prod_i (1 - T^{n_i}) with integer numerator coefficients.
struct RationalFunctionSpec {
    std::vector<std::pair<long, long>> numerator;  // (coeff, power), power >= 0
    std::vector<long> denominator_periods;         // n_i >= 1
};

/// One summand coeff * T^offset / (1 - T^period) = coeff * sum_k T^{offset + k period}.
/// offset >= 1 keeps f(0) = 0.
struct GeometricTerm {
    Rational coeff;
    long offset;  // alpha
    long period;  // beta
};

struct GeometricTermSum {
    std::vector<GeometricTerm> terms;
};

/// Power-series prefix a_1 ... a_nmax of f about T = 0.
struct SeriesPrefix {
    std::vector<Rational> coeffs;  // coeffs[i] = a_{i+1}
    const Rational& at(long n) const { return coeffs.at(static_cast<std::size_t>(n - 1)); }
    long size() const { return static_cast<long>(coeffs.size()); }
};

namespace detail {

inline void check_geometric(const GeometricTermSum& g) {
    for (const auto& t : g.terms) {
        if (t.offset < 1) throw domain_error("geometric term requires offset >= 1");
        if (t.period < 1) throw domain_error("geometric term requires period >= 1");
    }
}

}  // namespace detail

/// Series prefix by expanding the denominator product into a polynomial and
/// running the linear convolution recurrence against the numerator.
inline SeriesPrefix series_coeffs(const RationalFunctionSpec& f, long n_max) {
    if (n_max < 1) throw domain_error("series_coeffs: n_max must be >= 1");
    std::size_t len = static_cast<std::size_t>(n_max) + 1;
    std::vector<Rational> den(len, Rational(0));
    den[0] = 1;
    for (long period : f.denominator_periods) {
        if (period < 1) throw domain_error("series_coeffs: periods must be positive");
        std::vector<Rational> next(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i) {
            if (den[i] == 0) continue;
            next[i] += den[i];
            if (i + static_cast<std::size_t>(period) < len)
                next[i + static_cast<std::size_t>(period)] -= den[i];
        }
        den = std::move(next);
    }
    std::vector<Rational> num(len, Rational(0));
    for (const auto& [coeff, power] : f.numerator) {
        if (power < 0) throw domain_error("series_coeffs: numerator powers must be >= 0");
        if (static_cast<std::size_t>(power) < len) num[static_cast<std::size_t>(power)] += coeff;
    }
    std::vector<Rational> a(len, Rational(0));
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = num[n];
        for (std::size_t k = 1; k <= n; ++k)
            if (den[k] != 0) acc -= den[k] * a[n - k];
        a[n] = acc;  // den[0] == 1
    }
    SeriesPrefix out;
    out.coeffs.assign(a.begin() + 1, a.end());
    return out;
}

/// Series prefix directly from the geometric expansion: a_n picks up coeff
/// from every term with period | (n - offset), n >= offset.
inline SeriesPrefix geom_coeffs(const GeometricTermSum& g, long n_max) {
    if (n_max < 1) throw domain_error("geom_coeffs: n_max must be >= 1");
    detail::check_geometric(g);
    SeriesPrefix out;
    out.coeffs.assign(static_cast<std::size_t>(n_max), Rational(0));
    for (const auto& t : g.terms)
        for (long n = t.offset; n <= n_max; n += t.period)
            out.coeffs[static_cast<std::size_t>(n - 1)] += t.coeff;
    return out;
}

/// Closed form of Z_f for a geometric-term sum:
///   Z_f(s) = sum coeff * period^{-s} zeta(s, offset/period).
inline Complex zf_hurwitz(const Complex& s, const GeometricTermSum& g,
                          const PrecisionContext& ctx) {
    detail::check_geometric(g);
    if (s.is_real() && s.re == 1) throw pole_error("zf_hurwitz: pole at s = 1");
    mpfr_prec_t wb = ctx.bits();
    Complex acc(0, wb);
    for (const auto& t : g.terms) {
        Real a(make_rational(t.offset, t.period), wb);
        acc += Real(t.coeff, wb) * pow(Real(t.period, wb), -s) * hurwitz_zeta(s, a, ctx);
    }
    return acc;
}

namespace detail {

inline constexpr const char* kMellinTarget = "1e-25";

/// Shared Mellin evaluation: integrand must map t > 0 to f(e^{-t}) - f(0).
template <typename F>
Real zf_mellin_impl(const Real& s, long r_factors, F&& fexp, const PrecisionContext& ctx) {
    if (!(s > r_factors))
        throw domain_error("zf_mellin: requires s > r (number of denominator factors)");
    mpfr_prec_t wb = ctx.bits();
    Real target = Real::from_string(kMellinTarget, wb);
    Real sm1 = s.to_prec(wb) - 1;

    // (0,1]: t^{s-1} can be steep at 0; use the node's ln t directly.
    Real lower = quad::integrate(
        quad::Piece::unit_interval,
        [&](const quad::Node& n) { return exp(sm1 * n.log_t) * fexp(n.t); }, wb, target);
    // [1,inf): substitute t = 1 + w with w on an exp-sinh grid.
    Real upper = quad::integrate(
        quad::Piece::upper_tail,
        [&](const quad::Node& n) {
            Real t = 1 + n.t;
            return pow(t, sm1) * fexp(t);
        },
        wb, target);
    return (lower + upper) / gamma_function(s, ctx);
}

}  // namespace detail

/// Mellin route (Eq. A.3 pattern): Z_f(s) = (1/Gamma(s)) int t^{s-1} f(e^{-t}) dt,
/// with f evaluated through the geometric closed form
/// coeff e^{-offset t} / (1 - e^{-period t}) (expm1 keeps t -> 0 stable).
inline Real zf_mellin(const Real& s, const GeometricTermSum& g, const PrecisionContext& ctx) {
    detail::check_geometric(g);
    mpfr_prec_t wb = ctx.bits();
    std::vector<Real> coeffs;
    coeffs.reserve(g.terms.size());
    for (const auto& t : g.terms) coeffs.emplace_back(t.coeff, wb);
    auto fexp = [&](const Real& t) {
        Real acc(0, t.prec());
        for (std::size_t i = 0; i < g.terms.size(); ++i) {
            const auto& gt = g.terms[i];
            acc += coeffs[i] * exp(Real(-gt.offset, t.prec()) * t) / (-expm1(Real(-gt.period, t.prec()) * t));
        }
        return acc;
    };
    return detail::zf_mellin_impl(s, 1, fexp, ctx);
}

inline Real zf_mellin(const Real& s, const RationalFunctionSpec& f, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.bits();
    Rational f0(0);
    for (const auto& [coeff, power] : f.numerator)
        if (power == 0) f0 += coeff;  // f(0) = p(0) since every (1 - T^n) is 1 at T = 0
    Real f0_r(f0, wb);
    auto fexp = [&](const Real& t) {
        Real num(0, t.prec());
        for (const auto& [coeff, power] : f.numerator)
            num += coeff * exp(Real(-power, t.prec()) * t);
        Real den(1, t.prec());
        for (long period : f.denominator_periods) den *= -expm1(Real(-period, t.prec()) * t);
        return num / den - f0_r;
    };
    return detail::zf_mellin_impl(s, static_cast<long>(f.denominator_periods.size()), fexp, ctx);
}

// ---------------------------------------------------------------------------
// Paper-function builders: each returns the rational form plus the two
// geometric decompositions whose coefficient prefixes must agree.

enum class PaperFunctionTag { prop1, lemma2, lemma3 };

struct PaperFunctionParams {
    long p = 1, q = 1;
    Rational b{0};
    long N = 0;
    long k_p = 1, alpha = 1, beta = 1;
};

struct PaperFunctionForms {
    RationalFunctionSpec rational;
    GeometricTermSum left;
    GeometricTermSum right;
};

/// j in [1, p^{N+1}) with gcd(j, p) = 1 (p prime, so j not divisible by p).
inline std::vector<long> coprime_offsets(long p, long N) {
    long modulus = checked_pow_long(p, N + 1, 1000000);
    std::vector<long> js;
    for (long j = 1; j < modulus; ++j)
        if (j % p != 0) js.push_back(j);
    return js;
}

/// j = alpha + k_p*l, alpha <= j < alpha + k_p p^{N+1}, gcd(j, p) = 1.
inline std::vector<long> lemma3_offsets(long p, long k_p, long alpha, long N) {
    long reps = checked_pow_long(p, N + 1, 1000000);
    if (k_p * reps > 1000000) throw constraint_error("lemma3 grid parameters exceed supported range");
    std::vector<long> js;
    for (long l = 0; l < reps; ++l) {
        long j = alpha + k_p * l;
        if (j % p != 0) js.push_back(j);
    }
    return js;
}

inline PaperFunctionForms build_paper_function(PaperFunctionTag which,
                                               const PaperFunctionParams& prm) {
    PaperFunctionForms out;
    switch (which) {
        case PaperFunctionTag::prop1: {
            // f(T) = sum_{r=1}^q T^{pr-bq}/(1-T^q)
            //      = T^{p-bq}(1-T^{pq}) / ((1-T^q)(1-T^p))
            //      = sum_{l=0}^{p-1} T^{p+(l-b)q}/(1-T^p)
            if (prm.p < 1 || prm.q < 1) throw constraint_error("prop1 form requires p, q >= 1");
            Rational bq = prm.b * prm.q;
            if (bq.get_den() != 1)
                throw constraint_error("prop1 form requires integer b*q (non-integer powers "
                                       "are outside the formal power-series path)");
            long bq_i = static_cast<long>(bq.get_num().get_si());
            if (prm.p - bq_i < 1) throw constraint_error("prop1 form requires b*q < p");
            out.rational.numerator = {{1, prm.p - bq_i}, {-1, prm.p - bq_i + prm.p * prm.q}};
            out.rational.denominator_periods = {prm.q, prm.p};
            for (long r = 1; r <= prm.q; ++r)
                out.left.terms.push_back({Rational(1), prm.p * r - bq_i, prm.q});
            for (long l = 0; l < prm.p; ++l)
                out.right.terms.push_back({Rational(1), prm.p + l * prm.q - bq_i, prm.p});
            break;
        }
        case PaperFunctionTag::lemma2: {
            // f(T) = 1/(1-T) - 1/(1-T^p) = (T - T^p)/((1-T)(1-T^p))
            //      = (T + ... + T^{p-1})/(1-T^p) = sum_{(j,p)=1} T^j/(1-T^{p^{N+1}})
            if (!is_prime_long(prm.p)) throw constraint_error("lemma2 form requires prime p");
            if (prm.N < 0) throw constraint_error("lemma2 form requires N >= 0");
            long modulus = checked_pow_long(prm.p, prm.N + 1, 1000000);
            out.rational.numerator = {{1, 1}, {-1, prm.p}};
            out.rational.denominator_periods = {1, prm.p};
            for (long j = 1; j < prm.p; ++j) out.left.terms.push_back({Rational(1), j, prm.p});
            for (long j : coprime_offsets(prm.p, prm.N))
                out.right.terms.push_back({Rational(1), j, modulus});
            break;
        }
        case PaperFunctionTag::lemma3: {
            // f(T) = T^alpha/(1-T^{k_p}) - T^{p beta}/(1-T^{k_p p})
            //      = sum_{j == alpha mod k_p, (j,p)=1} T^j/(1-T^{k_p p^{N+1}})
            if (!is_prime_long(prm.p)) throw constraint_error("lemma3 form requires prime p");
            if (std::gcd(prm.k_p, prm.p) != 1)
                throw constraint_error("lemma3 form requires gcd(k_p, p) = 1");
            if (prm.alpha < 1 || prm.beta < 1)
                throw constraint_error("lemma3 form requires alpha, beta >= 1");
            bool witness = false;
            for (long j = 0; j < prm.p; ++j)
                if (prm.alpha + j * prm.k_p == prm.p * prm.beta) witness = true;
            if (!witness)
                throw constraint_error("lemma3 form requires alpha + j k_p = p beta for some "
                                       "j in [0, p-1]");
            long modulus = prm.k_p * checked_pow_long(prm.p, prm.N + 1, 1000000);
            out.rational.numerator = {{1, prm.alpha},
                                      {-1, prm.alpha + prm.k_p * prm.p},
                                      {-1, prm.p * prm.beta},
                                      {1, prm.p * prm.beta + prm.k_p}};
            out.rational.denominator_periods = {prm.k_p, prm.k_p * prm.p};
            out.left.terms.push_back({Rational(1), prm.alpha, prm.k_p});
            out.left.terms.push_back({Rational(-1), prm.p * prm.beta, prm.k_p * prm.p});
            for (long j : lemma3_offsets(prm.p, prm.k_p, prm.alpha, prm.N))
                out.right.terms.push_back({Rational(1), j, modulus});
            break;
        }
    }
    return out;
}

}  // namespace zcl

#endif

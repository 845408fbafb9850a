// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_IDENTITIES_HPP
#define ZCL_IDENTITIES_HPP

#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "zcl/akfun.hpp"
#include "zcl/bernoulli.hpp"
#include "zcl/gamma.hpp"
#include "zcl/hurwitz.hpp"
#include "zcl/ratzeta.hpp"
#include "zcl/stieltjes.hpp"

namespace zcl::identities {

enum class IdentityId {
    prop1, prop2, prop3, prop4, prop5,
    cor1, cor2, cor3, cor4, cor5,
    lemma1, lemma2, lemma3,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::prop1, IdentityId::prop2, IdentityId::prop3, IdentityId::prop4,
    IdentityId::prop5, IdentityId::cor1,  IdentityId::cor2,  IdentityId::cor3,
    IdentityId::cor4,  IdentityId::cor5,  IdentityId::lemma1, IdentityId::lemma2,
    IdentityId::lemma3,
};

inline const char* to_string(IdentityId id) {
    switch (id) {
        case IdentityId::prop1: return "prop1";
        case IdentityId::prop2: return "prop2";
        case IdentityId::prop3: return "prop3";
        case IdentityId::prop4: return "prop4";
        case IdentityId::prop5: return "prop5";
        case IdentityId::cor1: return "cor1";
        case IdentityId::cor2: return "cor2";
        case IdentityId::cor3: return "cor3";
        case IdentityId::cor4: return "cor4";
        case IdentityId::cor5: return "cor5";
        case IdentityId::lemma1: return "lemma1";
        case IdentityId::lemma2: return "lemma2";
        case IdentityId::lemma3: return "lemma3";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_string(std::string_view tag) {
    for (IdentityId id : kAllIdentities)
        if (tag == to_string(id)) return id;
    return std::nullopt;
}

/// Parameters for one grid point; each identity reads only the fields it
/// needs.  The evaluation point s is kept as an exact rational pair so grids
/// serialize and order deterministically.
struct ParamSet {
    long p = 1;
    long q = 1;
    Rational b{0};
    long k = 0;
    long m = 0;
    long n = 2;
    long big_n = 0;  // the paper's N
    long k_p = 1;
    long alpha = 1;
    long beta = 1;
    Rational s_re{0};
    Rational s_im{0};

    friend bool operator==(const ParamSet& a, const ParamSet& b_) {
        return std::tie(a.p, a.q, a.b, a.k, a.m, a.n, a.big_n, a.k_p, a.alpha, a.beta, a.s_re,
                        a.s_im) == std::tie(b_.p, b_.q, b_.b, b_.k, b_.m, b_.n, b_.big_n, b_.k_p,
                                            b_.alpha, b_.beta, b_.s_re, b_.s_im);
    }
    friend bool operator<(const ParamSet& a, const ParamSet& b_) {
        return std::tie(a.p, a.q, a.b, a.k, a.m, a.n, a.big_n, a.k_p, a.alpha, a.beta, a.s_re,
                        a.s_im) < std::tie(b_.p, b_.q, b_.b, b_.k, b_.m, b_.n, b_.big_n, b_.k_p,
                                           b_.alpha, b_.beta, b_.s_re, b_.s_im);
    }
};

enum class ParamField { p, q, b, k, m, n, N, k_p, alpha, beta, s };

inline const char* to_string(ParamField f) {
    switch (f) {
        case ParamField::p: return "p";
        case ParamField::q: return "q";
        case ParamField::b: return "b";
        case ParamField::k: return "k";
        case ParamField::m: return "m";
        case ParamField::n: return "n";
        case ParamField::N: return "N";
        case ParamField::k_p: return "kp";
        case ParamField::alpha: return "alpha";
        case ParamField::beta: return "beta";
        case ParamField::s: return "s";
    }
    return "?";
}

/// Fields relevant to each identity (for serialization and grid building).
inline const std::vector<ParamField>& fields_for(IdentityId id) {
    using F = ParamField;
    static const std::vector<F> prop1{F::p, F::q, F::b, F::k};
    static const std::vector<F> prop2{F::p, F::N, F::m};
    static const std::vector<F> prop3{F::p, F::k_p, F::alpha, F::beta, F::N, F::m};
    static const std::vector<F> prop4{F::p, F::q, F::b, F::k};
    static const std::vector<F> prop5{F::p, F::N, F::k};
    static const std::vector<F> cor1{F::p, F::q, F::b};
    static const std::vector<F> cor2{F::p, F::q, F::b, F::n};
    static const std::vector<F> cor3{F::p, F::q, F::b, F::m};
    static const std::vector<F> cor4{F::p, F::N};
    static const std::vector<F> cor5{F::p, F::k, F::N};
    static const std::vector<F> lemma1{F::p, F::q, F::b, F::s};
    static const std::vector<F> lemma2{F::p, F::N, F::s};
    static const std::vector<F> lemma3{F::p, F::k_p, F::alpha, F::beta, F::N, F::s};
    switch (id) {
        case IdentityId::prop1: return prop1;
        case IdentityId::prop2: return prop2;
        case IdentityId::prop3: return prop3;
        case IdentityId::prop4: return prop4;
        case IdentityId::prop5: return prop5;
        case IdentityId::cor1: return cor1;
        case IdentityId::cor2: return cor2;
        case IdentityId::cor3: return cor3;
        case IdentityId::cor4: return cor4;
        case IdentityId::cor5: return cor5;
        case IdentityId::lemma1: return lemma1;
        case IdentityId::lemma2: return lemma2;
        case IdentityId::lemma3: return lemma3;
    }
    static const std::vector<F> empty;
    return empty;
}

struct Validation {
    bool ok = true;
    std::string message;
    ParamField failing_field = ParamField::p;
    long witness_j = -1;  // for prop3/lemma3
};

namespace detail {

inline Validation fail(ParamField f, std::string msg) { return {false, std::move(msg), f, -1}; }

inline bool uses(IdentityId id, ParamField f) {
    for (ParamField g : fields_for(id))
        if (g == f) return true;
    return false;
}

}  // namespace detail

/// Checks every constraint the paper states for the identity; violations are
/// returned as values, never thrown.
inline Validation validate(IdentityId id, const ParamSet& ps) {
    using F = ParamField;
    if (ps.p < 1) return detail::fail(F::p, "p must be a positive integer");
    if (detail::uses(id, F::q) && ps.q < 1) return detail::fail(F::q, "q must be a positive integer");
    if (detail::uses(id, F::b) && ps.b < 0) return detail::fail(F::b, "b must be >= 0");
    if (detail::uses(id, F::k) && ps.k < 0) return detail::fail(F::k, "k must be >= 0");
    if (detail::uses(id, F::m) && ps.m < 0) return detail::fail(F::m, "m must be >= 0");
    if (detail::uses(id, F::N) && ps.big_n < 0) return detail::fail(F::N, "N must be >= 0");

    const bool needs_ratio = id == IdentityId::prop1 || id == IdentityId::prop4 ||
                             id == IdentityId::cor1 || id == IdentityId::cor2 ||
                             id == IdentityId::cor3 || id == IdentityId::lemma1;
    if (needs_ratio) {
        Rational ratio_min = ps.p <= ps.q ? make_rational(ps.p, ps.q) : make_rational(ps.q, ps.p);
        if (!(ratio_min > ps.b))
            return detail::fail(F::b, "constraint min(p/q, q/p) > b violated");
    }
    if ((id == IdentityId::cor1 || id == IdentityId::cor2) && !(ps.b > 0))
        return detail::fail(F::b, "b must be > 0 (the r = 0 term psi(-b) is singular at b = 0)");
    if (id == IdentityId::cor2 && ps.n < 2) return detail::fail(F::n, "n must be an integer > 1");

    const bool needs_prime = id == IdentityId::prop2 || id == IdentityId::prop3 ||
                             id == IdentityId::prop5 || id == IdentityId::cor4 ||
                             id == IdentityId::cor5 || id == IdentityId::lemma2 ||
                             id == IdentityId::lemma3;
    if (needs_prime && !is_prime_long(ps.p)) return detail::fail(F::p, "p must be prime");

    if ((id == IdentityId::prop4 || id == IdentityId::prop5) && ps.k < 1)
        return detail::fail(F::k, "k must be >= 1 (A_k is undefined at k = 0)");

    Validation ok;
    if (id == IdentityId::prop3 || id == IdentityId::lemma3) {
        if (ps.k_p < 1) return detail::fail(F::k_p, "k_p must be a positive integer");
        if (std::gcd(ps.k_p, ps.p) != 1) return detail::fail(F::k_p, "k_p must be coprime to p");
        // zeta(s, 0) is undefined under the n + a summation convention
        if (ps.alpha < 1) return detail::fail(F::alpha, "alpha must be >= 1");
        if (ps.beta < 1) return detail::fail(F::beta, "beta must be >= 1");
        for (long j = 0; j < ps.p; ++j)
            if (ps.alpha + j * ps.k_p == ps.p * ps.beta) ok.witness_j = j;
        if (ok.witness_j < 0)
            return detail::fail(F::alpha, "no j in [0, p-1] with alpha + j k_p = p beta");
    }

    if (id == IdentityId::lemma1 || id == IdentityId::lemma2 || id == IdentityId::lemma3) {
        if (ps.s_im == 0 && ps.s_re == 1) return detail::fail(F::s, "s = 1 is the zeta pole");
    }

    if (detail::uses(id, F::N)) {
        try {
            long modulus = checked_pow_long(ps.p, ps.big_n + 1, 1000000);
            if (detail::uses(id, F::k_p) && ps.k_p * modulus > 1000000)
                return detail::fail(F::N, "k_p * p^(N+1) exceeds the supported grid range");
        } catch (const constraint_error&) {
            return detail::fail(F::N, "p^(N+1) exceeds the supported grid range");
        }
    }
    return ok;
}

/// One verification outcome.
struct IdentityReport {
    IdentityId id = IdentityId::prop1;
    ParamSet params;
    Complex lhs, rhs;
    Real abs_diff;
    Real tolerance;
    bool pass = false;
    bool exact = false;
    double elapsed_ms = 0.0;
    std::string error;  // non-empty when evaluation itself failed
};

namespace detail {

struct MagTracker {
    Real max_mag;
    explicit MagTracker(mpfr_prec_t bits) : max_mag(1, bits) {}
    void update(const Real& v) { max_mag = fmax(max_mag, abs(v)); }
    void update(const Complex& v) { update(v.re); update(v.im); }
};

inline Real binom_real(long n, long k, mpfr_prec_t wb) {
    return Real(binomial_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), wb);
}

struct SideValues {
    Complex lhs, rhs;
    bool exact = false;
    bool exact_pass = false;
};

/// Dispatches to the per-identity evaluators.  LHS and RHS follow the paper's
/// two sides literally and share only leaf special-function calls.
inline SideValues eval_sides(IdentityId id, const ParamSet& ps, const PrecisionContext& ctx,
                             MagTracker& mag) {
    const mpfr_prec_t wb = ctx.bits();
    auto gam = [&](long k, const Rational& a) {
        Real g = stieltjes_gamma(k, a, ctx);
        mag.update(g);
        return g;
    };
    SideValues out;

    switch (id) {
        case IdentityId::prop1: {
            Real lhs(0, wb);
            for (long r = 1; r <= ps.q; ++r) lhs += gam(ps.k, make_rational(ps.p * r, ps.q) - ps.b);

            Real lq = log(Real(ps.q, wb) / ps.p);
            Real first = Real(ps.q, wb) * pow(lq, ps.k + 1) / (ps.k + 1);
            if (ps.k % 2 == 1) first = -first;
            mag.update(first);
            Real inner(0, wb);
            for (long l = 0; l < ps.p; ++l) {
                Rational arg = 1 + (l - ps.b) * Rational(ps.q) / ps.p;
                for (long j = 0; j <= ps.k; ++j) {
                    Real term = binom_real(ps.k, j, wb) * pow(lq, j) * gam(ps.k - j, arg);
                    if (j % 2 == 1) term = -term;
                    mag.update(term);
                    inner += term;
                }
            }
            Real rhs = first + Real(ps.q, wb) / ps.p * inner;
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::prop2: {
            Real lp = log(Real(ps.p, wb));
            Real lhs = Real(ps.p - 1, wb) * gam(ps.m, Rational(1)) + pow(lp, ps.m + 1) / (ps.m + 1);
            for (long k = 0; k < ps.m; ++k) {
                Real term = binom_real(ps.m, k, wb) * pow(lp, ps.m - k) * gam(k, Rational(1));
                mag.update(term);
                lhs -= term;
            }

            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Real lP = log(Real(modulus, wb));
            Real first = Real(1 - ps.p, wb) * pow(lP, ps.m + 1) / (ps.m + 1);
            mag.update(first);
            Real inner(0, wb);
            for (long k = 0; k <= ps.m; ++k) {
                Real sum_g(0, wb);
                for (long j : coprime_offsets(ps.p, ps.big_n))
                    sum_g += gam(k, make_rational(j, modulus));
                Real term = binom_real(ps.m, k, wb) * pow(lP, ps.m - k) * sum_g;
                mag.update(term);
                inner += term;
            }
            Real rhs = first + inner / Real(pow_int(ps.p, ps.big_n), wb);
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::prop3: {
            Real lp = log(Real(ps.p, wb));
            Real lhs = Real(ps.p - 1, wb) * gam(ps.m, make_rational(ps.alpha, ps.k_p)) +
                       pow(lp, ps.m + 1) / (ps.m + 1);
            for (long k = 0; k < ps.m; ++k) {
                Real term = binom_real(ps.m, k, wb) * pow(lp, ps.m - k) *
                            gam(k, make_rational(ps.beta, ps.k_p));
                mag.update(term);
                lhs -= term;
            }

            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Real lP = log(Real(modulus, wb));
            Real first = Real(1 - ps.p, wb) * pow(lP, ps.m + 1) / (ps.m + 1);
            mag.update(first);
            Real inner(0, wb);
            for (long k = 0; k <= ps.m; ++k) {
                Real sum_g(0, wb);
                for (long j : lemma3_offsets(ps.p, ps.k_p, ps.alpha, ps.big_n))
                    sum_g += gam(k, make_rational(j, ps.k_p * modulus));
                Real term = binom_real(ps.m, k, wb) * pow(lP, ps.m - k) * sum_g;
                mag.update(term);
                inner += term;
            }
            Real rhs = first + inner / Real(pow_int(ps.p, ps.big_n), wb);
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::prop4: {
            Real lq = log(Real(ps.q, wb) / ps.p);
            Real lhs(0, wb);
            for (long r = 1; r <= ps.q; ++r) {
                Rational arg = make_rational(ps.p * r, ps.q) - ps.b;
                Real av = a_k(ps.k, Real(arg, wb), ctx);
                Real bv = bernoulli_poly_real(static_cast<unsigned long>(ps.k), Real(arg, wb), ctx);
                mag.update(av);
                mag.update(bv);
                lhs += av + lq * bv;
            }
            Real rhs(0, wb);
            for (long l = 0; l < ps.p; ++l) {
                Rational arg = 1 + (l - ps.b) * Rational(ps.q) / ps.p;
                Real av = a_k(ps.k, Real(arg, wb), ctx);
                mag.update(av);
                rhs += av;
            }
            rhs *= pow(Real(ps.q, wb) / ps.p, 1 - ps.k);
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::prop5: {
            // B_k[N(1-p^{k-1})+1] in Eq. (1.11) is the Bernoulli number times
            // the bracket: the k=1, p=2, N=0 instance only balances that way.
            long pk1 = checked_pow_long(ps.p, ps.k - 1);
            Real lp = log(Real(ps.p, wb));
            Real a1 = a_k(ps.k, Real(1, wb), ctx);
            mag.update(a1);
            Real bracket(ps.big_n * (1 - pk1) + 1, wb);
            Real bk(bernoulli_number(static_cast<unsigned long>(ps.k)), wb);
            Real second = lp * bk * bracket;
            if (ps.k % 2 == 1) second = -second;  // (-1)^k
            mag.update(second);
            Real lhs = Real(1 - pk1, wb) * a1 - second;

            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Real rhs(0, wb);
            for (long j : coprime_offsets(ps.p, ps.big_n)) {
                Real av = a_k(ps.k, Real(make_rational(j, modulus), wb), ctx);
                mag.update(av);
                rhs += av;
            }
            rhs *= Real(pow_int(ps.p, (ps.big_n + 1) * (ps.k - 1)), wb);
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::cor1: {
            Real lhs_sum(0, wb);
            for (long r = 0; r < ps.q; ++r) {
                Real t = digamma(make_rational(ps.p * r, ps.q) - ps.b, ctx);
                mag.update(t);
                lhs_sum += t;
            }
            Real lhs = log(Real(ps.q, wb)) + lhs_sum / ps.q;
            Real rhs_sum(0, wb);
            for (long l = 0; l < ps.p; ++l) {
                Real t = digamma((l - ps.b) * Rational(ps.q) / ps.p, ctx);
                mag.update(t);
                rhs_sum += t;
            }
            Real rhs = log(Real(ps.p, wb)) + rhs_sum / ps.p;
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::cor2: {
            Real lhs_sum(0, wb);
            for (long r = 0; r < ps.q; ++r) {
                Real t = polygamma(ps.n - 1, make_rational(ps.p * r, ps.q) - ps.b, ctx);
                mag.update(t);
                lhs_sum += t;
            }
            Real lhs = lhs_sum / ps.q;
            Real rhs_sum(0, wb);
            for (long l = 0; l < ps.p; ++l) {
                Real t = polygamma(ps.n - 1, (l - ps.b) * Rational(ps.q) / ps.p, ctx);
                mag.update(t);
                rhs_sum += t;
            }
            Real rhs = pow(Real(ps.q, wb) / ps.p, ps.n - 1) * rhs_sum / ps.p;
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::cor3: {
            Rational lhs(0);
            for (long r = 1; r <= ps.q; ++r)
                lhs += bernoulli_poly_exact(static_cast<unsigned long>(ps.m),
                                            make_rational(ps.p * r, ps.q) - ps.b);
            Rational rhs(0);
            for (long l = 0; l < ps.p; ++l)
                rhs += bernoulli_poly_exact(static_cast<unsigned long>(ps.m),
                                            1 + (l - ps.b) * Rational(ps.q) / ps.p);
            rhs *= rational_pow(make_rational(ps.q, ps.p), 1 - ps.m);
            out.exact = true;
            out.exact_pass = (lhs == rhs);
            out.lhs = Complex(Real(lhs, wb));
            out.rhs = Complex(Real(rhs, wb));
            break;
        }

        case IdentityId::cor4: {
            Real lp = log(Real(ps.p, wb));
            Real lhs = Real(ps.p - 1, wb) * gam(0, Rational(1)) + lp;

            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Real lP = log(Real(modulus, wb));
            Real first = Real(1 - ps.p, wb) * lP;
            mag.update(first);
            Real sum_psi(0, wb);
            for (long j : coprime_offsets(ps.p, ps.big_n)) {
                Real t = digamma(make_rational(j, modulus), ctx);
                mag.update(t);
                sum_psi += t;
            }
            Real rhs = first - sum_psi / Real(pow_int(ps.p, ps.big_n), wb);
            out.lhs = Complex(lhs);
            out.rhs = Complex(rhs);
            break;
        }

        case IdentityId::cor5: {
            Rational pk1 = rational_pow(Rational(ps.p), ps.k - 1);
            Rational lhs = (1 - pk1) * bernoulli_number(static_cast<unsigned long>(ps.k));
            if (ps.k % 2 == 1) lhs = -lhs;  // (-1)^k
            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Rational rhs(0);
            for (long j : coprime_offsets(ps.p, ps.big_n))
                rhs += bernoulli_poly_exact(static_cast<unsigned long>(ps.k),
                                            make_rational(j, modulus));
            rhs *= rational_pow(Rational(ps.p), (ps.big_n + 1) * (ps.k - 1));
            out.exact = true;
            out.exact_pass = (lhs == rhs);
            out.lhs = Complex(Real(lhs, wb));
            out.rhs = Complex(Real(rhs, wb));
            break;
        }

        case IdentityId::lemma1: {
            Complex s = ctx.complex(ps.s_re, ps.s_im);
            Complex lhs(0, wb);
            for (long r = 1; r <= ps.q; ++r) {
                Complex z = hurwitz_zeta(s, Real(make_rational(ps.p * r, ps.q) - ps.b, wb), ctx);
                mag.update(z);
                lhs += z;
            }
            Complex rhs(0, wb);
            for (long l = 0; l < ps.p; ++l) {
                Rational arg = make_rational(l * ps.q + ps.p, ps.p) - Rational(ps.q) * ps.b / ps.p;
                Complex z = hurwitz_zeta(s, Real(arg, wb), ctx);
                mag.update(z);
                rhs += z;
            }
            rhs = pow(Real(make_rational(ps.q, ps.p), wb), s) * rhs;
            mag.update(rhs);
            out.lhs = lhs;
            out.rhs = rhs;
            break;
        }

        case IdentityId::lemma2: {
            Complex s = ctx.complex(ps.s_re, ps.s_im);
            Complex zs = riemann_zeta(s, ctx);
            mag.update(zs);
            Complex lhs = (Complex(1, wb) - pow(Real(ps.p, wb), -s)) * zs;

            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Complex rhs(0, wb);
            for (long j : coprime_offsets(ps.p, ps.big_n)) {
                Complex z = hurwitz_zeta(s, Real(make_rational(j, modulus), wb), ctx);
                mag.update(z);
                rhs += z;
            }
            rhs = pow(Real(ps.p, wb), -(s * (ps.big_n + 1))) * rhs;
            mag.update(rhs);
            out.lhs = lhs;
            out.rhs = rhs;
            break;
        }

        case IdentityId::lemma3: {
            Complex s = ctx.complex(ps.s_re, ps.s_im);
            Complex za = hurwitz_zeta(s, Real(make_rational(ps.alpha, ps.k_p), wb), ctx);
            Complex zb = hurwitz_zeta(s, Real(make_rational(ps.beta, ps.k_p), wb), ctx);
            mag.update(za);
            mag.update(zb);
            Complex lhs = za - pow(Real(ps.p, wb), -s) * zb;

            long modulus = checked_pow_long(ps.p, ps.big_n + 1);
            Complex rhs(0, wb);
            for (long j : lemma3_offsets(ps.p, ps.k_p, ps.alpha, ps.big_n)) {
                Complex z = hurwitz_zeta(s, Real(make_rational(j, ps.k_p * modulus), wb), ctx);
                mag.update(z);
                rhs += z;
            }
            rhs = pow(Real(ps.p, wb), -(s * (ps.big_n + 1))) * rhs;
            mag.update(rhs);
            out.lhs = lhs;
            out.rhs = rhs;
            break;
        }
    }
    return out;
}

}  // namespace detail

inline std::string params_to_string(IdentityId id, const ParamSet& ps,
                                    const char* sep = " ");

/// Evaluates LHS and RHS independently and assembles the report.  The pass
/// tolerance is condition-aware: tol_abs scaled by the largest intermediate
/// term magnitude, floored at tol_abs itself.
inline IdentityReport eval_identity(IdentityId id, const ParamSet& ps,
                                    const PrecisionContext& ctx) {
    Validation v = validate(id, ps);
    if (!v.ok) throw constraint_error(std::string(to_string(id)) + ": " + v.message);

    auto t0 = std::chrono::steady_clock::now();
    detail::MagTracker mag(ctx.bits());
    detail::SideValues sides;
    try {
        sides = detail::eval_sides(id, ps, ctx, mag);
    } catch (const domain_error& e) {
        throw domain_error(std::string(to_string(id)) + " " + params_to_string(id, ps) + ": " +
                           e.what());
    }

    IdentityReport rep;
    rep.id = id;
    rep.params = ps;
    rep.lhs = sides.lhs;
    rep.rhs = sides.rhs;
    rep.abs_diff = abs(sides.lhs - sides.rhs);
    rep.exact = sides.exact;
    if (sides.exact) {
        rep.tolerance = Real(0, ctx.bits());
        rep.pass = sides.exact_pass;
    } else {
        rep.tolerance = ctx.tol_abs() * fmax(Real(1, ctx.bits()), mag.max_mag);
        rep.pass = rep.abs_diff <= rep.tolerance;
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Grids

/// Per-field replacement values for grid construction (CLI overrides).
struct GridOverrides {
    std::optional<std::vector<long>> p, q, k, m, n, N, k_p, alpha, beta;
    std::optional<std::vector<Rational>> b;
    std::optional<std::vector<std::pair<Rational, Rational>>> s;

    bool any_coupled() const { return p || k_p || alpha || beta; }
};

struct GridResult {
    std::vector<ParamSet> points;
    std::vector<std::string> user_errors;  // violations involving user-supplied values
};

namespace detail {

inline std::vector<long> seq(long lo, long hi) {
    std::vector<long> v;
    for (long i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

inline std::vector<Rational> rats(std::initializer_list<const char*> xs) {
    std::vector<Rational> v;
    for (const char* x : xs) v.push_back(parse_rational(x));
    return v;
}

inline std::vector<std::pair<Rational, Rational>> lemma_s_points() {
    return {{Rational(3), Rational(0)},
            {make_rational(5, 2), Rational(0)},
            {make_rational(-3, 2), Rational(0)},
            {make_rational(-5, 2), Rational(0)},
            {Rational(2), Rational(3)}};
}

struct FieldDomain {
    std::vector<long> p{1}, q{1}, k{0}, m{0}, n{2}, N{0}, k_p{1}, alpha{1}, beta{1};
    std::vector<Rational> b{Rational(0)};
    std::vector<std::pair<Rational, Rational>> s{{Rational(0), Rational(0)}};
};

inline FieldDomain default_domain(IdentityId id) {
    FieldDomain d;
    switch (id) {
        case IdentityId::prop1:
            d.p = seq(1, 5); d.q = seq(1, 5); d.b = rats({"0", "1/4", "1/2"}); d.k = seq(0, 4);
            break;
        case IdentityId::prop2:
            d.p = {2, 3, 5}; d.N = seq(0, 2); d.m = seq(0, 3);
            break;
        case IdentityId::prop3:
            d.p = {2, 3, 5}; d.k_p = {2, 3}; d.alpha = {1, 2, 3}; d.beta = {1};
            d.N = seq(0, 1); d.m = seq(0, 2);
            break;
        case IdentityId::prop4:
            d.p = seq(1, 5); d.q = seq(1, 5); d.b = rats({"0", "1/4", "1/2"}); d.k = seq(1, 4);
            break;
        case IdentityId::prop5:
            d.p = {2, 3}; d.N = seq(0, 1); d.k = seq(1, 4);
            break;
        case IdentityId::cor1:
            d.p = seq(1, 4); d.q = seq(1, 4); d.b = rats({"1/4", "1/2", "2/3"});
            break;
        case IdentityId::cor2:
            d.p = seq(1, 4); d.q = seq(1, 4); d.b = rats({"1/4", "1/2", "2/3"}); d.n = {2, 3, 4};
            break;
        case IdentityId::cor3:
            d.p = seq(1, 6); d.q = seq(1, 6); d.b = rats({"0", "1/3", "1/2"}); d.m = seq(0, 8);
            break;
        case IdentityId::cor4:
            d.p = {2, 3, 5}; d.N = seq(0, 2);
            break;
        case IdentityId::cor5:
            d.p = {2, 3, 5}; d.k = seq(0, 8); d.N = seq(0, 2);
            break;
        case IdentityId::lemma1:
            d.p = seq(1, 5); d.q = seq(1, 5); d.b = rats({"0", "1/4", "1/2"});
            d.s = lemma_s_points();
            break;
        case IdentityId::lemma2:
            d.p = {2, 3, 5}; d.N = seq(0, 2); d.s = lemma_s_points();
            break;
        case IdentityId::lemma3:
            d.p = {2, 3, 5}; d.k_p = {2, 3}; d.alpha = {1, 2, 3}; d.beta = {1};
            d.N = seq(0, 1);
            d.s = {{Rational(3), Rational(0)}, {make_rational(-3, 2), Rational(0)}};
            break;
    }
    return d;
}

/// The prop3/lemma3 acceptance triples; used whenever the caller does not
/// override any of the coupled fields (p, k_p, alpha, beta).
inline std::vector<std::array<long, 4>> coupled_triples() {
    return {{3, 2, 1, 1}, {2, 3, 2, 1}, {5, 2, 3, 1}};
}

}  // namespace detail

/// Builds the evaluation grid for an identity.  Grid points drawn purely from
/// defaults are filtered silently when a constraint fails; combinations that
/// fail on a user-overridden field are surfaced as user errors.
inline GridResult make_grid(IdentityId id, const GridOverrides& ov) {
    detail::FieldDomain d = detail::default_domain(id);
    auto relevant = [&](ParamField f) { return detail::uses(id, f); };
    bool coupled_default = (id == IdentityId::prop3 || id == IdentityId::lemma3) &&
                           !ov.any_coupled();
    // overrides apply only to fields this identity reads
    if (ov.p && relevant(ParamField::p)) d.p = *ov.p;
    if (ov.q && relevant(ParamField::q)) d.q = *ov.q;
    if (ov.b && relevant(ParamField::b)) d.b = *ov.b;
    if (ov.k && relevant(ParamField::k)) d.k = *ov.k;
    if (ov.m && relevant(ParamField::m)) d.m = *ov.m;
    if (ov.n && relevant(ParamField::n)) d.n = *ov.n;
    if (ov.N && relevant(ParamField::N)) d.N = *ov.N;
    if (ov.k_p && relevant(ParamField::k_p)) d.k_p = *ov.k_p;
    if (ov.alpha && relevant(ParamField::alpha)) d.alpha = *ov.alpha;
    if (ov.beta && relevant(ParamField::beta)) d.beta = *ov.beta;
    if (ov.s && relevant(ParamField::s)) d.s = *ov.s;

    std::vector<std::array<long, 4>> quads;
    if (coupled_default) {
        quads = detail::coupled_triples();
    } else {
        for (long p : d.p)
            for (long kp : d.k_p)
                for (long a : d.alpha)
                    for (long be : d.beta) quads.push_back({p, kp, a, be});
    }
    bool uses_coupled = id == IdentityId::prop3 || id == IdentityId::lemma3;

    GridResult out;
    auto overridden = [&](ParamField f) {
        switch (f) {
            case ParamField::p: return static_cast<bool>(ov.p);
            case ParamField::q: return static_cast<bool>(ov.q);
            case ParamField::b: return static_cast<bool>(ov.b);
            case ParamField::k: return static_cast<bool>(ov.k);
            case ParamField::m: return static_cast<bool>(ov.m);
            case ParamField::n: return static_cast<bool>(ov.n);
            case ParamField::N: return static_cast<bool>(ov.N);
            case ParamField::k_p: return static_cast<bool>(ov.k_p);
            case ParamField::alpha: return static_cast<bool>(ov.alpha);
            case ParamField::beta: return static_cast<bool>(ov.beta);
            case ParamField::s: return static_cast<bool>(ov.s);
        }
        return false;
    };
    auto note_error = [&](const Validation& v) {
        std::string msg = std::string(to_string(id)) + ": " + v.message;
        for (const auto& e : out.user_errors)
            if (e == msg) return;
        out.user_errors.push_back(msg);
    };

    auto consider = [&](const ParamSet& ps) {
        Validation v = validate(id, ps);
        if (v.ok) {
            out.points.push_back(ps);
            return;
        }
        if (overridden(v.failing_field)) note_error(v);
    };

    if (uses_coupled) {
        for (const auto& quad : quads)
            for (long N : d.N)
                for (long m : d.m)
                    for (const auto& s : d.s) {
                        ParamSet ps;
                        ps.p = quad[0]; ps.k_p = quad[1]; ps.alpha = quad[2]; ps.beta = quad[3];
                        ps.big_n = N; ps.m = m; ps.s_re = s.first; ps.s_im = s.second;
                        consider(ps);
                    }
    } else {
        for (long p : d.p)
            for (long q : d.q)
                for (const auto& b : d.b)
                    for (long k : d.k)
                        for (long m : d.m)
                            for (long n : d.n)
                                for (long N : d.N)
                                    for (const auto& s : d.s) {
                                        ParamSet ps;
                                        ps.p = p; ps.q = q; ps.b = b; ps.k = k; ps.m = m;
                                        ps.n = n; ps.big_n = N;
                                        ps.s_re = s.first; ps.s_im = s.second;
                                        consider(ps);
                                    }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

/// Deterministic constraint-satisfying grid per identity.
inline std::vector<ParamSet> default_grid(IdentityId id) { return make_grid(id, {}).points; }

// ---------------------------------------------------------------------------
// Suite runner

/// Evaluates every (id, grid point); per-point failures become reports with a
/// non-empty error field instead of aborting the suite.  Output order is
/// deterministic (id, then lexicographic params) regardless of scheduling.
inline std::vector<IdentityReport> run_points(
    const std::vector<std::pair<IdentityId, ParamSet>>& tasks, const PrecisionContext& ctx,
    long parallelism) {
    std::vector<IdentityReport> reports(tasks.size());
    auto eval_one = [&](std::size_t i) {
        const auto& [id, ps] = tasks[i];
        try {
            reports[i] = eval_identity(id, ps, ctx);
        } catch (const std::exception& e) {
            IdentityReport rep;
            rep.id = id;
            rep.params = ps;
            rep.abs_diff = Real::nan(ctx.bits());
            rep.tolerance = ctx.tol_abs();
            rep.pass = false;
            rep.error = e.what();
            reports[i] = rep;
        }
    };
    long workers = std::max<long>(1, parallelism);
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) eval_one(i);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(workers), tasks.size());
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                eval_one(i);
        });
    for (auto& th : pool) th.join();
    return reports;
}

inline std::vector<IdentityReport> run_suite(const std::vector<IdentityId>& ids,
                                             const PrecisionContext& ctx, long parallelism = 1) {
    std::vector<std::pair<IdentityId, ParamSet>> tasks;
    for (IdentityId id : kAllIdentities) {
        bool wanted = false;
        for (IdentityId w : ids) wanted = wanted || (w == id);
        if (!wanted) continue;
        for (const auto& ps : default_grid(id)) tasks.emplace_back(id, ps);
    }
    return run_points(tasks, ctx, parallelism);
}

// ---------------------------------------------------------------------------

inline std::string params_to_string(IdentityId id, const ParamSet& ps, const char* sep) {
    std::string out;
    bool first = true;
    auto emit = [&](const char* name, const std::string& value) {
        if (!first) out += sep;
        first = false;
        out += name;
        out += "=";
        out += value;
    };
    for (ParamField f : fields_for(id)) {
        switch (f) {
            case ParamField::p: emit("p", std::to_string(ps.p)); break;
            case ParamField::q: emit("q", std::to_string(ps.q)); break;
            case ParamField::b: emit("b", zcl::to_string(ps.b)); break;
            case ParamField::k: emit("k", std::to_string(ps.k)); break;
            case ParamField::m: emit("m", std::to_string(ps.m)); break;
            case ParamField::n: emit("n", std::to_string(ps.n)); break;
            case ParamField::N: emit("N", std::to_string(ps.big_n)); break;
            case ParamField::k_p: emit("kp", std::to_string(ps.k_p)); break;
            case ParamField::alpha: emit("alpha", std::to_string(ps.alpha)); break;
            case ParamField::beta: emit("beta", std::to_string(ps.beta)); break;
            case ParamField::s: {
                std::string sv = zcl::to_string(ps.s_re);
                if (ps.s_im != 0) {
                    Rational im_abs = ps.s_im < 0 ? Rational(-ps.s_im) : ps.s_im;
                    sv += (ps.s_im < 0 ? "-" : "+") + zcl::to_string(im_abs) + "i";
                }
                emit("s", sv);
                break;
            }
        }
    }
    return out;
}

}  // namespace zcl::identities

#endif

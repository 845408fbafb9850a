// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_LOGPOLY_HPP
#define ZCL_LOGPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "zcl/rational.hpp"
#include "zcl/real.hpp"

namespace zcl {

struct LogPolyTerm {
    Integer coeff;
    long logpow;  // j >= 0
    long invpow;  // m >= 1
};

/// Formal sum  sum c * ln^j(x) / x^m,  closed under differentiation:
///   d/dx [ln^j x / x^m] = j ln^{j-1} x / x^{m+1} - m ln^j x / x^{m+1}.
/// Coefficients are exact integers; zero terms are pruned and (j, m) pairs
/// are unique.
class LogPolynomial {
public:
    LogPolynomial() = default;

    static LogPolynomial single(Integer coeff, long logpow, long invpow) {
        LogPolynomial p;
        if (coeff != 0) p.terms_.push_back({std::move(coeff), logpow, invpow});
        return p;
    }

    LogPolynomial derivative() const {
        std::map<std::pair<long, long>, Integer> acc;
        for (const auto& t : terms_) {
            if (t.logpow > 0) acc[{t.logpow - 1, t.invpow + 1}] += t.coeff * t.logpow;
            acc[{t.logpow, t.invpow + 1}] -= t.coeff * t.invpow;
        }
        LogPolynomial out;
        for (auto& [key, c] : acc)
            if (c != 0) out.terms_.push_back({std::move(c), key.first, key.second});
        return out;
    }

    /// Value at x > 0, at the precision of x.
    Real evaluate(const Real& x) const {
        std::vector<Real> lnp = log_powers(log(x));
        std::vector<Real> invp = inv_powers(x);
        Real acc(0, x.prec());
        for (const auto& t : terms_)
            acc += Real(t.coeff, x.prec()) * lnp[static_cast<std::size_t>(t.logpow)] *
                   invp[static_cast<std::size_t>(t.invpow)];
        return acc;
    }

    std::vector<Real> log_powers(const Real& lx) const {
        std::vector<Real> lnp(static_cast<std::size_t>(max_logpow()) + 1, Real(1, lx.prec()));
        for (std::size_t i = 1; i < lnp.size(); ++i) lnp[i] = lnp[i - 1] * lx;
        return lnp;
    }

    std::vector<Real> inv_powers(const Real& x) const {
        Real ix = 1 / x;
        std::vector<Real> invp(static_cast<std::size_t>(max_invpow()) + 1, Real(1, x.prec()));
        for (std::size_t i = 1; i < invp.size(); ++i) invp[i] = invp[i - 1] * ix;
        return invp;
    }

    const std::vector<LogPolyTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    long max_logpow() const {
        long m = 0;
        for (const auto& t : terms_) m = std::max(m, t.logpow);
        return m;
    }
    long max_invpow() const {
        long m = 0;
        for (const auto& t : terms_) m = std::max(m, t.invpow);
        return m;
    }

private:
    std::vector<LogPolyTerm> terms_;
};

inline LogPolynomial logpoly_derivative(const LogPolynomial& p) { return p.derivative(); }

}  // namespace zcl

#endif

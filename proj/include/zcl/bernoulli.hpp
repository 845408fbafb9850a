// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_BERNOULLI_HPP
#define ZCL_BERNOULLI_HPP

#include <map>
#include <mutex>
#include <vector>

#include "zcl/precision.hpp"
#include "zcl/rational.hpp"

namespace zcl {

/// Exact Bernoulli numbers and polynomial coefficients, grown on demand.
/// Growth is serialized by a mutex; readers always see fully-computed entries.
class BernoulliCache {
public:
    static BernoulliCache& instance() {
        static BernoulliCache cache;
        return cache;
    }

    Rational number(unsigned long n) {
        std::lock_guard<std::mutex> lock(mu_);
        grow_numbers(n);
        return numbers_[n];
    }

    /// Monomial coefficients of B_n(x), degree-descending: c[0] x^n + ... + c[n].
    std::vector<Rational> poly_coeffs(unsigned long n) {
        std::lock_guard<std::mutex> lock(mu_);
        grow_numbers(n);
        auto it = poly_.find(n);
        if (it != poly_.end()) return it->second;
        std::vector<Rational> c(n + 1);
        for (unsigned long k = 0; k <= n; ++k)
            c[k] = Rational(binomial_int(n, k)) * numbers_[k];
        poly_.emplace(n, c);
        return c;
    }

private:
    BernoulliCache() {
        numbers_.push_back(Rational(1));
        numbers_.push_back(make_rational(-1, 2));
    }

    // sum_{k=0}^{n} C(n+1,k) B_k = 0 with B_0 = 1
    void grow_numbers(unsigned long n) {
        while (numbers_.size() <= n) {
            unsigned long i = numbers_.size();
            if (i % 2 == 1) {  // B_{2k+1} = 0 for k >= 1
                numbers_.push_back(Rational(0));
                continue;
            }
            Rational acc(0);
            for (unsigned long k = 0; k < i; ++k)
                acc += Rational(binomial_int(i + 1, k)) * numbers_[k];
            numbers_.push_back(-acc / Rational(binomial_int(i + 1, i)));
        }
    }

    std::mutex mu_;
    std::vector<Rational> numbers_;
    std::map<unsigned long, std::vector<Rational>> poly_;
};

/// Exact B_n.
inline Rational bernoulli_number(unsigned long n) { return BernoulliCache::instance().number(n); }

/// Exact B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Rational bernoulli_poly_exact(unsigned long n, const Rational& x) {
    auto coeffs = BernoulliCache::instance().poly_coeffs(n);
    Rational acc(0);
    for (const auto& c : coeffs) acc = acc * x + c;
    return acc;
}

/// B_n(x) to working precision; coefficients stay exact until evaluation.
inline Real bernoulli_poly_real(unsigned long n, const Real& x, const PrecisionContext& ctx) {
    auto coeffs = BernoulliCache::instance().poly_coeffs(n);
    Real xx = x.to_prec(ctx.bits());
    Real acc(0, ctx.bits());
    for (const auto& c : coeffs) acc = acc * xx + Real(c, ctx.bits());
    return acc;
}

}  // namespace zcl

#endif

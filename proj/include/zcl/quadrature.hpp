// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_QUADRATURE_HPP
#define ZCL_QUADRATURE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "zcl/errors.hpp"
#include "zcl/real.hpp"

namespace zcl {
namespace quad {

/// One abscissa of a double-exponential rule.  For the (0,1) piece `t` is the
/// abscissa and `log_t` its logarithm (steep integrands need ln t directly);
/// for the (1,inf) piece `t` holds the offset w = x - 1 and `log_t` is unused.
struct Node {
    Real t;
    Real log_t;
    Real weight;
};

enum class Piece { unit_interval, upper_tail };

namespace detail {

inline constexpr double kCutoff = 5.0;  // |u| range; supports ~90-digit targets
inline constexpr long kBaseLevel = 3;
inline constexpr long kMaxLevel = 12;

/// tanh-sinh node at u for the (0,1) interval: t = 1/(1 + e^{-pi sinh u}).
inline Node unit_node(const Real& u, const Real& half_pi) {
    Real x = half_pi * sinh(u);
    Real t, log_t;
    if (x.sign() >= 0) {
        Real em = exp(-2 * x);
        t = 1 / (1 + em);
        log_t = -log1p(em);
    } else {
        Real ep = exp(2 * x);
        t = ep / (1 + ep);
        log_t = 2 * x - log1p(ep);
    }
    Real ch = cosh(x);
    Real weight = half_pi * cosh(u) / (2 * ch * ch);
    return {t, log_t, weight};
}

/// exp-sinh node at u for (0,inf): w = e^{pi/2 sinh u}, dw = w * pi/2 cosh u.
inline Node tail_node(const Real& u, const Real& half_pi) {
    Real w = exp(half_pi * sinh(u));
    return {w, Real(0, u.prec()), half_pi * cosh(u) * w};
}

struct LevelKey {
    Piece piece;
    long level;
    mpfr_prec_t bits;
    bool operator<(const LevelKey& o) const {
        return std::tie(piece, level, bits) < std::tie(o.piece, o.level, o.bits);
    }
};

/// Node tables are immutable once built; levels above the base store only the
/// abscissae new to that level (odd multiples of the step).
inline std::shared_ptr<const std::vector<Node>> level_nodes(Piece piece, long level,
                                                            mpfr_prec_t bits) {
    struct Cache {
        std::mutex mu;
        std::map<LevelKey, std::shared_ptr<const std::vector<Node>>> tables;
    };
    static Cache cache;
    LevelKey key{piece, level, bits};
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.tables.find(key);
        if (it != cache.tables.end()) return it->second;
    }

    Real half_pi = Real::pi(bits) / 2;
    Real h = ldexp(Real(1, bits), -level);
    long steps = static_cast<long>(kCutoff * (1L << level));
    auto nodes = std::make_shared<std::vector<Node>>();
    auto push = [&](long k) {
        Real u = h * k;
        nodes->push_back(piece == Piece::unit_interval ? unit_node(u, half_pi)
                                                       : tail_node(u, half_pi));
    };
    if (level == kBaseLevel) {
        for (long k = -steps; k <= steps; ++k) push(k);
    } else {
        for (long k = -steps; k <= steps; ++k)
            if (k % 2 != 0) push(k);
    }

    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.tables.emplace(key, nodes).first->second;
}

}  // namespace detail

/// Trapezoidal double-exponential integration with level doubling; converges
/// when successive refinements differ by less than target_abs/4.
template <typename F>
Real integrate(Piece piece, F&& f, mpfr_prec_t bits, const Real& target_abs) {
    Real h = ldexp(Real(1, bits), -detail::kBaseLevel);
    Real sum(0, bits);
    for (const auto& node : *detail::level_nodes(piece, detail::kBaseLevel, bits))
        sum += f(node) * node.weight;
    Real estimate = sum * h;

    for (long level = detail::kBaseLevel + 1; level <= detail::kMaxLevel; ++level) {
        Real inner(0, bits);
        for (const auto& node : *detail::level_nodes(piece, level, bits))
            inner += f(node) * node.weight;
        h = ldexp(Real(1, bits), -level);
        Real refined = estimate / 2 + inner * h;
        Real diff = abs(refined - estimate);
        estimate = refined;
        if (level >= detail::kBaseLevel + 2 && diff <= target_abs / 4) return estimate;
    }
    throw quadrature_error("double-exponential quadrature did not converge");
}

}  // namespace quad
}  // namespace zcl

#endif

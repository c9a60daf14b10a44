// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ZETAX_DETAIL_QUADRATURE_HPP
#define ZETAX_DETAIL_QUADRATURE_HPP

#include "zetax/detail/precision.hpp"

#include <utility>
#include <vector>

namespace zetax::detail {

// Gauss-Legendre nodes/weights on [-1, 1], computed at full working
// precision by Newton iteration on P_n (double-precision seeds).
template <class R>
const std::vector<std::pair<R, R>>& gl_rule(int n) {
  static thread_local std::vector<std::vector<std::pair<R, R>>> cache(64);
  auto& rule = cache.at(n);
  if (!rule.empty()) return rule;
  const R one(1);
  for (int i = 0; i < n; ++i) {
    using std::cos;
    R x = R(std::cos(detail::pi_v<double>() * (i + 0.75) / (n + 0.5)));
    for (int it = 0; it < 100; ++it) {
      // evaluate P_n and P_n' by the three-term recurrence
      R p0 = one, p1 = x;
      for (int k = 2; k <= n; ++k) {
        R p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1; p1 = p2;
      }
      R dp = n * (x * p1 - p0) / (x * x - one);
      R dx = p1 / dp;
      x -= dx;
      using std::abs;
      if (abs(dx) < machine_eps<R>() * 4) break;
    }
    R p0 = one, p1 = x;
    for (int k = 2; k <= n; ++k) {
      R p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1; p1 = p2;
    }
    R dp = n * (x * p1 - p0) / (x * x - one);
    R w = 2 / ((one - x * x) * dp * dp);
    rule.emplace_back(x, w);
  }
  return rule;
}

template <class R>
R qnorm(const R& x) { using std::abs; return abs(x); }

template <class R>
R qnorm(const Cx<R>& z) { return abs(z); }

template <class V, class R, class F>
V gl_panel(F&& f, const R& a, const R& b, int n) {
  const auto& rule = gl_rule<R>(n);
  R half = (b - a) / 2, mid = (a + b) / 2;
  V acc{};
  for (const auto& [x, w] : rule) acc += (w * half) * f(mid + half * x);
  return acc;
}

template <class V, class R>
struct QuadResult {
  V value{};
  R error{};  // accumulated GL15-vs-GL7 discrepancy plus rounding
};

// Adaptive composite Gauss-Legendre with interval halving; the per-panel
// error estimate is the GL15/GL7 difference.  `breaks` must contain the
// endpoints and any interior kinks of the integrand.
template <class V, class R, class F>
QuadResult<V, R> adaptive_gl(F&& f, const std::vector<R>& breaks, const R& abs_target,
                             int max_depth = 40) {
  QuadResult<V, R> out;
  R total = breaks.back() - breaks.front();
  struct Panel { R a, b; int depth; };
  std::vector<Panel> stack;
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    stack.push_back({breaks[i], breaks[i + 1], 0});
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    V hi = gl_panel<V>(f, p.a, p.b, 15);
    V lo = gl_panel<V>(f, p.a, p.b, 7);
    R est = qnorm<R>(hi - lo);
    R budget = abs_target * (p.b - p.a) / total;
    if (est <= budget || p.depth >= max_depth) {
      out.value += hi;
      out.error += est + rounding_slack<R>(qnorm<R>(hi));
    } else {
      R mid = (p.a + p.b) / 2;
      stack.push_back({p.a, mid, p.depth + 1});
      stack.push_back({mid, p.b, p.depth + 1});
    }
  }
  return out;
}

}  // namespace zetax::detail

#endif  // ZETAX_DETAIL_QUADRATURE_HPP

// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Explicit two-sided window for the zero-counting function N_K(T) of a
// Dedekind zeta function: the constants c1(eta), c2(eta), the additive
// cap, an eta optimizer, and the Minkowski degree-vs-discriminant bound.

#ifndef ZETAX_ZEROCOUNT_HPP
#define ZETAX_ZEROCOUNT_HPP

#include "zetax/numerics.hpp"
#include "zetax/detail/roots.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace zetax {

struct FieldParams {
  int n_K = 1;       // degree
  int r1 = 1;        // real places
  int r2 = 0;        // complex places
  double log_disc = 0.0;  // log of the absolute discriminant

  void validate() const {
    if (n_K < 1) throw std::domain_error("FieldParams: degree must be >= 1");
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 != n_K)
      throw std::domain_error("FieldParams: r1 + 2*r2 must equal the degree");
    if (log_disc < 0) throw std::domain_error("FieldParams: log_disc must be >= 0");
    if (n_K >= 2 && !(log_disc > 0))
      throw std::domain_error("FieldParams: log_disc must be positive for degree >= 2");
  }
};

struct EtaConstants {
  double eta = 0.0;
  CertifiedReal c1, c2;
  CertifiedReal b1, b2, b3;
  CertifiedReal g_cap;
};

struct CountWindow {
  double T = 0.0;
  CertifiedReal main_term;
  CertifiedReal error_bound;
};

namespace detail {

// the two Stirling deviation coefficients enter the argument-change
// budget as 2*0.630716 (rounded in the source derivation to 1.261431)
inline constexpr double kArgBudget = 1.261431;

template <class R>
IReal<R> b1_const() {
  using std::sqrt;
  return isqrt(IReal<R>::exact(R(1) + R(25) / 4)) + R(2);
}

template <class R>
IReal<R> b2_const() {
  auto pi = IReal<R>::exact(pi_v<R>());
  auto l2 = ilog(IReal<R>::exact(R(2)));
  return ilog(b1_const<R>() / (R(2) * pi_v<R>())) / (pi * l2) + R(kArgBudget) / pi;
}

template <class R>
IReal<R> b3_const() {
  auto pi = IReal<R>::exact(pi_v<R>());
  auto l2 = ilog(IReal<R>::exact(R(2)));
  return R(-2) * ilog(b1_const<R>() / (R(2) * pi_v<R>())) / (pi * l2);
}

template <class R>
IReal<R> c1_eta(const R& eta) {
  auto l2 = ilog(IReal<R>::exact(R(2)));
  return (R(1) + R(2) * eta) / (pi_v<R>() * l2);
}

template <class R>
IReal<R> c2_eta(const R& eta, const R& target) {
  auto l2 = ilog(IReal<R>::exact(R(2)));
  auto pi = IReal<R>::exact(pi_v<R>());
  auto z1 = zeta_em<R>(1 + eta, target).zeta;
  auto z2 = zeta_em<R>(2 + 2 * eta, target).zeta;
  auto z3 = zeta_em<R>(R(1.5) + 2 * eta, target).zeta;
  return b2_const<R>() - b3_const<R>() * eta +
         R(2) / l2 * ilog(z1 * z1 / z2) + R(2) / pi * ilog(z3);
}

// sup over T >= 1 of the additive argument-change cap g(T); the
// expression is decreasing in T so the sup sits at T = 1.
template <class R>
IReal<R> g_cap_expr(const R& T) {
  auto l2 = ilog(IReal<R>::exact(R(2)));
  auto t = IReal<R>::exact(T);
  return ilog(IReal<R>::exact(R(1)) + R(5) / (R(2) * t)) / l2 + R(2) +
         ilog(R(3) * b1_const<R>()) / l2;
}

template <class R>
IReal<R> window_bound(const R& logdisc, int n_K, const R& T, const R& eta,
                      const R& target) {
  return c1_eta<R>(eta) * (IReal<R>::exact(logdisc) + R(n_K) * ilog(IReal<R>::exact(T))) +
         c2_eta<R>(eta, target) * R(n_K) + g_cap_expr<R>(R(1));
}

template <class R>
IReal<R> window_main(const R& logdisc, int n_K, const R& T) {
  auto t = IReal<R>::exact(T);
  auto two_pi_e = R(2) * pi_v<R>() * boost::math::constants::e<R>();
  return t / pi_v<R>() *
         (IReal<R>::exact(logdisc) + R(n_K) * ilog(t / two_pi_e));
}

}  // namespace detail

inline CertifiedReal c1_of_eta(double eta, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(eta > 0.0 && eta <= 0.5)) throw std::domain_error("c1_of_eta: eta out of (0, 1/2]");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return detail::c1_eta<R>(R(eta)).certify();
  });
}

inline CertifiedReal c2_of_eta(double eta, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(eta > 0.0 && eta <= 0.5)) throw std::domain_error("c2_of_eta: eta out of (0, 1/2]");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return detail::c2_eta<R>(R(eta), R(cfg.quadrature_target)).certify();
  });
}

inline CertifiedReal g_cap(const ToleranceConfig& cfg) {
  cfg.validate();
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return detail::g_cap_expr<R>(R(1)).certify();
  });
}

inline EtaConstants eta_constants(double eta, const ToleranceConfig& cfg) {
  EtaConstants out;
  out.eta = eta;
  out.c1 = c1_of_eta(eta, cfg);
  out.c2 = c2_of_eta(eta, cfg);
  out.g_cap = g_cap(cfg);
  detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    out.b1 = detail::b1_const<R>().certify();
    out.b2 = detail::b2_const<R>().certify();
    out.b3 = detail::b3_const<R>().certify();
    return 0;
  });
  return out;
}

inline CountWindow count_window(const FieldParams& field, double T, double eta,
                                const ToleranceConfig& cfg) {
  cfg.validate();
  field.validate();
  if (!(T >= 1.0)) throw std::domain_error("count_window: requires T >= 1");
  if (!(eta > 0.0 && eta <= 0.5)) throw std::domain_error("count_window: eta out of (0, 1/2]");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    CountWindow w;
    w.T = T;
    w.main_term = detail::window_main<R>(R(field.log_disc), field.n_K, R(T)).certify();
    w.error_bound =
        detail::window_bound<R>(R(field.log_disc), field.n_K, R(T), R(eta),
                                R(cfg.quadrature_target)).certify();
    return w;
  });
}

/// Picks eta in (0, 1/2] minimizing the window half-width.  Golden
/// section on [1e-4, 1/2] after a 200-point unimodality scan; falls back
/// to the scan argmin if the scan is not unimodal.
inline std::pair<double, CountWindow> optimize_eta(const FieldParams& field, double T,
                                                   const ToleranceConfig& cfg) {
  cfg.validate();
  field.validate();
  if (!(T >= 1.0)) throw std::domain_error("optimize_eta: requires T >= 1");
  const double lo = 1e-4, hi = 0.5;
  auto bound = [&](double eta) {
    return count_window(field, T, eta, cfg).error_bound.value;
  };

  const int n = 200;
  std::vector<double> vals(n + 1);
  int argmin = 0;
  for (int i = 0; i <= n; ++i) {
    vals[i] = bound(lo + (hi - lo) * i / n);
    if (vals[i] < vals[argmin]) argmin = i;
  }
  bool unimodal = true;
  for (int i = 1; i <= n; ++i)
    if ((i <= argmin && vals[i] > vals[i - 1]) ||
        (i > argmin && vals[i] < vals[i - 1])) { unimodal = false; break; }

  double eta_star;
  if (unimodal) {
    eta_star = detail::golden_section<double>(bound, lo, hi, cfg.root_target > 1e-9
                                                  ? cfg.root_target : 1e-9,
                                              detail::Extremum::minimum).first;
  } else {
    eta_star = lo + (hi - lo) * argmin / n;
  }
  return {eta_star, count_window(field, T, eta_star, cfg)};
}

struct MinkowskiBound {
  CertifiedReal sup;   // sup of n / log((pi/4)^n (n^n/n!)^2)
  int argmax = 0;
  bool eventually_monotone = false;  // terms decreasing beyond the argmax
};

/// Bound C0 with n_K <= C0 * log d_K for K != Q, from the Minkowski
/// discriminant inequality.  Scans degrees up to max_degree and checks
/// the terms decrease beyond the argmax toward the Stirling limit
/// 1/(log(pi/4) + 2), so the scan sup is the global sup.
inline MinkowskiBound minkowski_c0(int max_degree, const ToleranceConfig& cfg) {
  cfg.validate();
  if (max_degree < 2) throw std::domain_error("minkowski_c0: max_degree must be >= 2");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    using std::log;
    MinkowskiBound out;
    R best(-1), prev(-1);
    bool decreasing_after = true;
    R log_pi4 = log(detail::pi_v<R>() / 4);
    for (int n = 2; n <= max_degree; ++n) {
      R denom = n * log_pi4 + 2 * (n * log(R(n)) - boost::math::lgamma(R(n + 1)));
      R term = R(n) / denom;
      if (term > best) { best = term; out.argmax = n; }
      if (n > 2 && out.argmax < n && term > prev) decreasing_after = false;
      prev = term;
    }
    R limit = 1 / (log_pi4 + 2);
    out.eventually_monotone = decreasing_after && prev > limit;
    out.sup = detail::IReal<R>(best, detail::rounding_slack<R>(best) * 64).certify();
    return out;
  });
}

}  // namespace zetax

#endif  // ZETAX_ZEROCOUNT_HPP

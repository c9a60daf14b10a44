// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// The kappa = 1/sqrt(5) differencing device: the rational function g and
// its certified minimum, the digamma-difference quantities f_a, C_a(eps),
// and the assembled degree-coefficient budget.

#ifndef ZETAX_STECHKIN_HPP
#define ZETAX_STECHKIN_HPP

#include "zetax/numerics.hpp"
#include "zetax/detail/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace zetax {

struct StechkinConstants {
  double kappa;  // 1/sqrt(5)
  double a0;     // (sqrt(5)-1)/2
  double b0;     // (1+sqrt(5))/2
  double c0 = 1.0;
  CertifiedReal phi;  // (1 - 1/sqrt(5))/2

  static StechkinConstants make(const ToleranceConfig& cfg) {
    cfg.validate();
    StechkinConstants c;
    c.kappa = 1.0 / std::sqrt(5.0);
    c.a0 = (std::sqrt(5.0) - 1.0) / 2.0;
    c.b0 = (1.0 + std::sqrt(5.0)) / 2.0;
    c.phi = detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
      using R = mpreal<DC::value>;
      auto s5 = isqrt(detail::IReal<R>::exact(R(5)));
      return ((R(1) - R(1) / s5) / R(2)).certify();
    });
    return c;
  }
};

struct GammaBudget {
  CertifiedReal f0_11, f1_11;     // f_a(1,1) for a = 0, 1
  CertifiedReal C0_eps, C1_eps;   // C_a(eps)
  CertifiedReal gamma_diff;       // coefficient of the log-pi/digamma block
  CertifiedReal zeta_term;        // -(1/sqrt5) zeta'/zeta((1+sqrt5)/2)
  CertifiedReal nk_coeff;         // gamma_diff + zeta_term
  CertifiedReal additive;         // -min g = 0.121586...
};

inline double g_eval(double a, double b, double c, double x,
                     const StechkinConstants& consts) {
  if (!(a > 0 && b > 0 && c > 0))
    throw std::domain_error("g_eval: requires positive a, b, c");
  return consts.kappa * (a / (a * a + x * x) + b / (b * b + x * x)) -
         c / (c * c + x * x);
}

namespace detail {

template <class R>
IReal<R> g_interval(const IReal<R>& x) {
  auto s5 = isqrt(IReal<R>::exact(R(5)));
  auto kappa = R(1) / s5;
  auto a = (s5 - R(1)) / R(2);
  auto b = (s5 + R(1)) / R(2);
  auto one = IReal<R>::exact(R(1));
  auto x2 = x * x;
  return kappa * (a / (a * a + x2) + b / (b * b + x2)) - one / (one + x2);
}

}  // namespace detail

/// Certified unique positive root of 2x^6 + 4x^4 - 1 and the value of g
/// there, which is the global minimum of g on the real line.
inline std::pair<CertifiedReal, CertifiedReal> g_min(const StechkinConstants&,
                                                     const ToleranceConfig& cfg) {
  cfg.validate();
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    auto poly = [](const R& x) {
      R x2 = x * x;
      return 2 * x2 * x2 * x2 + 4 * x2 * x2 - 1;
    };
    auto root = detail::bracketed_root<R>(poly, R(0.5), R(1), R(cfg.root_target));
    auto val = detail::g_interval<R>(root);
    return std::make_pair(root.certify(), val.certify());
  });
}

/// Bound on |g(a0 - s, b0 - s, c0 - s; x) - g(a0, b0, c0; x)| per unit of
/// parameter slack s, evaluated at the slack 0.02 used in the stability
/// argument; always below 5.
inline CertifiedReal g_perturb_margin(double eps, const StechkinConstants&,
                                      const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(eps > 0 && eps <= 1e-2))
    throw std::domain_error("g_perturb_margin: eps out of (0, 1e-2]");
  auto out = detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    auto s5 = isqrt(detail::IReal<R>::exact(R(5)));
    auto kappa = R(1) / s5;
    auto a = (s5 - R(1)) / R(2) - R(0.02);
    auto b = (s5 + R(1)) / R(2) - R(0.02);
    auto c = detail::IReal<R>::exact(R(1)) - R(0.02);
    return (R(2) * (kappa / (a * a) + kappa / (b * b) +
                    detail::IReal<R>::exact(R(1)) / (c * c))).certify();
  });
  if (!(out.hi() < 5.0))
    throw std::logic_error("g_perturb_margin: stability margin >= 5");
  return out;
}

/// f_a(sigma, t) = (1/2) Re( psi((s+a)/2) - (1/sqrt5) psi((s1+a)/2) ),
/// s = sigma + it, s1 = (1 + sqrt(1+4 sigma^2))/2 + it.
inline CertifiedReal f_a(int a, double sigma, double t, const ToleranceConfig& cfg) {
  cfg.validate();
  if (a != 0 && a != 1) throw std::domain_error("f_a: a must be 0 or 1");
  if (!(sigma >= 1.0)) throw std::domain_error("f_a: requires sigma >= 1");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    using std::sqrt;
    R s(sigma), tt(t);
    R sigma1 = (1 + sqrt(1 + 4 * s * s)) / 2;
    auto d1 = detail::digamma_cx<R>({(s + a) / 2, tt / 2}, R(cfg.quadrature_target));
    auto d2 = detail::digamma_cx<R>({(sigma1 + a) / 2, tt / 2}, R(cfg.quadrature_target));
    R s5 = sqrt(R(5));
    R val = (d1.v.re - d2.v.re / s5) / 2;
    R rad = (d1.r + d2.r / s5) / 2 + detail::rounding_slack<R>(val) * 8;
    return detail::IReal<R>(val, rad).certify();
  });
}

/// C_a(eps) = f_a(1,1) + eps*( S((1+a)/2, 1/2)/4
///            + (1+eps)/(2 sqrt5 sqrt(1+4(1+eps)^2)) * S(((1+sqrt5)/2+a)/2, 1/2) ).
inline CertifiedReal C_a(int a, double eps, const ToleranceConfig& cfg) {
  cfg.validate();
  if (a != 0 && a != 1) throw std::domain_error("C_a: a must be 0 or 1");
  if (!(eps >= 0)) throw std::domain_error("C_a: requires eps >= 0");
  auto base = f_a(a, 1.0, 1.0, cfg);
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    using std::sqrt;
    R e(eps);
    R target(cfg.quadrature_target);
    auto s1 = detail::s_series<R>((1 + R(a)) / 2, R(0.5), target);
    R b0 = (1 + sqrt(R(5))) / 2;
    auto s2 = detail::s_series<R>((b0 + R(a)) / 2, R(0.5), target);
    auto extra = e * (s1 / R(4) +
                      (1 + e) / (2 * sqrt(R(5)) * sqrt(1 + 4 * (1 + e) * (1 + e))) * s2);
    auto total = detail::IReal<R>(R(base.value), R(base.radius)) + extra;
    return total.certify();
  });
}

inline GammaBudget theorem2_budget(double eps, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(eps > 0 && eps <= 1e-2))
    throw std::domain_error("theorem2_budget: eps out of (0, 1e-2]");
  GammaBudget out;
  out.f0_11 = f_a(0, 1.0, 1.0, cfg);
  out.f1_11 = f_a(1, 1.0, 1.0, cfg);
  out.C0_eps = C_a(0, eps, cfg);
  out.C1_eps = C_a(1, eps, cfg);
  auto consts = StechkinConstants::make(cfg);
  auto [beta, gmin] = g_min(consts, cfg);
  out.additive = {-gmin.value, gmin.radius};
  detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    using std::sqrt;
    auto s5 = isqrt(detail::IReal<R>::exact(R(5)));
    auto lpi = ilog(detail::IReal<R>::exact(detail::pi_v<R>()));
    detail::IReal<R> c0{R(out.C0_eps.value), R(out.C0_eps.radius)};
    detail::IReal<R> c1{R(out.C1_eps.value), R(out.C1_eps.radius)};
    // max of C0 and the average (C0+C1)/2, widened to cover both branches
    auto avg = (c0 + c1) / R(2);
    detail::IReal<R> worst = (avg.v > c0.v) ? avg : c0;
    auto gd = (s5 - R(1)) / s5 * lpi / R(-2) + worst;
    out.gamma_diff = gd.certify();
    R golden = (1 + sqrt(R(5))) / 2;
    auto zp = detail::zeta_em<R>(golden, R(cfg.quadrature_target));
    auto zt = -(zp.dzeta / zp.zeta) / s5;
    out.zeta_term = zt.certify();
    out.nk_coeff = (gd + zt).certify();
    return 0;
  });
  if (!(out.gamma_diff.hi() < -0.545240))
    throw std::logic_error("theorem2_budget: gamma_diff budget violated");
  if (!(out.zeta_term.hi() <= 0.509786))
    throw std::logic_error("theorem2_budget: zeta-term budget violated");
  if (!(out.nk_coeff.hi() <= -0.035454))
    throw std::logic_error("theorem2_budget: degree-coefficient budget violated");
  return out;
}

}  // namespace zetax

#endif  // ZETAX_STECHKIN_HPP

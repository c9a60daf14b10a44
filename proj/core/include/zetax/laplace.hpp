// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Compactly supported test functions and their Laplace transforms: the
// triangular weight, the two-parameter cosine family built as a
// self-convolution, certified transform evaluation, and the numeric
// verification of the positivity/decay conditions the explicit-formula
// machinery imposes.

#ifndef ZETAX_LAPLACE_HPP
#define ZETAX_LAPLACE_HPP

#include "zetax/numerics.hpp"
#include "zetax/detail/quadrature.hpp"
#include "zetax/detail/roots.hpp"

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetax {

struct LaplacePair {
  double support_x0 = 0.0;           // f vanishes on [x0, infinity)
  double f0 = 0.0;                   // f(0)
  double F0_value = 0.0;             // F(0) closed form
  double B_f = 0.0;                  // sup |f''| on (0, x0)
  double c_f = 0.0;                  // 3*B_f*x0 + 2|f(0)|/x0
  std::string name;

  std::function<double(double)> f_at;  // 0 outside [0, x0)
  std::function<mpreal<30>(const mpreal<30>&)> f_mp30;
  std::function<mpreal<60>(const mpreal<60>&)> f_mp60;

  template <unsigned D>
  const std::function<mpreal<D>(const mpreal<D>&)>& f_mp() const {
    if constexpr (D == 30) return f_mp30;
    else return f_mp60;
  }
};

struct HeathBrownParams {
  double lambda = 0.0;
  double theta = 0.0;        // root of sin^2(t) = (3/2)(1 - t cot t)
  double zeta_param = 0.0;   // lambda * tan(theta)
  double half_support = 0.0; // d = theta / zeta_param; support of f is [0, 2d]
  double f0 = 0.0;
  double F0_value = 0.0;
};

// ---------------------------------------------------------------------
// Triangular weight f(t) = x0 - t.

inline LaplacePair triangular_pair(double x0) {
  if (!(x0 > 0)) throw std::domain_error("triangular_pair: requires x0 > 0");
  LaplacePair p;
  p.name = "triangular";
  p.support_x0 = x0;
  p.f0 = x0;
  p.F0_value = x0 * x0 / 2;
  p.B_f = 0.0;
  p.c_f = 2.0;  // 3*0*x0 + 2*x0/x0
  p.f_at = [x0](double t) { return (t >= 0 && t < x0) ? x0 - t : 0.0; };
  p.f_mp30 = [x0](const mpreal<30>& t) {
    return (t >= 0 && t < x0) ? mpreal<30>(x0) - t : mpreal<30>(0);
  };
  p.f_mp60 = [x0](const mpreal<60>& t) {
    return (t >= 0 && t < x0) ? mpreal<60>(x0) - t : mpreal<60>(0);
  };
  return p;
}

/// Closed-form transform of the triangular weight,
/// F(z) = (e^{-x0 z} + x0 z - 1)/z^2, with the Taylor series
/// sum_k (-z)^k x0^{k+2}/(k+2)! below |z| = 1e-3 where the closed form
/// loses digits to cancellation.
inline std::complex<double> triangular_F(double x0, std::complex<double> z) {
  if (!(x0 > 0)) throw std::domain_error("triangular_F: requires x0 > 0");
  if (std::abs(z) < 1e-3) {
    std::complex<double> sum = 0.0, pw = 1.0;
    double fact = 2.0;  // (k+2)!
    for (int k = 0;; ++k) {
      sum += pw * std::pow(x0, k + 2) / fact;
      if (k >= 10) break;
      pw *= -z;
      fact *= (k + 3);
    }
    return sum;
  }
  return (std::exp(-x0 * z) + x0 * z - 1.0) / (z * z);
}

// ---------------------------------------------------------------------
// The cosine self-convolution family.

namespace detail {

template <class R>
R hb_theta_equation(const R& th) {
  using std::sin; using std::cos;
  return sin(th) * sin(th) - R(3) / 2 * (1 - th * cos(th) / sin(th));
}

template <class R>
IReal<R> hb_theta_root(const R& target) {
  // the equation is negative at 1 and positive at 1.5 (inside (0, pi/2))
  return bracketed_root<R>([](const R& t) { return hb_theta_equation<R>(t); },
                           R(1), R(1.5), target);
}

// f per the closed form of the self-convolution, valid on [0, 2d]
template <class R>
R hb_f(const R& lam, const R& th, const R& t) {
  using std::sin; using std::cos; using std::tan;
  R tanth = tan(th);
  R A = 1 + tanth * tanth;
  R zet = lam * tanth;
  R d = th / zet;
  if (t < 0 || t > 2 * d) return R(0);
  return lam * A *
         (lam * A * (d - t / 2) * cos(zet * t) + lam * (2 * d - t) +
          sin(2 * th - zet * t) / sin(2 * th) -
          2 * (1 + sin(th - zet * t) / sin(th)));
}

template <class R>
R hb_fpp(const R& lam, const R& th, const R& t) {
  using std::sin; using std::cos; using std::tan;
  R tanth = tan(th);
  R A = 1 + tanth * tanth;
  R zet = lam * tanth;
  R d = th / zet;
  return lam * A *
         (lam * A * (zet * sin(zet * t) - zet * zet * (d - t / 2) * cos(zet * t)) -
          zet * zet * sin(2 * th - zet * t) / sin(2 * th) +
          2 * zet * zet * sin(th - zet * t) / sin(th));
}

}  // namespace detail

inline CertifiedReal hb_theta(const ToleranceConfig& cfg) {
  cfg.validate();
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return detail::hb_theta_root<R>(R(cfg.root_target)).certify();
  });
}

inline std::pair<HeathBrownParams, LaplacePair> hb_pair(double lambda,
                                                        const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(lambda > 0)) throw std::domain_error("hb_pair: requires lambda > 0");

  using R30 = mpreal<30>;
  using R60 = mpreal<60>;
  const R30 th30 = detail::hb_theta_root<R30>(R30(1e-25)).v;
  const R60 th60 = detail::hb_theta_root<R60>(R60(1e-25)).v;

  HeathBrownParams hp;
  hp.lambda = lambda;
  hp.theta = static_cast<double>(th30);
  {
    using std::tan; using std::cos; using std::sin;
    R30 lam(lambda);
    R30 tanth = tan(th30);
    hp.zeta_param = static_cast<double>(lam * tanth);
    hp.half_support = static_cast<double>(th30 / (lam * tanth));
    R30 A = 1 + tanth * tanth;
    hp.f0 = static_cast<double>(lam * A * (th30 * tanth + 3 * th30 / tanth - 3));
    hp.F0_value = static_cast<double>(2 * A * (1 - th30 / tanth) * (1 - th30 / tanth));
  }

  LaplacePair p;
  p.name = "hb";
  p.support_x0 = 2 * hp.half_support;
  p.f0 = hp.f0;
  p.F0_value = hp.F0_value;
  p.f_at = [lambda, th = hp.theta](double t) {
    return static_cast<double>(detail::hb_f<double>(lambda, th, t));
  };
  p.f_mp30 = [lam = R30(lambda), th30](const R30& t) {
    return detail::hb_f<R30>(lam, th30, t);
  };
  p.f_mp60 = [lam = R60(lambda), th60](const R60& t) {
    return detail::hb_f<R60>(lam, th60, t);
  };

  // B_f: grid maximum of |f''| plus a slack of one grid-cell drift,
  // using a gridded bound on |f'''| with a safety factor
  {
    const int n = 10000;
    double x0 = p.support_x0, h = x0 / n;
    double maxpp = 0.0, maxppp = 0.0;
    double prev = detail::hb_fpp<double>(lambda, hp.theta, 1e-12);
    for (int i = 1; i <= n; ++i) {
      double t = std::min(i * h, x0 - 1e-12);
      double v = detail::hb_fpp<double>(lambda, hp.theta, t);
      maxpp = std::max(maxpp, std::abs(v));
      maxppp = std::max(maxppp, std::abs(v - prev) / h);
      prev = v;
    }
    p.B_f = maxpp + 2.0 * maxppp * h;
    p.c_f = 3 * p.B_f * x0 + 2 * std::abs(p.f0) / x0;
  }
  return {hp, p};
}

// ---------------------------------------------------------------------
// Certified transform evaluation.

inline CertifiedComplex laplace_eval(const LaplacePair& pair, std::complex<double> z,
                                     const ToleranceConfig& cfg) {
  cfg.validate();
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    using C = detail::Cx<R>;
    const auto& f = pair.f_mp<DC::value>();
    C zz{R(z.real()), R(z.imag())};
    auto integrand = [&](const R& t) { return C(f(t)) * detail::exp(C{} - zz * C(t)); };
    std::vector<R> breaks{R(0), R(pair.support_x0)};
    auto q = detail::adaptive_gl<C, R>(integrand, breaks, R(cfg.quadrature_target));
    CertifiedReal re = detail::IReal<R>(q.value.re, q.error).certify();
    CertifiedReal im = detail::IReal<R>(q.value.im, q.error).certify();
    return CertifiedComplex{re, im};
  });
}

// ---------------------------------------------------------------------
// Condition verification.

struct GridSpec {
  int support_points = 200;     // f >= 0 check
  int halfplane_points = 100;   // Re F >= 0 and decay checks
  double max_re = 5.0;
  double max_im = 50.0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst_witness_re = 0.0;  // t for support checks, Re z otherwise
  double worst_witness_im = 0.0;
  double worst_value = 0.0;
};

struct ConditionReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

/// Verifies f(0) >= 0, f >= 0 on the support, Re F >= 0 on a
/// right-half-plane grid, and the decay bound |F(z) - f(0)/z| <= c_f/|z|^2
/// (valid for Re z >= 0, where the integration-by-parts bound applies).
inline ConditionReport condition_check(const LaplacePair& pair, const GridSpec& grid,
                                       const ToleranceConfig& cfg) {
  cfg.validate();
  if (grid.support_points < 1 || grid.halfplane_points < 1)
    throw std::domain_error("condition_check: empty grid");
  const double tol = 1e-9;
  ConditionReport rep;

  {
    CheckResult c{"f0_nonnegative", pair.f0 >= 0.0, 0.0, 0.0, pair.f0};
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"f_nonnegative_on_support", true, 0.0, 0.0, 0.0};
    double worst = 0.0;
    for (int i = 0; i <= grid.support_points; ++i) {
      double t = pair.support_x0 * i / (grid.support_points + 1.0);
      double v = pair.f_at(t);
      if (v < worst) { worst = v; c.worst_witness_re = t; }
    }
    c.worst_value = worst;
    c.pass = worst >= -tol;
    rep.checks.push_back(c);
  }
  {
    CheckResult reF{"ReF_nonnegative_right_halfplane", true, 0.0, 0.0, 1e300};
    CheckResult dec{"transform_decay_bound", true, 0.0, 0.0, -1e300};
    for (int i = 0; i < grid.halfplane_points; ++i) {
      // deterministic low-discrepancy coverage of the quarter rectangle,
      // mirrored into the lower half by conjugate symmetry of F
      double x = grid.max_re * std::fmod(0.618033988749895 * (i + 1), 1.0);
      double y = grid.max_im * (2.0 * std::fmod(0.754877666246693 * (i + 1), 1.0) - 1.0);
      std::complex<double> z{x, y};
      auto Fv = laplace_eval(pair, z, cfg);
      double lo_re = Fv.re.value - Fv.re.radius;
      if (lo_re < reF.worst_value) {
        reF.worst_value = lo_re;
        reF.worst_witness_re = x;
        reF.worst_witness_im = y;
      }
      double az = std::abs(z);
      if (az > 1e-3) {
        std::complex<double> F0{Fv.re.value, Fv.im.value};
        F0 -= pair.f0 / z;
        double excess = std::abs(F0) - pair.c_f / (az * az);
        if (excess > dec.worst_value) {
          dec.worst_value = excess;
          dec.worst_witness_re = x;
          dec.worst_witness_im = y;
        }
      }
    }
    reF.pass = reF.worst_value >= -tol;
    dec.pass = dec.worst_value <= tol;
    rep.checks.push_back(reF);
    rep.checks.push_back(dec);
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace zetax

#endif  // ZETAX_LAPLACE_HPP

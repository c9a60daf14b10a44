// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Multiprecision special-function kernel with certified error bounds:
// zeta on the real axis (Euler-Maclaurin with analytic remainder), its
// logarithmic derivative, digamma/trigamma (argument shift plus
// asymptotic series with Bernoulli-term remainder), the inverse-square
// lattice sum S(x,y), and the Stirling deviation bounds.

#ifndef ZETAX_NUMERICS_HPP
#define ZETAX_NUMERICS_HPP

#include "zetax/certified.hpp"
#include "zetax/detail/interval.hpp"
#include "zetax/detail/precision.hpp"

#include <boost/math/special_functions/factorials.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

namespace zetax {

namespace detail {

template <class Fn>
auto dispatch_digits(int digits, Fn&& fn) {
  if (digits <= 30) return fn(std::integral_constant<unsigned, 30>{});
  return fn(std::integral_constant<unsigned, 60>{});
}

template <class R>
struct ZetaPair {
  IReal<R> zeta;    // zeta(sigma)
  IReal<R> dzeta;   // zeta'(sigma)
};

// Euler-Maclaurin evaluation of zeta and zeta' at real sigma > 1.
// The value remainder is bounded by the first omitted Bernoulli term;
// the derivative remainder by a Cauchy bound on a circle of radius
// min(1/2, (sigma-1)/2) around sigma, on which the complex
// Euler-Maclaurin remainder bound applies.
template <class R>
ZetaPair<R> zeta_em(const R& sigma, const R& tail_target) {
  using std::abs; using std::pow; using std::log; using std::min;
  if (!(sigma > 1)) throw std::domain_error("zeta_em: requires sigma > 1");
  const int N = 40;
  const R logN = log(R(N));

  R val(0), dval(0);
  for (int n = 1; n < N; ++n) {
    R t = pow(R(n), -sigma);
    val += t;
    dval -= log(R(n)) * t;
  }
  R tailN = pow(R(N), 1 - sigma) / (sigma - 1);
  val += tailN;
  dval -= tailN * (logN + 1 / (sigma - 1));
  R half = pow(R(N), -sigma) / 2;
  val += half;
  dval -= logN * half;

  int M = 0;
  R poch(1), harm(0), rem_val(0);
  for (int k = 1; k <= 60; ++k) {
    // pochhammer (sigma)_{2k-1} and its log-derivative sum
    poch *= (k == 1) ? sigma : (sigma + (2 * k - 3)) * (sigma + (2 * k - 2));
    if (k == 1) harm = 1 / sigma;
    else harm += 1 / (sigma + (2 * k - 3)) + 1 / (sigma + (2 * k - 2));
    R term = boost::math::bernoulli_b2n<R>(k) /
             boost::math::factorial<R>(2 * k) * poch * pow(R(N), -sigma - 2 * k + 1);
    val += term;
    dval += term * (harm - logN);
    M = k;
    // first omitted term bounds the value remainder for real sigma
    R next = abs(boost::math::bernoulli_b2n<R>(k + 1)) /
             boost::math::factorial<R>(2 * k + 2) * poch *
             (sigma + (2 * k - 1)) * (sigma + 2 * k) * pow(R(N), -sigma - 2 * k - 1);
    rem_val = next;
    if (next < tail_target / 8) break;
  }

  // Cauchy bound for the derivative remainder
  R r = min(R(1) / 2, (sigma - 1) / 2);
  R sc = sigma - r;
  R pmax(1);
  for (int j = 0; j <= 2 * M; ++j) pmax *= sigma + r + j;
  R remC = abs(boost::math::bernoulli_b2n<R>(M + 1)) /
           boost::math::factorial<R>(2 * M + 2) * pmax * pow(R(N), -sc - 2 * M - 1) *
           ((sigma + r + 2 * M + 1) / (sc + 2 * M + 1));
  R rem_der = remC / r;

  ZetaPair<R> out;
  out.zeta = IReal<R>(val, rem_val + rounding_slack<R>(val) * (N + 2 * M));
  out.dzeta = IReal<R>(dval, rem_der + rounding_slack<R>(dval) * (N + 2 * M));
  return out;
}

template <class R>
struct CxI {
  Cx<R> v;
  R r;  // radius on the modulus of the error
};

// digamma by recurrence shift into Re(w) >= W followed by the Bernoulli
// asymptotic series; the remainder is the first omitted term times a
// sec(arg/2) envelope factor.
template <class R>
CxI<R> digamma_cx(Cx<R> z, const R& target) {
  using std::abs; using std::floor; using std::log10; using std::cos; using std::pow;
  if (z.im == 0 && z.re <= 0 && z.re == floor(z.re))
    throw std::domain_error("digamma: pole at non-positive integer");

  const R eps = machine_eps<R>();
  const R W = std::max(R(10), -log10(eps) * R(1.2));
  Cx<R> acc{};
  long shifts = 0;
  while (z.re < W) {
    acc -= Cx<R>(R(1)) / z;
    z.re += 1;
    ++shifts;
  }

  Cx<R> w2 = z * z;
  Cx<R> res = detail::log(z) - Cx<R>(R(1)) / (2 * z);
  Cx<R> wpow = w2;  // w^{2k}
  R rem(0);
  R prev_mag(0);
  for (int k = 1; k <= 200; ++k) {
    Cx<R> term = Cx<R>(boost::math::bernoulli_b2n<R>(k) / (2 * k)) / wpow;
    R mag = detail::abs(term);
    if (k > 1 && mag > prev_mag) { rem = mag; break; }  // divergence onset
    res -= term;
    prev_mag = mag;
    R nmag = abs(boost::math::bernoulli_b2n<R>(k + 1)) / (2 * k + 2) /
             pow(detail::abs(z), R(2 * k + 2));
    rem = nmag;
    if (nmag < target / 8) break;
    wpow = wpow * w2;
  }
  // the truncation error can equal the first omitted term to leading
  // order, so double it for margin on top of the arg envelope
  R envelope = 2 * pow(1 / cos(detail::arg(z) / 2), R(4));
  CxI<R> out;
  out.v = res + acc;
  out.r = rem * envelope +
          rounding_slack<R>(detail::abs(out.v) + detail::abs(acc)) * R(shifts + 64);
  return out;
}

// trigamma at real x > 0; same shift + asymptotic scheme, all terms
// positive so the first omitted term bounds the remainder.
template <class R>
IReal<R> trigamma_real(R x, const R& target) {
  using std::abs; using std::log10; using std::pow;
  if (!(x > 0)) throw std::domain_error("trigamma: requires x > 0");
  const R eps = machine_eps<R>();
  const R W = std::max(R(10), -log10(eps) * R(1.2));
  R acc(0);
  long shifts = 0;
  while (x < W) {
    acc += 1 / (x * x);
    x += 1;
    ++shifts;
  }
  R res = 1 / x + 1 / (2 * x * x);
  R rem(0);
  for (int k = 1; k <= 200; ++k) {
    R term = boost::math::bernoulli_b2n<R>(k) * pow(x, R(-2 * k - 1));
    res += term;
    rem = abs(boost::math::bernoulli_b2n<R>(k + 1)) * pow(x, R(-2 * k - 3));
    if (rem < target / 8) break;
  }
  R val = res + acc;
  return IReal<R>(val, rem + rounding_slack<R>(val) * R(shifts + 64));
}

// S(x, y) = sum_{n>=0} 1/((x+n)^2 + y^2), via the digamma reflection
// S = Im(psi(x+iy))/y for y != 0 and trigamma for y = 0.
template <class R>
IReal<R> s_series(const R& x, const R& y, const R& target) {
  using std::abs;
  if (!(x > 0)) throw std::domain_error("S_series: requires x > 0");
  if (y == 0) return trigamma_real<R>(x, target);
  CxI<R> d = digamma_cx<R>(Cx<R>(x, abs(y)), target);
  R val = d.v.im / abs(y);
  return IReal<R>(val, d.r / abs(y) + rounding_slack<R>(val));
}

template <class R>
IReal<R> stirling_dev_half(const R& T) {
  auto t = IReal<R>::exact(T);
  auto one = IReal<R>::exact(R(1));
  return t / R(4) * ilog(one + one / (R(4) * t * t)) +
         iatan(R(2) * t) / R(4) +
         one / (R(3) * isqrt(one / R(4) + t * t));
}

template <class R>
IReal<R> stirling_dev_full(const R& T) {
  auto t = IReal<R>::exact(T);
  auto one = IReal<R>::exact(R(1));
  return t / R(2) * ilog(one + one / (R(4) * t * t)) +
         one / (R(6) * isqrt(one / R(4) + t * t));
}

}  // namespace detail

// ---------------------------------------------------------------------
// Public, double-facing surface.  All functions are pure.

inline CertifiedReal zeta_real(double sigma, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(sigma > 1.0)) throw std::domain_error("zeta_real: requires sigma > 1");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return detail::zeta_em<R>(R(sigma), R(cfg.quadrature_target)).zeta.certify();
  });
}

/// zeta'(sigma)/zeta(sigma) for real sigma > 1.
inline CertifiedReal zeta_log_deriv(double sigma, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(sigma > 1.0)) throw std::domain_error("zeta_log_deriv: requires sigma > 1");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    auto p = detail::zeta_em<R>(R(sigma), R(cfg.quadrature_target));
    return (p.dzeta / p.zeta).certify();
  });
}

inline CertifiedComplex digamma(std::complex<double> z, const ToleranceConfig& cfg) {
  cfg.validate();
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    auto d = detail::digamma_cx<R>({R(z.real()), R(z.imag())}, R(cfg.quadrature_target));
    CertifiedReal re = detail::IReal<R>(d.v.re, d.r).certify();
    CertifiedReal im = detail::IReal<R>(d.v.im, d.r).certify();
    return CertifiedComplex{re, im};
  });
}

inline CertifiedReal S_series(double x, double y, const ToleranceConfig& cfg) {
  cfg.validate();
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return detail::s_series<R>(R(x), R(y), R(cfg.quadrature_target)).certify();
  });
}

enum class StirlingKind { half_arg, full_arg };

/// Deviation bound between Im log Gamma along the counting contour and
/// its leading Stirling term; both variants are decreasing for T >= 1.
inline CertifiedReal stirling_deviation(double T, StirlingKind which,
                                        const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(T >= 1.0)) throw std::domain_error("stirling_deviation: requires T >= 1");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    return which == StirlingKind::half_arg
               ? detail::stirling_dev_half<R>(R(T)).certify()
               : detail::stirling_dev_full<R>(R(T)).certify();
  });
}

}  // namespace zetax

#endif  // ZETAX_NUMERICS_HPP

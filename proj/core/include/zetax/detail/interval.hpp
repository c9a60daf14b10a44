// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ZETAX_DETAIL_INTERVAL_HPP
#define ZETAX_DETAIL_INTERVAL_HPP

#include "zetax/certified.hpp"
#include "zetax/detail/precision.hpp"

#include <cmath>

namespace zetax::detail {

// First-order midpoint/radius arithmetic.  Each operation widens the
// radius by the propagated first-order error plus a rounding slack;
// this is not directed-rounding interval arithmetic, which the isolated
// constants computed here do not require.
template <class R>
struct IReal {
  R v{};  // midpoint
  R r{};  // radius >= 0

  IReal() = default;
  IReal(R value) : v(std::move(value)), r(rounding_slack<R>(v)) {}
  IReal(R value, R radius) : v(std::move(value)), r(std::move(radius)) {}

  static IReal exact(R value) { return IReal(std::move(value), R(0)); }

  CertifiedReal certify() const {
    double dv = static_cast<double>(v);
    // widen for the double conversion itself
    double dr = static_cast<double>(r) + std::abs(dv) * 1e-15 + 1e-300;
    return {dv, dr};
  }

  friend IReal operator+(const IReal& a, const IReal& b) {
    R v = a.v + b.v;
    return {v, a.r + b.r + rounding_slack<R>(v)};
  }
  friend IReal operator-(const IReal& a, const IReal& b) {
    R v = a.v - b.v;
    return {v, a.r + b.r + rounding_slack<R>(v)};
  }
  friend IReal operator-(const IReal& a) { return {-a.v, a.r}; }
  friend IReal operator*(const IReal& a, const IReal& b) {
    using std::abs;
    R v = a.v * b.v;
    return {v, abs(a.v) * b.r + abs(b.v) * a.r + a.r * b.r + rounding_slack<R>(v)};
  }
  friend IReal operator/(const IReal& a, const IReal& b) {
    using std::abs;
    R v = a.v / b.v;
    R bl = abs(b.v) - b.r;  // caller must keep denominators away from 0
    R rr = (a.r + abs(v) * b.r) / bl + rounding_slack<R>(v);
    return {v, rr};
  }

  friend IReal operator+(const IReal& a, const R& b) { return a + IReal::exact(b); }
  friend IReal operator+(const R& a, const IReal& b) { return IReal::exact(a) + b; }
  friend IReal operator-(const IReal& a, const R& b) { return a - IReal::exact(b); }
  friend IReal operator-(const R& a, const IReal& b) { return IReal::exact(a) - b; }
  friend IReal operator*(const IReal& a, const R& b) { return a * IReal::exact(b); }
  friend IReal operator*(const R& a, const IReal& b) { return IReal::exact(a) * b; }
  friend IReal operator/(const IReal& a, const R& b) { return a / IReal::exact(b); }
  friend IReal operator/(const R& a, const IReal& b) { return IReal::exact(a) / b; }
};

// Monotone elementary functions: first-order propagation with the
// derivative bounded over the interval.

template <class R>
IReal<R> iexp(const IReal<R>& x) {
  using std::exp;
  R v = exp(x.v);
  R dmax = exp(x.v + x.r);
  return {v, dmax * x.r + rounding_slack<R>(v)};
}

template <class R>
IReal<R> ilog(const IReal<R>& x) {
  using std::log;
  R v = log(x.v);
  R lo = x.v - x.r;  // requires lo > 0
  return {v, x.r / lo + rounding_slack<R>(v)};
}

template <class R>
IReal<R> isqrt(const IReal<R>& x) {
  using std::sqrt;
  R v = sqrt(x.v);
  R lo = x.v - x.r;
  return {v, x.r / (2 * sqrt(lo)) + rounding_slack<R>(v)};
}

template <class R>
IReal<R> iatan(const IReal<R>& x) {
  using std::atan;
  R v = atan(x.v);
  return {v, x.r + rounding_slack<R>(v)};  // |atan'| <= 1
}

template <class R>
IReal<R> isin(const IReal<R>& x) {
  using std::sin;
  R v = sin(x.v);
  return {v, x.r + rounding_slack<R>(v)};
}

template <class R>
IReal<R> icos(const IReal<R>& x) {
  using std::cos;
  R v = cos(x.v);
  return {v, x.r + rounding_slack<R>(v)};
}

template <class R>
IReal<R> iabs(const IReal<R>& x) {
  using std::abs;
  return {abs(x.v), x.r};
}

}  // namespace zetax::detail

#endif  // ZETAX_DETAIL_INTERVAL_HPP

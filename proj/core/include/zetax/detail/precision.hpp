// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ZETAX_DETAIL_PRECISION_HPP
#define ZETAX_DETAIL_PRECISION_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <stdexcept>
#include <utility>

namespace zetax {

/// Working real type with D decimal digits of precision.
template <unsigned D>
using mpreal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<D>>;

namespace detail {

template <class R>
R pi_v() { return boost::math::constants::pi<R>(); }

template <class R>
R euler_v() { return boost::math::constants::euler<R>(); }

template <class R>
R machine_eps() { return std::numeric_limits<R>::epsilon(); }

// Generous per-result rounding slack; keeps intervals nested when the
// same computation is repeated at doubled precision.
template <class R>
R rounding_slack(const R& magnitude) {
  using std::abs;
  return (abs(magnitude) + R(1)) * machine_eps<R>() * 1024;
}

/// Minimal complex type over an arbitrary real; std::complex is only
/// specified for float/double/long double.
template <class R>
struct Cx {
  R re{}, im{};

  Cx() = default;
  Cx(R r) : re(std::move(r)) {}
  Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const R& a, const Cx& b) { return {a * b.re, a * b.im}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Cx operator/(const Cx& a, const R& b) { return {a.re / b, a.im / b}; }

  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
};

template <class R>
R abs(const Cx<R>& z) {
  using std::sqrt;
  return sqrt(z.re * z.re + z.im * z.im);
}

template <class R>
R arg(const Cx<R>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class R>
Cx<R> exp(const Cx<R>& z) {
  using std::exp; using std::sin; using std::cos;
  R m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

template <class R>
Cx<R> log(const Cx<R>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

}  // namespace detail
}  // namespace zetax

#endif  // ZETAX_DETAIL_PRECISION_HPP

// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ZETAX_DETAIL_ROOTS_HPP
#define ZETAX_DETAIL_ROOTS_HPP

#include "zetax/detail/interval.hpp"

#include <stdexcept>
#include <utility>

namespace zetax::detail {

struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bisection on a sign-changing bracket, with a final secant polish.
// Returns the root as midpoint +/- bracket half-width, so the radius is
// certified by the sign change alone.
template <class R, class F>
IReal<R> bracketed_root(F&& f, R lo, R hi, const R& target) {
  R flo = f(lo), fhi = f(hi);
  if (flo == 0) return {lo, R(0)};
  if (fhi == 0) return {hi, R(0)};
  if ((flo < 0) == (fhi < 0))
    throw NoRootError("bracketed_root: no sign change on bracket");
  bool rising = flo < 0;
  while (hi - lo > target) {
    R mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;  // bracket at precision floor
    R fm = f(mid);
    if (fm == 0) { lo = hi = mid; break; }
    if ((fm < 0) == rising) { lo = mid; flo = fm; } else { hi = mid; fhi = fm; }
  }
  return {(lo + hi) / 2, (hi - lo) / 2};
}

enum class Extremum { minimum, maximum };

// Golden-section search on [a, b]; assumes unimodality (callers that
// cannot guarantee it scan the interval first).  Returns (x*, f(x*)).
template <class R, class F>
std::pair<R, R> golden_section(F&& f, R a, R b, const R& xtol, Extremum kind) {
  using std::sqrt;
  const R invphi = (sqrt(R(5)) - 1) / 2;
  auto better = [&](const R& u, const R& v) {
    return kind == Extremum::minimum ? u < v : u > v;
  };
  R x1 = b - invphi * (b - a);
  R x2 = a + invphi * (b - a);
  R f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (better(f1, f2)) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  R x = (a + b) / 2;
  return {x, f(x)};
}

}  // namespace zetax::detail

#endif  // ZETAX_DETAIL_ROOTS_HPP

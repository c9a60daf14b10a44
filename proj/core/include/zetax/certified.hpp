// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ZETAX_CERTIFIED_HPP
#define ZETAX_CERTIFIED_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetax {

/// A real number together with an absolute error radius.  Every constant
/// exported by this library flows through this type; the contract is
///   true value ∈ [value - radius, value + radius],
/// and recomputing at higher working precision yields an interval
/// contained in the lower-precision one.
struct CertifiedReal {
  double value = 0.0;
  double radius = 0.0;

  double lo() const { return value - radius; }
  double hi() const { return value + radius; }

  bool contains(double x) const { return lo() <= x && x <= hi(); }
  bool contains(const CertifiedReal& o) const {
    return lo() <= o.lo() && o.hi() <= hi();
  }
};

/// Certified value of a complex quantity, component-wise.
struct CertifiedComplex {
  CertifiedReal re, im;
};

struct ToleranceConfig {
  int working_digits = 30;        // significant decimal digits
  double quadrature_target = 1e-12;  // absolute
  double root_target = 1e-12;        // absolute
  double epsilon = 1e-2;          // slack parameter for the digamma bounds
  double delta = 1e-6;            // strip-widening parameter

  void validate() const {
    if (working_digits < 15)
      throw std::domain_error("working_digits must be >= 15");
    if (!(epsilon > 0.0 && epsilon <= 1e-2))
      throw std::domain_error("epsilon must lie in (0, 1e-2]");
    if (!(delta > 0.0 && delta < 1.0))
      throw std::domain_error("delta must lie in (0, 1)");
    if (!(quadrature_target > 0.0) || !(root_target > 0.0))
      throw std::domain_error("tolerance targets must be positive");
  }
};

}  // namespace zetax

#endif  // ZETAX_CERTIFIED_HPP

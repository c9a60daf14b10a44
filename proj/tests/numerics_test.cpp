// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetax;

namespace {
const ToleranceConfig cfg{};

bool contains(const CertifiedReal& c, double truth) {
  return c.lo() <= truth && truth <= c.hi();
}

// intervals computed at two precisions must be mutually consistent
bool consistent(const CertifiedReal& a, const CertifiedReal& b) {
  return std::abs(a.value - b.value) <= a.radius + b.radius;
}
}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("zeta on the real axis") {
  // reference values from an independent 50-digit evaluation
  CHECK(contains(zeta_real(1.5, cfg), 2.6123753486854883));
  CHECK(contains(zeta_real(2.0, cfg), M_PI * M_PI / 6));
  CHECK(contains(zeta_real(3.0, cfg), 1.2020569031595943));
  CHECK(zeta_real(1.5, cfg).radius < 1e-12);
}

TEST_CASE("zeta logarithmic derivative") {
  CHECK(contains(zeta_log_deriv(2.0, cfg), -0.56996099309453297));
  double golden = (1 + std::sqrt(5.0)) / 2;
  CHECK(contains(zeta_log_deriv(golden, cfg), -1.1399158683590795));
}

TEST_CASE("zeta domain errors") {
  CHECK_THROWS_AS(zeta_real(1.0, cfg), std::domain_error);
  CHECK_THROWS_AS(zeta_real(0.5, cfg), std::domain_error);
  ToleranceConfig bad = cfg;
  bad.quadrature_target = -1.0;
  CHECK_THROWS_AS(zeta_real(2.0, bad), std::domain_error);
}

TEST_CASE("digamma") {
  auto d = digamma({1.0, 0.0}, cfg);
  CHECK(contains(d.re, -0.57721566490153286));
  auto c = digamma({0.5, 0.5}, cfg);
  CHECK(contains(c.re, -0.86810736264547731));
  CHECK(contains(c.im, 1.4406595199775146));
  CHECK_THROWS_AS(digamma({0.0, 0.0}, cfg), std::domain_error);
  CHECK_THROWS_AS(digamma({-3.0, 0.0}, cfg), std::domain_error);
}

TEST_CASE("inverse-square series S") {
  CHECK(contains(S_series(1.0, 0.0, cfg), M_PI * M_PI / 6));
  CHECK(contains(S_series(0.5, 0.5, cfg), 2.8813190399550293));
  // S decreases in x and in |y|
  CHECK(S_series(0.5, 0.5, cfg).value > S_series(1.5, 0.5, cfg).value);
  CHECK(S_series(0.5, 0.5, cfg).value > S_series(0.5, 1.5, cfg).value);
  CHECK_THROWS_AS(S_series(0.0, 0.5, cfg), std::domain_error);
}

TEST_CASE("argument-variation deviation bounds") {
  auto h1 = stirling_deviation(1.0, StirlingKind::half_arg, cfg);
  auto f1 = stirling_deviation(1.0, StirlingKind::full_arg, cfg);
  CHECK(contains(h1, 0.63071546427704704));
  CHECK(contains(f1, 0.26064297415709086));
  CHECK(h1.hi() <= 0.630716);
  CHECK(f1.hi() <= 0.260643);
  // both decrease in T
  CHECK(stirling_deviation(2.0, StirlingKind::half_arg, cfg).value < h1.value);
  CHECK(stirling_deviation(2.0, StirlingKind::full_arg, cfg).value < f1.value);
  CHECK_THROWS_AS(stirling_deviation(0.5, StirlingKind::half_arg, cfg),
                  std::domain_error);
}

TEST_CASE("precision doubling keeps intervals consistent") {
  ToleranceConfig hi = cfg;
  hi.working_digits = 60;
  CHECK(consistent(zeta_real(1.5, cfg), zeta_real(1.5, hi)));
  CHECK(consistent(zeta_log_deriv(2.0, cfg), zeta_log_deriv(2.0, hi)));
  CHECK(consistent(digamma({0.5, 0.5}, cfg).re, digamma({0.5, 0.5}, hi).re));
  CHECK(consistent(S_series(0.5, 0.5, cfg), S_series(0.5, 0.5, hi)));
  CHECK(consistent(stirling_deviation(1.0, StirlingKind::half_arg, cfg),
                   stirling_deviation(1.0, StirlingKind::half_arg, hi)));
}

}  // TEST_SUITE

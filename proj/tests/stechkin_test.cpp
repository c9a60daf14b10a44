// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/stechkin.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetax;

namespace {
const ToleranceConfig cfg{};

bool contains(const CertifiedReal& c, double truth) {
  return c.lo() <= truth && truth <= c.hi();
}

bool consistent(const CertifiedReal& a, const CertifiedReal& b) {
  return std::abs(a.value - b.value) <= a.radius + b.radius;
}
}  // namespace

TEST_SUITE("stechkin") {

TEST_CASE("base constants") {
  auto c = StechkinConstants::make(cfg);
  CHECK(c.kappa == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
  CHECK(c.a0 * c.b0 == doctest::Approx(1.0).epsilon(1e-14));
  // reference from an independent 50-digit evaluation
  CHECK(contains(c.phi, 0.27639320225002103));
}

TEST_CASE("g and its certified minimum") {
  auto c = StechkinConstants::make(cfg);
  // g is even and positive at the origin
  CHECK(g_eval(c.a0, c.b0, c.c0, 0.7, c) ==
        doctest::Approx(g_eval(c.a0, c.b0, c.c0, -0.7, c)).epsilon(1e-14));
  // the three terms cancel exactly at the origin
  CHECK(g_eval(c.a0, c.b0, c.c0, 0.0, c) == doctest::Approx(0.0));
  CHECK_THROWS_AS(g_eval(-1.0, c.b0, c.c0, 0.0, c), std::domain_error);

  auto [beta, gmin] = g_min(c, cfg);
  CHECK(contains(beta, 0.67201634128626414));
  CHECK(contains(gmin, -0.12158510687211830));
  // the root really minimizes: nearby samples are larger
  CHECK(g_eval(c.a0, c.b0, c.c0, beta.value - 1e-3, c) > gmin.value);
  CHECK(g_eval(c.a0, c.b0, c.c0, beta.value + 1e-3, c) > gmin.value);
}

TEST_CASE("perturbation margin") {
  auto c = StechkinConstants::make(cfg);
  auto m = g_perturb_margin(0.01, c, cfg);
  CHECK(contains(m, 4.9335937992283199));
  CHECK(m.hi() < 5.0);
  CHECK_THROWS_AS(g_perturb_margin(0.0, c, cfg), std::domain_error);
  CHECK_THROWS_AS(g_perturb_margin(0.1, c, cfg), std::domain_error);
}

TEST_CASE("digamma differences") {
  CHECK(contains(f_a(0, 1.0, 1.0, cfg), -0.31294856750587291));
  CHECK(contains(f_a(1, 1.0, 1.0, cfg), -0.15836121701171951));
  CHECK_THROWS_AS(f_a(2, 1.0, 1.0, cfg), std::domain_error);
  CHECK_THROWS_AS(f_a(0, 0.5, 1.0, cfg), std::domain_error);

  CHECK(contains(C_a(0, 0.01, cfg), -0.30393159370399924));
  CHECK(contains(C_a(1, 0.01, cfg), -0.15375836874383036));
  CHECK(contains(C_a(0, 0.15, cfg), -0.17706026503969233));
  CHECK(contains(C_a(1, 0.15, cfg), -0.08895532648373111));
  // C_a(0) reduces to f_a(1,1)
  CHECK(contains(C_a(0, 0.0, cfg), -0.31294856750587291));
  // increasing in eps
  CHECK(C_a(0, 0.15, cfg).value > C_a(0, 0.01, cfg).value);
}

TEST_CASE("assembled budget") {
  auto b = theorem2_budget(0.01, cfg);
  CHECK(contains(b.gamma_diff, -0.54524054008513155));
  CHECK(contains(b.zeta_term, 0.50978587405632059));
  CHECK(contains(b.nk_coeff, -0.03545466602881097));
  CHECK(contains(b.additive, 0.12158510687211830));
  CHECK(b.gamma_diff.hi() < -0.545240);
  CHECK(b.zeta_term.hi() <= 0.509786);
  CHECK(b.nk_coeff.hi() <= -0.035454);
  CHECK_THROWS_AS(theorem2_budget(0.5, cfg), std::domain_error);
}

TEST_CASE("precision doubling keeps intervals consistent") {
  ToleranceConfig hi = cfg;
  hi.working_digits = 60;
  auto c30 = StechkinConstants::make(cfg);
  auto c60 = StechkinConstants::make(hi);
  CHECK(consistent(c30.phi, c60.phi));
  auto [b30, m30] = g_min(c30, cfg);
  auto [b60, m60] = g_min(c60, hi);
  CHECK(consistent(b30, b60));
  CHECK(consistent(m30, m60));
  CHECK(consistent(f_a(0, 1.0, 1.0, cfg), f_a(0, 1.0, 1.0, hi)));
  auto lo = theorem2_budget(0.01, cfg);
  auto up = theorem2_budget(0.01, hi);
  CHECK(consistent(lo.nk_coeff, up.nk_coeff));
}

}  // TEST_SUITE

// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/repulsion.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetax;

namespace {
const ToleranceConfig cfg{};

bool contains(const CertifiedReal& c, double truth) {
  return c.lo() <= truth && truth <= c.hi();
}
}  // namespace

TEST_SUITE("repulsion") {

TEST_CASE("h evaluation and monotonicity") {
  auto [hp, pair] = hb_pair(0.543, cfg);
  auto phi = StechkinConstants::make(cfg).phi;
  // h < 0 at lambda' = 0, grows with lambda', and vanishes at the root
  auto h0 = h_eval(pair, 1e-6, 0.0, phi, cfg);
  CHECK(h0.hi() < 0.0);
  auto h5 = h_eval(pair, 1e-6, 5.0, phi, cfg);
  CHECK(h5.value > h0.value);
  auto hroot = h_eval(pair, 1e-6, 12.3982325046, phi, cfg);
  CHECK(std::abs(hroot.value) < 1e-6);
  // larger lambda1 strengthens the damping factor, raising h
  CHECK(h_eval(pair, 0.05, 5.0, phi, cfg).value > h5.value);
  CHECK_THROWS_AS(h_eval(pair, -1.0, 1.0, phi, cfg), std::domain_error);
}

TEST_CASE("certified roots at tabulated parameters") {
  // references from an independent 50-digit evaluation
  auto r1 = solve_lambda_prime(1e-6, 0.543, cfg);
  CHECK(r1.value == doctest::Approx(12.3982325).epsilon(1e-8));
  CHECK(r1.radius < 1e-9);
  CHECK(solve_lambda_prime(0.01, 0.477, cfg).value ==
        doctest::Approx(3.818227966).epsilon(1e-8));
  CHECK(solve_lambda_prime(1.0 / 12.74, 0.413, cfg).value ==
        doctest::Approx(1.665951578).epsilon(1e-8));
  // a deliberately sub-optimal lambda gives a smaller root
  CHECK(solve_lambda_prime(0.01, 0.40, cfg).value ==
        doctest::Approx(3.5312).epsilon(1e-3));
  CHECK_THROWS_AS(solve_lambda_prime(0.2, 0.4, cfg), std::domain_error);
  CHECK_THROWS_AS(solve_lambda_prime(0.01, 0.0, cfg), std::domain_error);
}

TEST_CASE("reference table reproduction") {
  auto t = table1(cfg);
  REQUIRE(t.rows.size() == 23);
  CHECK(t.all_match);
  for (const auto& r : t.rows) {
    CHECK_MESSAGE(r.lambda_prime_matches, "lambda' mismatch at b=", r.b);
    CHECK_MESSAGE(r.x0_matches, "x0 mismatch at b=", r.b);
  }
  CHECK(t.max_x0 <= 1.8922);
  CHECK(t.rows.front().lambda_prime.value == doctest::Approx(12.3982).epsilon(1e-4));
  CHECK(t.rows.back().lambda_prime.value == doctest::Approx(1.6659).epsilon(1e-4));

  // the piecewise coefficient audit over the recomputed rows
  auto g = global_coefficient(t.rows, cfg);
  REQUIRE(g.ratios.size() == 22);
  CHECK(g.global_min.value == doctest::Approx(0.652333).epsilon(1e-4));
  CHECK(g.last_interval_ratio == doctest::Approx(0.653046).epsilon(1e-4));
  CHECK(g.ratios_alt.back().ratio.value == doctest::Approx(0.654663).epsilon(1e-4));
  CHECK_FALSE(g.matches_reference_claim);
  CHECK_FALSE(g.note.empty());
  CHECK(g.small_lambda_handoff == doctest::Approx(0.9045));
  // the handoff coefficient never binds
  CHECK(g.small_lambda_handoff > g.global_min.value);
}

TEST_CASE("lambda optimizer") {
  auto [lam, lp] = optimize_lambda(0.01, cfg);
  CHECK(lam == doctest::Approx(0.47737).epsilon(5e-3));
  CHECK(lp.value == doctest::Approx(3.818238).epsilon(1e-4));
  // the optimized root is at least the tabulated one (up to solver tol)
  CHECK(lp.value >= 3.8182 - 1e-3);
  CHECK_THROWS_AS(optimize_lambda(0.5, cfg), std::domain_error);
}

TEST_CASE("small-lambda triangular regime") {
  auto s = small_lambda_case(1e-6, 12.74, cfg);
  CHECK(contains(s.coefficient_exact, 0.90450686091919078));
  CHECK(s.coefficient == doctest::Approx(0.9045));
  CHECK(s.lambda_prime_floor == doctest::Approx(4 * std::exp(1.0)).epsilon(1e-14));
  CHECK(contains(s.lambda1_threshold, 6.0156458760043083e-6));
  CHECK(s.lambda1_threshold.radius < 1e-11);
  CHECK(contains(s.x0_cap, 13.845574809000084));
  CHECK_THROWS_AS(small_lambda_case(1e-3, 12.74, cfg), std::domain_error);
  CHECK_THROWS_AS(small_lambda_case(1e-7, -1.0, cfg), std::domain_error);
}

TEST_CASE("global coefficient input validation") {
  std::vector<RepulsionRow> bad(1);
  CHECK_THROWS_AS(global_coefficient(bad, cfg), std::domain_error);
  std::vector<RepulsionRow> unsorted(2);
  unsorted[0].b = 0.01;
  unsorted[1].b = 0.001;
  CHECK_THROWS_AS(global_coefficient(unsorted, cfg), std::domain_error);
}

}  // TEST_SUITE

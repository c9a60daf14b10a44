// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/zerocount.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetax;

namespace {
const ToleranceConfig cfg{};

bool contains(const CertifiedReal& c, double truth) {
  return c.lo() <= truth && truth <= c.hi();
}
}  // namespace

TEST_SUITE("zerocount") {

TEST_CASE("window constants") {
  // references from an independent 50-digit evaluation
  CHECK(contains(c1_of_eta(0.5, cfg), 0.91844818852657034));
  CHECK(contains(c1_of_eta(1e-12, cfg), 0.45922409426420362));
  CHECK(contains(c2_of_eta(0.5, cfg), 5.3309002929230594));
  CHECK(contains(c2_of_eta(0.25, cfg), 8.4700378467396438));
  CHECK(contains(g_cap(cfg), 7.6226995023418896));

  auto ec = eta_constants(0.5, cfg);
  CHECK(ec.b1.value == doctest::Approx(4.692582).epsilon(1e-5));
  CHECK(ec.b2.value == doctest::Approx(0.267481).epsilon(1e-4));
  CHECK(ec.b3.value == doctest::Approx(0.268089).epsilon(1e-4));
}

TEST_CASE("c2 diverges as eta -> 0") {
  CHECK(c2_of_eta(1e-4, cfg).value > c2_of_eta(0.1, cfg).value);
  CHECK(c2_of_eta(1e-6, cfg).value > c2_of_eta(1e-4, cfg).value);
}

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(c1_of_eta(0.0, cfg), std::domain_error);
  CHECK_THROWS_AS(c1_of_eta(0.6, cfg), std::domain_error);
  CHECK_THROWS_AS(c2_of_eta(-0.1, cfg), std::domain_error);
  FieldParams bad{2, 1, 1, 1.0};  // r1 + 2 r2 = 3 != 2
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  FieldParams q{1, 1, 0, 0.0};
  CHECK_THROWS_AS(count_window(q, 0.5, 0.25, cfg), std::domain_error);
  CHECK_THROWS_AS(count_window(q, 10.0, 0.75, cfg), std::domain_error);
}

TEST_CASE("window evaluation") {
  FieldParams q5{2, 2, 0, std::log(5.0)};
  auto w = count_window(q5, 10.0, 0.25, cfg);
  CHECK(contains(w.main_term, 1.7152254446093459));
  CHECK(contains(w.error_bound, 28.843621858619989));
}

TEST_CASE("bound monotone in size parameters") {
  FieldParams a{2, 2, 0, 2.0}, b{2, 2, 0, 3.0};
  CHECK(count_window(b, 10.0, 0.25, cfg).error_bound.value >
        count_window(a, 10.0, 0.25, cfg).error_bound.value);
  CHECK(count_window(a, 20.0, 0.25, cfg).error_bound.value >
        count_window(a, 10.0, 0.25, cfg).error_bound.value);
}

TEST_CASE("eta optimizer") {
  FieldParams q{1, 1, 0, 0.0};
  auto [eta, w] = optimize_eta(q, 100.0, cfg);
  // no worse than fixed choices, up to the optimizer's endpoint tolerance
  CHECK(w.error_bound.value <=
        count_window(q, 100.0, 0.25, cfg).error_bound.value + 1e-6);
  CHECK(w.error_bound.value <=
        count_window(q, 100.0, 0.5, cfg).error_bound.value + 1e-6);
  // dense-scan references: the optimum sits at the right endpoint
  CHECK(eta == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(w.error_bound.value == doctest::Approx(17.18321001).epsilon(1e-7));

  FieldParams q5{2, 2, 0, std::log(5.0)};
  auto [eta5, w5] = optimize_eta(q5, 10.0, cfg);
  CHECK(eta5 == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(w5.error_bound.value == doctest::Approx(23.99229564).epsilon(1e-7));
}

TEST_CASE("degree-discriminant supremum") {
  auto mk = minkowski_c0(10000, cfg);
  CHECK(contains(mk.sup, 2.2144337865176244));
  CHECK(mk.argmax == 2);
  CHECK(mk.eventually_monotone);
  // the n = 2 term in closed form: 2 / log(pi^2/4)
  CHECK(mk.sup.value == doctest::Approx(2.0 / std::log(M_PI * M_PI / 4)));
  CHECK_THROWS_AS(minkowski_c0(1, cfg), std::domain_error);
}

}  // TEST_SUITE

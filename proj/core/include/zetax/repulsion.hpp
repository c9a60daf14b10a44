// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Zero-repulsion machinery: the functional
// h(l1, l') = 2F(-l') - 2F(l1 - l') - F(0) + 2 phi f(0), its certified
// root l'(b), the reference table reproduction, the lambda optimizer,
// the small-l1 triangular case, and the piecewise log(1/l1) coefficient
// audit.

#ifndef ZETAX_REPULSION_HPP
#define ZETAX_REPULSION_HPP

#include "zetax/laplace.hpp"
#include "zetax/stechkin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetax {

struct RepulsionConfig {
  double R = 12.74;        // zero-free-region constant
  CertifiedReal phi;       // (1 - 1/sqrt5)/2
  double epsilon = 1e-6;
  double delta = 1e-6;

  static RepulsionConfig make(const ToleranceConfig& cfg) {
    RepulsionConfig rc;
    rc.phi = StechkinConstants::make(cfg).phi;
    return rc;
  }
};

struct RepulsionRow {
  double b = 0.0;
  double lambda_b = 0.0;
  CertifiedReal lambda_prime;
  double log_inv_b = 0.0;
  double x0_b = 0.0;
  // reference values (truncated to 4 decimals) and the comparison
  double ref_lambda_prime = 0.0;
  double ref_x0 = 0.0;
  bool lambda_prime_matches = false;
  bool x0_matches = false;
};

struct Table1Result {
  std::vector<RepulsionRow> rows;
  bool all_match = false;
  double max_x0 = 0.0;
};

struct SmallLambdaCase {
  CertifiedReal coefficient_exact;  // 1/(4 phi + 2 eps)
  double coefficient = 0.0;         // truncated down to 4 decimals
  double lambda_prime_floor = 0.0;  // 4e
  CertifiedReal lambda1_threshold;  // exp(-4e / coefficient)
  CertifiedReal x0_cap;             // 4 phi + R + 2 eps
};

struct IntervalRatio {
  double b_lo = 0.0, b_hi = 0.0;
  CertifiedReal ratio;
};

struct GlobalCoefficient {
  std::vector<IntervalRatio> ratios;      // lambda'(b_hi) / log(1/b_lo)
  std::vector<IntervalRatio> ratios_alt;  // lambda'(b_hi) / log(1/b_hi)
  CertifiedReal global_min;               // over the left-endpoint ratios
  double small_lambda_handoff = 0.0;      // 0.9045, never the binding term
  double reference_claim = 0.6546;
  double last_interval_ratio = 0.0;       // the displayed-chain value
  bool matches_reference_claim = false;
  std::string note;
};

namespace detail {

// reference table: b, lambda_b, lambda'_b, log(1/b), x0(b); the numeric
// columns are truncated (not rounded) at the 4th decimal
struct Table1Ref {
  double b, lambda_b, lambda_prime, log_inv_b, x0;
};

inline const std::array<Table1Ref, 23>& table1_reference() {
  static const std::array<Table1Ref, 23> rows{{
      {1e-6, 0.543, 12.3982, 13.8155, 1.4391},
      {1e-5, 0.537, 10.3716, 11.5129, 1.4552},
      {1e-4, 0.526, 8.2848, 9.2103, 1.4856},
      {1e-3, 0.509, 6.1120, 6.9077, 1.5353},
      {0.005, 0.490, 4.5233, 5.2983, 1.5948},
      {0.01, 0.477, 3.8182, 4.6051, 1.6383},
      {0.02, 0.462, 3.1007, 3.9120, 1.6914},
      {0.03, 0.450, 2.6764, 3.5065, 1.7366},
      {0.04, 0.441, 2.3740, 3.2188, 1.7720},
      {0.05, 0.433, 2.1391, 2.9957, 1.8047},
      {0.055, 0.429, 2.0389, 2.9004, 1.8216},
      {0.06, 0.426, 1.9474, 2.8134, 1.8344},
      {0.065, 0.422, 1.8634, 2.7333, 1.8518},
      {0.07, 0.419, 1.7857, 2.6592, 1.8650},
      {0.071, 0.418, 1.7708, 2.6450, 1.8695},
      {0.072, 0.418, 1.7562, 2.6310, 1.8695},
      {0.073, 0.417, 1.7418, 2.6172, 1.8740},
      {0.074, 0.416, 1.7275, 2.6036, 1.8785},
      {0.075, 0.416, 1.7135, 2.5902, 1.8785},
      {0.076, 0.415, 1.6996, 2.5770, 1.8830},
      {0.077, 0.415, 1.6860, 2.5639, 1.8830},
      {0.078, 0.414, 1.6725, 2.5510, 1.8876},
      {1.0 / 12.74, 0.413, 1.6659, 2.5447, 1.8921},
  }};
  return rows;
}

inline double truncate4(double x) { return std::floor(x * 1e4) / 1e4; }

// h as a single integral, 2 * int f(t) e^{l't} (1 - e^{-l1 t}) dt
// - F(0) + 2 phi f(0); the integral form avoids the catastrophic
// cancellation of 2F(-l') - 2F(l1-l') when l1 is tiny.
template <unsigned D>
IReal<mpreal<D>> h_interval(const LaplacePair& pair, const mpreal<D>& lambda1,
                            const mpreal<D>& lambda_prime, const mpreal<D>& phi,
                            const mpreal<D>& quad_target) {
  using R = mpreal<D>;
  using std::exp;
  const auto& f = pair.f_mp<D>();
  auto integrand = [&](const R& t) {
    R damp = (lambda1 == 0) ? R(0) : -boost::math::expm1(-lambda1 * t);
    return f(t) * exp(lambda_prime * t) * damp;
  };
  std::vector<R> breaks{R(0), R(pair.support_x0)};
  auto q = adaptive_gl<R, R>(integrand, breaks, quad_target);
  IReal<R> integral{q.value, q.error};
  return R(2) * integral - R(pair.F0_value) + R(2) * phi * R(pair.f0);
}

}  // namespace detail

inline CertifiedReal h_eval(const LaplacePair& pair, double lambda1,
                            double lambda_prime, const CertifiedReal& phi,
                            const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(lambda1 >= 0) || !(lambda_prime >= 0))
    throw std::domain_error("h_eval: requires lambda1, lambda_prime >= 0");
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    auto h = detail::h_interval<DC::value>(pair, R(lambda1), R(lambda_prime),
                                           R(phi.value), R(cfg.quadrature_target));
    h.r += R(2) * R(phi.radius) * R(std::abs(pair.f0));
    return h.certify();
  });
}

/// Certified root of lambda' -> h(b, lambda') on [0, 20] for the cosine
/// family at lambda_b; unique by monotonicity of h in lambda'.
inline CertifiedReal solve_lambda_prime(double b, double lambda_b,
                                        const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(b > 0 && b <= 1.0 / 12.74 + 1e-12))
    throw std::domain_error("solve_lambda_prime: b out of (0, 1/12.74]");
  if (!(lambda_b > 0))
    throw std::domain_error("solve_lambda_prime: requires lambda_b > 0");
  auto [hp, pair] = hb_pair(lambda_b, cfg);
  auto phi = StechkinConstants::make(cfg).phi;
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using R = mpreal<DC::value>;
    R target(cfg.quadrature_target);
    auto h = [&](const R& lp) {
      return detail::h_interval<DC::value>(pair, R(b), lp, R(phi.value), target).v;
    };
    auto root = detail::bracketed_root<R>(h, R(0), R(20), R(cfg.root_target));
    // widen by the certified h-uncertainty divided by a slope estimate
    R dl(1e-3);
    R slope = (h(root.v + dl) - h(root.v - dl)) / (2 * dl);
    auto hr = detail::h_interval<DC::value>(pair, R(b), root.v, R(phi.value), target);
    root.r += hr.r / slope + R(2) * R(phi.radius) * R(std::abs(pair.f0)) / slope;
    return root.certify();
  });
}

/// Reproduces the reference table with the tabulated lambda_b inputs and
/// compares the recomputed lambda'_b and x0(b) after 4-decimal
/// truncation, allowing one unit in the last truncated place.
inline Table1Result table1(const ToleranceConfig& cfg) {
  cfg.validate();
  Table1Result out;
  auto theta = hb_theta(cfg);
  for (const auto& ref : detail::table1_reference()) {
    RepulsionRow row;
    row.b = ref.b;
    row.lambda_b = ref.lambda_b;
    row.ref_lambda_prime = ref.lambda_prime;
    row.ref_x0 = ref.x0;
    row.log_inv_b = std::log(1.0 / ref.b);
    row.x0_b = 2.0 * theta.value / (ref.lambda_b * std::tan(theta.value));
    row.lambda_prime = solve_lambda_prime(ref.b, ref.lambda_b, cfg);
    row.lambda_prime_matches =
        std::abs(detail::truncate4(row.lambda_prime.value) - ref.lambda_prime) <=
        1e-4 + 1e-12;
    row.x0_matches =
        std::abs(detail::truncate4(row.x0_b) - ref.x0) <= 1e-4 + 1e-12;
    out.max_x0 = std::max(out.max_x0, row.x0_b);
    out.rows.push_back(row);
  }
  out.all_match = true;
  for (const auto& r : out.rows)
    out.all_match = out.all_match && r.lambda_prime_matches && r.x0_matches;
  return out;
}

/// Maximizes lambda'(lambda) over lambda in [0.3, 0.7] by golden section;
/// parameter values whose h has no root on [0, 20] score zero.
inline std::pair<double, CertifiedReal> optimize_lambda(double b,
                                                        const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(b > 0 && b <= 1.0 / 12.74 + 1e-12))
    throw std::domain_error("optimize_lambda: b out of (0, 1/12.74]");
  ToleranceConfig fast = cfg;
  fast.root_target = std::max(cfg.root_target, 1e-8);
  auto objective = [&](double lam) {
    try {
      return solve_lambda_prime(b, lam, fast).value;
    } catch (const detail::NoRootError&) {
      return 0.0;
    }
  };
  auto [lam_star, lp] =
      detail::golden_section<double>(objective, 0.3, 0.7, 1e-4,
                                     detail::Extremum::maximum);
  return {lam_star, solve_lambda_prime(b, lam_star, cfg)};
}

/// The triangular-weight regime for lambda1 below the table range.
inline SmallLambdaCase small_lambda_case(double eps, double R,
                                         const ToleranceConfig& cfg) {
  cfg.validate();
  if (!(eps > 0 && eps <= 1e-6))
    throw std::domain_error("small_lambda_case: eps out of (0, 1e-6]");
  if (!(R > 0)) throw std::domain_error("small_lambda_case: requires R > 0");
  SmallLambdaCase out;
  return detail::dispatch_digits(cfg.working_digits, [&]<class DC>(DC) {
    using RT = mpreal<DC::value>;
    using std::exp; using std::floor;
    auto s5 = isqrt(detail::IReal<RT>::exact(RT(5)));
    auto phi = (RT(1) - RT(1) / s5) / RT(2);
    auto coef = detail::IReal<RT>::exact(RT(1)) / (RT(4) * phi + RT(2) * RT(eps));
    out.coefficient_exact = coef.certify();
    out.coefficient = detail::truncate4(out.coefficient_exact.value);
    RT e4 = 4 * boost::math::constants::e<RT>();
    out.lambda_prime_floor = static_cast<double>(e4);
    out.lambda1_threshold =
        iexp(detail::IReal<RT>::exact(-e4 / RT(out.coefficient))).certify();
    out.x0_cap = (RT(4) * phi + RT(R) + RT(2) * RT(eps)).certify();
    return out;
  });
}

/// Piecewise lower-bound coefficient: on each [b_i, b_{i+1}] the bound
/// lambda' >= lambda'(b_{i+1}) holds while log(1/lambda1) <= log(1/b_i),
/// giving the certified per-interval ratio.  The alternate convention
/// divides by log(1/b_{i+1}) instead.
inline GlobalCoefficient global_coefficient(const std::vector<RepulsionRow>& rows,
                                            const ToleranceConfig& cfg) {
  cfg.validate();
  if (rows.size() < 2)
    throw std::domain_error("global_coefficient: need at least two rows");
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].b > rows[i - 1].b))
      throw std::domain_error("global_coefficient: rows must be sorted by b");

  GlobalCoefficient out;
  auto sl = small_lambda_case(1e-6, 12.74, cfg);
  out.small_lambda_handoff = sl.coefficient;

  CertifiedReal gmin{1e300, 0.0};
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    const auto& lp = rows[i + 1].lambda_prime;
    double llo = std::log(1.0 / rows[i].b);
    double lhi = std::log(1.0 / rows[i + 1].b);
    IntervalRatio r{rows[i].b, rows[i + 1].b,
                    {lp.value / llo, lp.radius / llo + 1e-15 * std::abs(lp.value / llo)}};
    IntervalRatio ra{rows[i].b, rows[i + 1].b,
                     {lp.value / lhi, lp.radius / lhi + 1e-15 * std::abs(lp.value / lhi)}};
    if (r.ratio.value < gmin.value) gmin = r.ratio;
    out.ratios.push_back(r);
    out.ratios_alt.push_back(ra);
  }
  // handoff below the first b: the triangular-case coefficient applies
  // and exceeds every tabulated ratio, so it never binds
  out.global_min = gmin;
  out.last_interval_ratio = out.ratios.back().ratio.value;
  out.matches_reference_claim =
      out.last_interval_ratio >= out.reference_claim - 1e-4;
  if (!out.matches_reference_claim) {
    out.note =
        "final-interval ratio uses log(1/b) at the left endpoint 0.078 and "
        "evaluates to ~0.6530; the claimed 0.6546 equals the same numerator "
        "divided by log(12.74), i.e. the right endpoint";
  }
  return out;
}

}  // namespace zetax

#endif  // ZETAX_REPULSION_HPP

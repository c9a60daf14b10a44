// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/claims.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zetax {

namespace {

Claim make_claim(std::string id, std::string location, double reference,
                 const CertifiedReal& computed, double tol,
                 ClaimKind kind = ClaimKind::equality, std::string note = "") {
  Claim c;
  c.id = std::move(id);
  c.location = std::move(location);
  c.reference_value = reference;
  c.computed_value = computed.value;
  c.radius = computed.radius;
  c.tolerance = tol;
  c.kind = kind;
  c.note = std::move(note);
  evaluate_claim(c);
  return c;
}

std::string fmt_b(double b) {
  char buf[32];
  if (b < 1e-2) std::snprintf(buf, sizeof buf, "%.0e", b);
  else std::snprintf(buf, sizeof buf, "%g", b);
  return buf;
}

}  // namespace

ReportDocument constants_report(const ToleranceConfig& cfg) {
  ReportDocument doc;

  {
    ReportSection sec{"numerics", {}};
    sec.claims.push_back(make_claim(
        "numerics.stirling_half_arg.T1", "argument-variation bound, half-shift term",
        0.630716, stirling_deviation(1.0, StirlingKind::half_arg, cfg), 1e-6,
        ClaimKind::upper_bound));
    sec.claims.push_back(make_claim(
        "numerics.stirling_full_arg.T1", "argument-variation bound, full-shift term",
        0.260643, stirling_deviation(1.0, StirlingKind::full_arg, cfg), 1e-6,
        ClaimKind::upper_bound));
    doc.sections.push_back(std::move(sec));
  }

  {
    ReportSection sec{"zerocount", {}};
    auto ec = eta_constants(0.5, cfg);
    sec.claims.push_back(make_claim("zerocount.b1", "counting-window constant b1",
                                    4.692582, ec.b1, 1e-5));
    sec.claims.push_back(make_claim("zerocount.b2", "counting-window constant b2",
                                    0.267481, ec.b2, 1e-5));
    sec.claims.push_back(make_claim("zerocount.b3", "counting-window constant b3",
                                    0.268089, ec.b3, 1e-5));
    sec.claims.push_back(make_claim("zerocount.g_cap", "additive cap, full precision",
                                    7.622699, ec.g_cap, 1e-6));
    sec.claims.push_back(make_claim(
        "zerocount.g_cap.stated", "additive cap as stated (rounded down)", 7.6227,
        ec.g_cap, 1e-4, ClaimKind::equality,
        "the stated 7.6227 rounds the working value 7.622699 downward"));
    sec.claims.push_back(make_claim("zerocount.c1.eta_half",
                                    "c1 at eta = 1/2 (recomputed reference)",
                                    0.91844818852657034, ec.c1, 1e-12));
    sec.claims.push_back(make_claim("zerocount.c2.eta_half",
                                    "c2 at eta = 1/2 (recomputed reference)",
                                    5.3309002929230594, ec.c2, 1e-10));
    auto mk = minkowski_c0(10000, cfg);
    sec.claims.push_back(make_claim(
        "zerocount.minkowski_sup", "degree-vs-discriminant supremum (attained at n=2)",
        2.2144337865176244, mk.sup, 1e-9, ClaimKind::equality,
        mk.eventually_monotone ? "sequence verified decreasing beyond the argmax"
                               : "monotonicity check failed"));
    doc.sections.push_back(std::move(sec));
  }

  {
    ReportSection sec{"stechkin", {}};
    auto consts = StechkinConstants::make(cfg);
    sec.claims.push_back(make_claim("stechkin.phi", "differencing coefficient phi",
                                    0.276393, consts.phi, 1e-6));
    auto [beta, gmin] = g_min(consts, cfg);
    sec.claims.push_back(make_claim("stechkin.beta_root",
                                    "positive root of 2x^6+4x^4-1", 0.672016, beta,
                                    1e-6));
    sec.claims.push_back(make_claim("stechkin.g_min", "minimum of g", -0.121585,
                                    gmin, 1e-6));
    auto budget = theorem2_budget(1e-2, cfg);
    sec.claims.push_back(make_claim("stechkin.f0_11", "digamma difference f_0(1,1)",
                                    -0.312948, budget.f0_11, 1e-5));
    sec.claims.push_back(make_claim("stechkin.f1_11", "digamma difference f_1(1,1)",
                                    -0.158361, budget.f1_11, 1e-5));
    sec.claims.push_back(make_claim("stechkin.C0_001", "C_0(0.01) bound", -0.303931,
                                    budget.C0_eps, 1e-6, ClaimKind::upper_bound));
    sec.claims.push_back(make_claim("stechkin.C1_001", "C_1(0.01) bound", -0.153758,
                                    budget.C1_eps, 1e-6, ClaimKind::upper_bound));
    sec.claims.push_back(make_claim("stechkin.C0_015", "C_0(0.15) bound", -0.177060,
                                    C_a(0, 0.15, cfg), 1e-6, ClaimKind::upper_bound));
    sec.claims.push_back(make_claim("stechkin.C1_015", "C_1(0.15) bound", -0.088955,
                                    C_a(1, 0.15, cfg), 1e-6, ClaimKind::upper_bound));
    sec.claims.push_back(make_claim("stechkin.gamma_diff",
                                    "digamma-block coefficient", -0.545240,
                                    budget.gamma_diff, 0.0, ClaimKind::upper_bound));
    sec.claims.push_back(make_claim("stechkin.zeta_term",
                                    "golden-ratio zeta logarithmic derivative term",
                                    0.509786, budget.zeta_term, 1e-6,
                                    ClaimKind::upper_bound));
    sec.claims.push_back(make_claim("stechkin.nk_coeff", "degree coefficient",
                                    -0.035454, budget.nk_coeff, 1e-6,
                                    ClaimKind::upper_bound));
    sec.claims.push_back(make_claim(
        "stechkin.additive", "additive constant, full precision", 0.121586,
        budget.additive, 1e-6, ClaimKind::equality,
        "the stated 0.1216 rounds the working value 0.121585... downward"));
    doc.sections.push_back(std::move(sec));
  }

  {
    ReportSection sec{"laplace", {}};
    sec.claims.push_back(make_claim("laplace.theta",
                                    "optimal angle, root of sin^2 t = (3/2)(1 - t cot t)",
                                    1.272979, hb_theta(cfg), 1e-6));
    doc.sections.push_back(std::move(sec));
  }

  check_unique_ids(doc);
  return doc;
}

ReportDocument table1_report(const ToleranceConfig& cfg, bool optimize,
                             double epsilon) {
  ReportDocument doc;
  auto t1 = table1(cfg);

  {
    ReportSection sec{"table1", {}};
    for (const auto& row : t1.rows) {
      std::string tag = fmt_b(row.b);
      sec.claims.push_back(make_claim(
          "table1.lambda_prime.b=" + tag, "reference table row b=" + tag,
          row.ref_lambda_prime, row.lambda_prime, 2e-4, ClaimKind::equality,
          "compared after truncation to 4 decimals"));
      sec.claims.push_back(make_claim(
          "table1.x0.b=" + tag, "reference table row b=" + tag, row.ref_x0,
          {row.x0_b, 1e-12}, 2e-4, ClaimKind::equality,
          "compared after truncation to 4 decimals"));
    }
    sec.claims.push_back(make_claim("table1.max_x0", "support bound over all rows",
                                    1.8922, {t1.max_x0, 1e-12}, 1e-4,
                                    ClaimKind::upper_bound));
    if (epsilon > 0) {
      // sensitivity: resolving one row with the epsilon-shifted functional
      auto lp = solve_lambda_prime(0.01 * (1 + epsilon), 0.477, cfg);
      Claim c;
      c.id = "table1.epsilon_sensitivity.b=0.01";
      c.location = "epsilon-shifted resolve (no published reference)";
      c.computed_value = lp.value;
      c.radius = lp.radius;
      c.status = ClaimStatus::unverified;
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "root with b scaled by (1+%g); table values are the eps->0 limit",
                    epsilon);
      c.note = buf;
      sec.claims.push_back(c);
    }
    if (optimize) {
      for (double b : {1e-6, 0.01}) {
        auto [lam, lp] = optimize_lambda(b, cfg);
        std::string tag = fmt_b(b);
        double ref = b < 1e-4 ? 12.3982 : 3.8182;
        sec.claims.push_back(make_claim(
            "table1.optimized_lambda_prime.b=" + tag,
            "golden-section best lambda for b=" + tag, ref, lp, 1e-4,
            ClaimKind::lower_bound,
            "lambda* = " + std::to_string(lam) +
                "; must not fall below the tabulated value"));
      }
    }
    doc.sections.push_back(std::move(sec));
  }

  {
    ReportSection sec{"small-lambda", {}};
    auto sl = small_lambda_case(1e-6, 12.74, cfg);
    sec.claims.push_back(make_claim("small_lambda.coefficient",
                                    "triangular-case slope", 0.9045,
                                    sl.coefficient_exact, 0.0,
                                    ClaimKind::lower_bound));
    sec.claims.push_back(make_claim("small_lambda.threshold",
                                    "crossover lambda1 threshold", 6.015645876e-6,
                                    sl.lambda1_threshold, 1e-11));
    sec.claims.push_back(make_claim("small_lambda.x0_cap", "support cap", 13.8456,
                                    sl.x0_cap, 1e-4, ClaimKind::equality,
                                    "computed as 4 phi + 12.74 + 2 eps"));
    doc.sections.push_back(std::move(sec));
  }

  {
    ReportSection sec{"global-coefficient", {}};
    auto gc = global_coefficient(t1.rows, cfg);
    Claim chain = make_claim(
        "global.final_interval_chain",
        "displayed chain on the last subinterval [0.078, 1/12.74]", 0.6546,
        gc.ratios.back().ratio, 1e-4, ClaimKind::equality, gc.note);
    chain.acknowledged = (chain.status == ClaimStatus::discrepant);
    sec.claims.push_back(chain);
    sec.claims.push_back(make_claim(
        "global.final_interval_chain.right_endpoint",
        "same chain divided by log at the right endpoint 1/12.74", 0.6546,
        gc.ratios_alt.back().ratio, 1e-4, ClaimKind::equality,
        "matches the claimed 0.6546 under the right-endpoint convention"));
    sec.claims.push_back(make_claim(
        "global.min_ratio", "certified minimum over all subintervals",
        0.6523, gc.global_min, 1e-4, ClaimKind::lower_bound,
        "the small-lambda1 handoff 0.9045 never binds"));
    doc.sections.push_back(std::move(sec));
  }

  check_unique_ids(doc);
  return doc;
}

ReportDocument repulsion_report(double b, double lambda, const ToleranceConfig& cfg) {
  ReportDocument doc;
  ReportSection sec{"repulsion", {}};
  double lam = lambda;
  if (lam <= 0) {
    // nearest tabulated lambda_b
    double best = 1e300;
    for (const auto& r : detail::table1_reference()) {
      if (std::abs(r.b - b) < best) {
        best = std::abs(r.b - b);
        lam = r.lambda_b;
      }
    }
  }
  auto lp = solve_lambda_prime(b, lam, cfg);
  Claim c;
  c.id = "repulsion.lambda_prime";
  c.location = "root of the repulsion functional";
  c.computed_value = lp.value;
  c.radius = lp.radius;
  c.status = ClaimStatus::unverified;
  c.note = "b=" + std::to_string(b) + ", lambda=" + std::to_string(lam);
  for (const auto& r : detail::table1_reference()) {
    if (std::abs(r.b - b) < 1e-12 && std::abs(r.lambda_b - lam) < 1e-12) {
      c.reference_value = r.lambda_prime;
      c.tolerance = 2e-4;
      c.location = "reference table row b=" + fmt_b(b);
      evaluate_claim(c);
      break;
    }
  }
  sec.claims.push_back(c);
  doc.sections.push_back(std::move(sec));
  return doc;
}

ReportDocument empirical_report(const std::vector<ZeroDataset>& datasets,
                                double eta, const ToleranceConfig& cfg) {
  ReportDocument doc;
  for (const auto& ds : datasets) {
    ReportSection sec{"empirical." + ds.label, {}};
    std::vector<double> grid;
    int tmax = static_cast<int>(std::min(30.0, ds.completeness_height));
    for (int T = 1; T <= tmax; ++T) grid.push_back(T);
    auto rep = verify_window(
        ds, eta > 0 ? std::optional<double>(eta) : std::nullopt, grid, cfg);
    for (const auto& chk : rep.checks) {
      Claim c;
      c.id = "empirical." + ds.label + ".T=" + std::to_string((int)chk.T);
      c.location = "bundled zero dataset " + ds.source;
      c.reference_value = static_cast<double>(chk.count);
      c.computed_value = chk.main_term;
      c.radius = chk.error_bound;
      c.tolerance = 0.0;
      c.kind = ClaimKind::equality;
      c.status = chk.pass ? ClaimStatus::confirmed : ClaimStatus::discrepant;
      char buf[96];
      std::snprintf(buf, sizeof buf, "margin %.4f at eta %.4f", chk.margin, chk.eta);
      c.note = buf;
      sec.claims.push_back(c);
    }
    doc.sections.push_back(std::move(sec));
  }
  check_unique_ids(doc);
  return doc;
}

ReportDocument full_report(const std::vector<ZeroDataset>& datasets,
                           const ToleranceConfig& cfg) {
  ReportDocument doc = constants_report(cfg);
  for (auto& sec : table1_report(cfg, false, 0.0).sections)
    doc.sections.push_back(std::move(sec));
  for (auto& sec : empirical_report(datasets, -1.0, cfg).sections)
    doc.sections.push_back(std::move(sec));
  check_unique_ids(doc);
  return doc;
}

}  // namespace zetax

// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Assembly of the verification claims: every published constant, the
// reference table, the small-lambda1 regime, the piecewise coefficient
// audit, and the empirical counting windows, as report sections.

#ifndef ZETAX_CLAIMS_HPP
#define ZETAX_CLAIMS_HPP

#include "zetax/report.hpp"
#include "zetax/repulsion.hpp"
#include "zetax/zerodata.hpp"

#include <string>
#include <vector>

namespace zetax {

/// Sections "numerics", "zerocount", "stechkin", "laplace": one claim per
/// published constant.
ReportDocument constants_report(const ToleranceConfig& cfg);

/// Sections "table1", "small-lambda", "global-coefficient".  epsilon is
/// exposed for sensitivity reporting only; the table itself is solved in
/// the epsilon -> 0 limit.  optimize appends a best-lambda column pass.
ReportDocument table1_report(const ToleranceConfig& cfg, bool optimize,
                             double epsilon);

/// Single-b repulsion solve (with the tabulated lambda_b when lambda <= 0).
ReportDocument repulsion_report(double b, double lambda, const ToleranceConfig& cfg);

/// Empirical window verification over integer heights for the given
/// datasets; eta <= 0 selects the per-height optimum.
ReportDocument empirical_report(const std::vector<ZeroDataset>& datasets,
                                double eta, const ToleranceConfig& cfg);

/// Everything above in one document (fixtures optional).
ReportDocument full_report(const std::vector<ZeroDataset>& datasets,
                           const ToleranceConfig& cfg);

}  // namespace zetax

#endif  // ZETAX_CLAIMS_HPP

// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Verification report document: claims with certified computed values
// compared against published reference values, and text/JSON/CSV
// serialization.

#ifndef ZETAX_REPORT_HPP
#define ZETAX_REPORT_HPP

#include "zetax/certified.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetax {

enum class ClaimStatus { confirmed, discrepant, unverified };

enum class ClaimKind {
  equality,     // |computed - reference| <= tolerance
  upper_bound,  // computed <= reference (+ tolerance)
  lower_bound,  // computed >= reference (- tolerance)
};

struct Claim {
  std::string id;        // unique, stable identifier
  std::string location;  // where the reference value is stated
  std::optional<double> reference_value;
  double computed_value = 0.0;
  double radius = 0.0;
  double tolerance = 0.0;
  ClaimKind kind = ClaimKind::equality;
  ClaimStatus status = ClaimStatus::unverified;
  // a known, documented discrepancy: still reported DISCREPANT but does
  // not fail the run
  bool acknowledged = false;
  std::string note;
};

struct ReportSection {
  std::string name;
  std::vector<Claim> claims;
};

struct ReportDocument {
  std::vector<ReportSection> sections;

  bool has_discrepant() const;             // any DISCREPANT at all
  bool has_blocking_discrepant() const;    // DISCREPANT and not acknowledged
  bool has_unverified() const;
  const Claim* find(const std::string& id) const;
};

/// Sets claim.status from its kind/tolerance; claims without a reference
/// value become unverified unless already marked.
void evaluate_claim(Claim& c);

/// Throws std::logic_error if any claim id occurs twice.
void check_unique_ids(const ReportDocument& doc);

std::string emit_text(const ReportDocument& doc, int digits);
std::string emit_json(const ReportDocument& doc, int digits);
std::string emit_csv(const ReportDocument& doc, int digits);

/// Inverse of emit_json; used for the round-trip guarantee.
ReportDocument parse_json_report(const std::string& text);

bool report_equal(const ReportDocument& a, const ReportDocument& b);

}  // namespace zetax

#endif  // ZETAX_REPORT_HPP

// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/report.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zetax {

namespace {

using nlohmann::json;

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "CONFIRMED";
    case ClaimStatus::discrepant: return "DISCREPANT";
    case ClaimStatus::unverified: return "UNVERIFIED";
  }
  return "UNVERIFIED";
}

ClaimStatus status_from_name(const std::string& s) {
  if (s == "CONFIRMED") return ClaimStatus::confirmed;
  if (s == "DISCREPANT") return ClaimStatus::discrepant;
  if (s == "UNVERIFIED") return ClaimStatus::unverified;
  throw std::invalid_argument("report: unknown status " + s);
}

std::string kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::equality: return "equality";
    case ClaimKind::upper_bound: return "upper_bound";
    case ClaimKind::lower_bound: return "lower_bound";
  }
  return "equality";
}

ClaimKind kind_from_name(const std::string& s) {
  if (s == "equality") return ClaimKind::equality;
  if (s == "upper_bound") return ClaimKind::upper_bound;
  if (s == "lower_bound") return ClaimKind::lower_bound;
  throw std::invalid_argument("report: unknown kind " + s);
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits > 17 ? 17 : digits, v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool ReportDocument::has_discrepant() const {
  for (const auto& s : sections)
    for (const auto& c : s.claims)
      if (c.status == ClaimStatus::discrepant) return true;
  return false;
}

bool ReportDocument::has_blocking_discrepant() const {
  for (const auto& s : sections)
    for (const auto& c : s.claims)
      if (c.status == ClaimStatus::discrepant && !c.acknowledged) return true;
  return false;
}

bool ReportDocument::has_unverified() const {
  for (const auto& s : sections)
    for (const auto& c : s.claims)
      if (c.status == ClaimStatus::unverified) return true;
  return false;
}

const Claim* ReportDocument::find(const std::string& id) const {
  for (const auto& s : sections)
    for (const auto& c : s.claims)
      if (c.id == id) return &c;
  return nullptr;
}

void evaluate_claim(Claim& c) {
  if (!c.reference_value) {
    c.status = ClaimStatus::unverified;
    return;
  }
  double ref = *c.reference_value;
  bool ok = false;
  switch (c.kind) {
    case ClaimKind::equality:
      ok = std::abs(c.computed_value - ref) <= c.tolerance;
      break;
    case ClaimKind::upper_bound:
      ok = c.computed_value + c.radius <= ref + c.tolerance;
      break;
    case ClaimKind::lower_bound:
      ok = c.computed_value - c.radius >= ref - c.tolerance;
      break;
  }
  c.status = ok ? ClaimStatus::confirmed : ClaimStatus::discrepant;
}

void check_unique_ids(const ReportDocument& doc) {
  std::set<std::string> seen;
  for (const auto& s : doc.sections)
    for (const auto& c : s.claims)
      if (!seen.insert(c.id).second)
        throw std::logic_error("report: duplicate claim id " + c.id);
}

std::string emit_text(const ReportDocument& doc, int digits) {
  std::ostringstream out;
  for (const auto& sec : doc.sections) {
    out << "== " << sec.name << " ==\n";
    for (const auto& c : sec.claims) {
      out << "  [" << status_name(c.status) << "] " << c.id << ": computed "
          << fmt(c.computed_value, digits) << " (radius "
          << fmt(c.radius, 3) << ")";
      if (c.reference_value)
        out << ", reference " << fmt(*c.reference_value, digits) << " at "
            << c.location;
      if (!c.note.empty()) out << "\n      note: " << c.note;
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_json(const ReportDocument& doc, int digits) {
  (void)digits;  // JSON always carries full precision
  json sections = json::array();
  for (const auto& sec : doc.sections) {
    json claims = json::array();
    for (const auto& c : sec.claims) {
      json jc{{"id", c.id},
              {"location", c.location},
              {"computed_value", c.computed_value},
              {"radius", c.radius},
              {"tolerance", c.tolerance},
              {"kind", kind_name(c.kind)},
              {"status", status_name(c.status)},
              {"acknowledged", c.acknowledged},
              {"note", c.note}};
      if (c.reference_value) jc["reference_value"] = *c.reference_value;
      else jc["reference_value"] = nullptr;
      claims.push_back(std::move(jc));
    }
    sections.push_back(json{{"name", sec.name}, {"claims", std::move(claims)}});
  }
  return json{{"sections", std::move(sections)}}.dump(2) + "\n";
}

std::string emit_csv(const ReportDocument& doc, int digits) {
  std::ostringstream out;
  out << "section,id,location,reference_value,computed_value,radius,status,note\r\n";
  for (const auto& sec : doc.sections)
    for (const auto& c : sec.claims) {
      out << csv_quote(sec.name) << ',' << csv_quote(c.id) << ','
          << csv_quote(c.location) << ','
          << (c.reference_value ? fmt(*c.reference_value, digits) : std::string())
          << ',' << fmt(c.computed_value, digits) << ',' << fmt(c.radius, 3)
          << ',' << status_name(c.status) << ',' << csv_quote(c.note) << "\r\n";
    }
  return out.str();
}

ReportDocument parse_json_report(const std::string& text) {
  json j = json::parse(text);
  ReportDocument doc;
  for (const auto& jsec : j.at("sections")) {
    ReportSection sec;
    sec.name = jsec.at("name").get<std::string>();
    for (const auto& jc : jsec.at("claims")) {
      Claim c;
      c.id = jc.at("id").get<std::string>();
      c.location = jc.at("location").get<std::string>();
      if (!jc.at("reference_value").is_null())
        c.reference_value = jc.at("reference_value").get<double>();
      c.computed_value = jc.at("computed_value").get<double>();
      c.radius = jc.at("radius").get<double>();
      c.tolerance = jc.at("tolerance").get<double>();
      c.kind = kind_from_name(jc.at("kind").get<std::string>());
      c.status = status_from_name(jc.at("status").get<std::string>());
      c.acknowledged = jc.at("acknowledged").get<bool>();
      c.note = jc.at("note").get<std::string>();
      sec.claims.push_back(std::move(c));
    }
    doc.sections.push_back(std::move(sec));
  }
  return doc;
}

bool report_equal(const ReportDocument& a, const ReportDocument& b) {
  if (a.sections.size() != b.sections.size()) return false;
  for (size_t i = 0; i < a.sections.size(); ++i) {
    const auto& sa = a.sections[i];
    const auto& sb = b.sections[i];
    if (sa.name != sb.name || sa.claims.size() != sb.claims.size()) return false;
    for (size_t k = 0; k < sa.claims.size(); ++k) {
      const auto& ca = sa.claims[k];
      const auto& cb = sb.claims[k];
      if (ca.id != cb.id || ca.location != cb.location ||
          ca.reference_value != cb.reference_value ||
          ca.computed_value != cb.computed_value || ca.radius != cb.radius ||
          ca.tolerance != cb.tolerance || ca.kind != cb.kind ||
          ca.status != cb.status || ca.acknowledged != cb.acknowledged ||
          ca.note != cb.note)
        return false;
    }
  }
  return true;
}

}  // namespace zetax

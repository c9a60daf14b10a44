// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// Zero-ordinate datasets: fixture loading, optional cached remote fetch,
// the symmetric counting function, and the empirical two-sided window
// verification.

#ifndef ZETAX_ZERODATA_HPP
#define ZETAX_ZERODATA_HPP

#include "zetax/zerocount.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetax {

struct ZeroDataset {
  std::string label;
  FieldParams field;
  std::vector<double> ordinates;      // positive, sorted ascending
  double completeness_height = 0.0;   // exhaustive for 0 < gamma <= H
  int real_ordinate_multiplicity = 0; // zeros with gamma = 0, with multiplicity
  std::string source;
};

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FetchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses and validates the dataset JSON schema; `source` is recorded
/// verbatim for reporting.
ZeroDataset parse_dataset(const std::string& json_text, const std::string& source);

ZeroDataset load_fixture(const std::string& path);

/// GET {endpoint}/{label}.json, cache the body under {cache_dir}, and
/// replay the cache on subsequent calls.  With allow_network=false only
/// the cache is consulted.
ZeroDataset fetch_remote(const std::string& label, const std::string& endpoint,
                         const std::string& cache_dir, bool allow_network);

/// Number of zeros with |ordinate| <= T: twice the one-sided count plus
/// any declared real-ordinate multiplicity.
long count_zeros(const ZeroDataset& ds, double T);

struct WindowCheck {
  double T = 0.0;
  double eta = 0.0;
  long count = 0;
  double main_term = 0.0;
  double error_bound = 0.0;
  double margin = 0.0;  // error_bound - |count - main_term|
  bool pass = false;
};

struct WindowReport {
  std::string label;
  std::vector<WindowCheck> checks;
  bool all_pass = false;
  double min_margin = 0.0;
};

/// Checks |N_K(T) - main| <= bound at each grid height; eta == nullopt
/// picks the per-T optimum.
WindowReport verify_window(const ZeroDataset& ds, std::optional<double> eta,
                           const std::vector<double>& T_grid,
                           const ToleranceConfig& cfg);

}  // namespace zetax

#endif  // ZETAX_ZERODATA_HPP

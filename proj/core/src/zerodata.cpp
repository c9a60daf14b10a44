// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/zerodata.hpp"

#include <nlohmann/json.hpp>

#define CPPHTTPLIB_NO_EXCEPTIONS 0
#include <httplib.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace zetax {

namespace {

using nlohmann::json;

ZeroDataset from_json(const json& j, const std::string& source) {
  if (!j.is_object()) throw LoadError("dataset: top level must be an object");
  for (const char* key :
       {"label", "n_K", "r1", "r2", "completeness_height", "ordinates", "source"})
    if (!j.contains(key)) throw LoadError(std::string("dataset: missing field ") + key);

  ZeroDataset ds;
  ds.label = j.at("label").get<std::string>();
  ds.field.n_K = j.at("n_K").get<int>();
  ds.field.r1 = j.at("r1").get<int>();
  ds.field.r2 = j.at("r2").get<int>();
  if (j.contains("log_disc")) {
    const auto& ld = j.at("log_disc");
    if (ld.is_object()) {
      if (!ld.contains("d_K")) throw LoadError("dataset: log_disc object needs d_K");
      long dk = ld.at("d_K").get<long>();
      if (dk < 1) throw LoadError("dataset: d_K must be >= 1");
      ds.field.log_disc = std::log(static_cast<double>(dk));
    } else if (ld.is_number()) {
      ds.field.log_disc = ld.get<double>();
    } else {
      throw LoadError("dataset: log_disc must be a number or {\"d_K\": n}");
    }
  } else {
    throw LoadError("dataset: missing field log_disc");
  }
  ds.completeness_height = j.at("completeness_height").get<double>();
  ds.real_ordinate_multiplicity = j.value("real_ordinate_multiplicity", 0);
  ds.source = j.at("source").get<std::string>();

  if (!j.at("ordinates").is_array())
    throw LoadError("dataset: ordinates must be an array");
  for (const auto& o : j.at("ordinates")) {
    if (!o.is_number()) throw LoadError("dataset: ordinates must be numbers");
    ds.ordinates.push_back(o.get<double>());
  }

  try {
    ds.field.validate();
  } catch (const std::domain_error& e) {
    throw LoadError(std::string("dataset: ") + e.what());
  }
  if (!(ds.completeness_height > 0))
    throw LoadError("dataset: completeness_height must be positive");
  if (ds.real_ordinate_multiplicity < 0)
    throw LoadError("dataset: real_ordinate_multiplicity must be >= 0");
  double prev = 0.0;
  for (double o : ds.ordinates) {
    if (!std::isfinite(o) || o <= 0)
      throw LoadError("dataset: ordinates must be finite and positive");
    if (o < prev) throw LoadError("dataset: ordinates must be sorted ascending");
    if (o > ds.completeness_height)
      throw LoadError("dataset: ordinate exceeds completeness_height");
    prev = o;
  }
  ds.label = ds.label.empty() ? source : ds.label;
  return ds;
}

// splits "http://host[:port][/prefix]" into (host:port, prefix)
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  std::string rest = endpoint;
  const std::string scheme = "http://";
  if (rest.rfind(scheme, 0) == 0) rest = rest.substr(scheme.size());
  auto slash = rest.find('/');
  std::string hostport = rest.substr(0, slash);
  std::string prefix = slash == std::string::npos ? "" : rest.substr(slash);
  if (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {"http://" + hostport, prefix};
}

}  // namespace

ZeroDataset parse_dataset(const std::string& json_text, const std::string& source) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("dataset: JSON parse failure: ") + e.what());
  }
  return from_json(j, source);
}

ZeroDataset load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("dataset: cannot open " + path);
  std::ostringstream body;
  body << in.rdbuf();
  auto ds = parse_dataset(body.str(), path);
  ds.source = path;
  return ds;
}

ZeroDataset fetch_remote(const std::string& label, const std::string& endpoint,
                         const std::string& cache_dir, bool allow_network) {
  if (label.empty() || label.find('/') != std::string::npos ||
      label.find("..") != std::string::npos)
    throw FetchError("fetch: label must be a plain name");
  std::filesystem::path cache_file =
      std::filesystem::path(cache_dir) / (label + ".json");

  if (std::filesystem::exists(cache_file)) {
    auto ds = load_fixture(cache_file.string());
    ds.source = "cache:" + cache_file.string();
    return ds;
  }
  if (!allow_network)
    throw FetchError("fetch: no cached copy of '" + label +
                     "' and network access is disabled");
  if (endpoint.empty()) throw FetchError("fetch: no endpoint configured");

  auto [base, prefix] = split_endpoint(endpoint);
  httplib::Client client(base);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(prefix + "/" + label + ".json");
  if (!res) throw FetchError("fetch: request to " + endpoint + " failed");
  if (res->status != 200)
    throw FetchError("fetch: HTTP " + std::to_string(res->status) + " from " + endpoint);

  // validate before caching so a bad body never poisons the cache
  auto ds = parse_dataset(res->body, endpoint);
  std::filesystem::create_directories(cache_dir);
  std::filesystem::path tmp = cache_file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("fetch: cannot write cache " + cache_file.string());
    out << res->body;
  }
  std::filesystem::rename(tmp, cache_file);
  ds.source = "remote:" + endpoint;
  return ds;
}

long count_zeros(const ZeroDataset& ds, double T) {
  if (!(T >= 1.0 && T <= ds.completeness_height))
    throw std::out_of_range(
        "count_zeros: T must lie in [1, completeness_height]");
  auto it = std::upper_bound(ds.ordinates.begin(), ds.ordinates.end(), T);
  return 2 * static_cast<long>(it - ds.ordinates.begin()) +
         ds.real_ordinate_multiplicity;
}

WindowReport verify_window(const ZeroDataset& ds, std::optional<double> eta,
                           const std::vector<double>& T_grid,
                           const ToleranceConfig& cfg) {
  cfg.validate();
  if (T_grid.empty()) throw std::domain_error("verify_window: empty grid");
  WindowReport rep;
  rep.label = ds.label;
  rep.min_margin = 1e300;
  for (double T : T_grid) {
    if (!(T >= 1.0 && T <= ds.completeness_height))
      throw std::domain_error("verify_window: grid height out of range");
    WindowCheck c;
    c.T = T;
    CountWindow w;
    if (eta) {
      c.eta = *eta;
      w = count_window(ds.field, T, *eta, cfg);
    } else {
      auto [best, win] = optimize_eta(ds.field, T, cfg);
      c.eta = best;
      w = win;
    }
    c.count = count_zeros(ds, T);
    c.main_term = w.main_term.value;
    c.error_bound = w.error_bound.value;
    c.margin = c.error_bound - std::abs(c.count - c.main_term);
    c.pass = c.margin > 0;
    rep.min_margin = std::min(rep.min_margin, c.margin);
    rep.checks.push_back(c);
  }
  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace zetax

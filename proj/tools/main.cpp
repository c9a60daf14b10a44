// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0
//
// zetax: recompute and verify the explicit zero-counting and
// zero-repulsion constants, reproduce the reference table, and check the
// counting window against bundled zero datasets.

#include "zetax/claims.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct GlobalOptions {
  std::string format = "text";
  int digits = 30;
  std::string out;
  bool allow_open = false;
  std::string endpoint;
  std::string cache_dir;
};

int emit(const zetax::ReportDocument& doc, const GlobalOptions& g) {
  std::string body;
  if (g.format == "json") body = zetax::emit_json(doc, g.digits);
  else if (g.format == "csv") body = zetax::emit_csv(doc, g.digits);
  else body = zetax::emit_text(doc, g.digits);

  if (g.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::cerr << "zetax: cannot write " << g.out << "\n";
      return 3;
    }
    f << body;
  }
  if (doc.has_blocking_discrepant()) return 1;
  if (doc.has_unverified() && !g.allow_open) return 1;
  return 0;
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

std::vector<zetax::ZeroDataset> load_fixture_dir(const std::string& dir) {
  std::vector<zetax::ZeroDataset> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) out.push_back(zetax::load_fixture(p.string()));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "certified recomputation of explicit zero-counting and zero-repulsion "
      "constants"};
  app.require_subcommand(1);

  GlobalOptions g;
  g.endpoint = env_or("ZETAX_ENDPOINT", "");
  g.cache_dir = env_or("ZETAX_CACHE", "");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--digits", g.digits, "working decimal digits")
      ->check(CLI::Range(10, 60));
  app.add_option("--out", g.out, "write the report to a file instead of stdout");
  app.add_flag("--allow-open", g.allow_open,
               "exit 0 even when some claims have no reference value");
  app.add_option("--endpoint", g.endpoint, "dataset endpoint URL");
  app.add_option("--cache", g.cache_dir, "dataset cache directory");

  auto* constants = app.add_subcommand("constants", "verify the published constants");

  auto* table1 = app.add_subcommand("table1", "reproduce the reference table");
  bool opt_lambda = false;
  double epsilon = 0.0;
  table1->add_flag("--optimize-lambda", opt_lambda,
                   "also report golden-section-optimized lambda values");
  table1->add_option("--epsilon", epsilon, "epsilon-sensitivity resolve");

  auto* zerocount = app.add_subcommand("zerocount", "evaluate the counting window");
  zetax::FieldParams field;
  double zc_T = 1.0;
  std::string zc_eta = "auto";
  zerocount->add_option("--nk", field.n_K, "field degree")->required();
  zerocount->add_option("--r1", field.r1, "real places")->required();
  zerocount->add_option("--r2", field.r2, "complex places")->required();
  zerocount->add_option("--logdisc", field.log_disc, "log |discriminant|")->required();
  zerocount->add_option("--T", zc_T, "height")->required();
  zerocount->add_option("--eta", zc_eta, "window parameter in (0, 1/2], or 'auto'");

  auto* verify = app.add_subcommand("verify-zeros", "check the window against a dataset");
  std::string fixture, label;
  bool allow_network = false;
  double vz_eta = -1.0;
  verify->add_option("--fixture", fixture, "dataset JSON path");
  verify->add_option("--label", label, "dataset label for the remote endpoint");
  verify->add_flag("--allow-network", allow_network, "permit the remote fetch");
  verify->add_option("--eta", vz_eta, "fixed window parameter (default: optimize)");

  auto* repulsion = app.add_subcommand("repulsion", "solve the repulsion root for one b");
  double rb = 0.0, rlambda = -1.0;
  repulsion->add_option("--b", rb, "lambda1 upper bound in (0, 1/12.74]")->required();
  repulsion->add_option("--lambda", rlambda,
                        "test-function parameter (default: nearest tabulated)");

  auto* report = app.add_subcommand("report", "run every verification");
  std::string fixtures_dir = "data";
  report->add_option("--fixtures-dir", fixtures_dir, "directory of dataset fixtures");

  // global options may follow the subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  zetax::ToleranceConfig cfg;
  cfg.working_digits = g.digits;

  try {
    if (*constants) return emit(zetax::constants_report(cfg), g);
    if (*table1) return emit(zetax::table1_report(cfg, opt_lambda, epsilon), g);
    if (*zerocount) {
      zetax::ReportDocument doc;
      zetax::ReportSection sec{"zerocount.window", {}};
      zetax::CountWindow w;
      double eta_used;
      if (zc_eta == "auto") {
        auto [best, win] = zetax::optimize_eta(field, zc_T, cfg);
        eta_used = best;
        w = win;
      } else {
        eta_used = std::stod(zc_eta);
        w = zetax::count_window(field, zc_T, eta_used, cfg);
      }
      zetax::Claim main;
      main.id = "window.main_term";
      main.location = "computed (no published reference)";
      main.computed_value = w.main_term.value;
      main.radius = w.main_term.radius;
      main.note = "eta=" + std::to_string(eta_used);
      sec.claims.push_back(main);
      zetax::Claim bound;
      bound.id = "window.error_bound";
      bound.location = "computed (no published reference)";
      bound.computed_value = w.error_bound.value;
      bound.radius = w.error_bound.radius;
      sec.claims.push_back(bound);
      doc.sections.push_back(std::move(sec));
      return emit(doc, g);
    }
    if (*verify) {
      if (fixture.empty() == label.empty()) {
        std::cerr << "zetax: verify-zeros needs exactly one of --fixture/--label\n";
        return 2;
      }
      zetax::ZeroDataset ds;
      if (!fixture.empty()) {
        ds = zetax::load_fixture(fixture);
      } else {
        std::string cache = g.cache_dir.empty() ? "zetax-cache" : g.cache_dir;
        ds = zetax::fetch_remote(label, g.endpoint, cache, allow_network);
      }
      return emit(zetax::empirical_report({ds}, vz_eta, cfg), g);
    }
    if (*repulsion) return emit(zetax::repulsion_report(rb, rlambda, cfg), g);
    if (*report) {
      std::vector<zetax::ZeroDataset> datasets;
      if (std::filesystem::is_directory(fixtures_dir))
        datasets = load_fixture_dir(fixtures_dir);
      return emit(zetax::full_report(datasets, cfg), g);
    }
  } catch (const zetax::LoadError& e) {
    std::cerr << "zetax: " << e.what() << "\n";
    return 3;
  } catch (const zetax::FetchError& e) {
    std::cerr << "zetax: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "zetax: bad argument: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "zetax: bad argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "zetax: computation failed: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

// Copyright 2026 The orlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orlicz/conjugate_target.hpp"
#include "orlicz/grid_io.hpp"
#include "orlicz/harness.hpp"
#include "orlicz/littlewood_paley.hpp"
#include "orlicz/seminorms.hpp"
#include "orlicz/spec.hpp"

namespace {

using namespace orlicz;

struct Global {
  std::uint64_t seed = 1;
  std::string report;
  std::string format = "json";
  unsigned threads = 1;
};

struct GridOpts {
  int dim = 1;
  std::size_t N = 1024;
  double L = 8.0;
  GridSpec spec() const { return {dim, N, L}; }
};

void add_grid(CLI::App* app, GridOpts& g) {
  app->add_option("--dim", g.dim, "Dimension of generated functions")->check(CLI::IsMember({1, 2}));
  app->add_option("--N", g.N, "Points per axis of generated functions");
  app->add_option("--L", g.L, "Box half-width of generated functions");
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json jnum(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

// --- young ---------------------------------------------------------------

struct YoungOpts {
  std::string A;
  int n = 1;
  double sigma = 0.5;
  std::string out;
  double t_min = 1e-3, t_max = 1e3;
  int points = 61;
};

// Log-spaced samples that hit both ends exactly.
double sample_point(const YoungOpts& o, int i) {
  if (i == 0) return o.t_min;
  if (i == o.points - 1) return o.t_max;
  const double f = static_cast<double>(i) / (o.points - 1);
  return std::exp(std::log(o.t_min) + (std::log(o.t_max) - std::log(o.t_min)) * f);
}

int young_target(const Global& g, const YoungOpts& o) {
  const auto A = parse_young(o.A);
  const SmoothnessParams P(o.n, o.sigma);
  const auto T = target(A, P);
  const double ti = t_infinity(A, P);
  std::ostringstream csv;
  csv << "t,value\n";
  for (int i = 0; i < o.points; ++i) {
    const double t = sample_point(o, i);
    csv << num(t) << "," << num(T(t)) << "\n";
  }
  if (o.out.empty()) std::cout << csv.str();
  else write_text(o.out, csv.str());
  if (!g.report.empty()) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = "young target";
    j["young"] = A.describe();
    j["n"] = o.n;
    j["sigma"] = o.sigma;
    j["t_infinity"] = jnum(ti);
    j["samples"] = o.points;
    write_text(g.report, j.dump(2) + "\n");
  }
  std::cerr << "target of " << A.describe() << ": t_infinity = " << num(ti) << "\n";
  return 0;
}

int young_check(const Global& g, const YoungOpts& o) {
  const auto A = parse_young(o.A);
  const auto ax = check_axioms(A);
  const auto C = A.conjugate();
  std::cout << A.describe() << ": axioms " << (ax.ok ? "ok" : "violated: " + ax.reason) << "\n";
  if (!g.report.empty()) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = "young check";
    j["young"] = A.describe();
    j["axioms_ok"] = ax.ok;
    if (!ax.ok) j["reason"] = ax.reason;
    j["domain_end"] = jnum(A.domain_end());
    j["conjugate_domain_end"] = jnum(C.domain_end());
    write_text(g.report, j.dump(2) + "\n");
  }
  return ax.ok ? 0 : 1;
}

int young_conjugate(const YoungOpts& o) {
  const auto C = parse_young(o.A).conjugate();
  std::ostringstream csv;
  csv << "t,value\n";
  for (int i = 0; i < o.points; ++i) {
    const double t = sample_point(o, i);
    csv << num(t) << "," << num(C(t)) << "\n";
  }
  if (o.out.empty()) std::cout << csv.str();
  else write_text(o.out, csv.str());
  return 0;
}

// --- norm ------------------------------------------------------------------

struct NormOpts {
  std::string space = "W";
  std::string A = "power(2)";
  double s = 0.5;
  std::string fn;
  GridOpts grid;
};

int norm(const Global& g, const NormOpts& o) {
  const Space sp = parse_space(o.space);
  const auto A = parse_young(o.A);
  const auto u = parse_function(o.fn, o.grid.spec());
  const FractionalOrder s(o.s);
  const double value = full_norm(sp, A, s, u);
  std::cout << num(value) << "\n";
  if (!g.report.empty()) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = "norm";
    j["space"] = space_name(sp);
    j["young"] = A.describe();
    j["s"] = o.s;
    j["function"] = o.fn;
    j["grid"] = {{"dim", u.dim()}, {"N", u.points()}, {"spacing", u.spacing()}, {"origin", u.origin()}};
    j["digest"] = digest(o.fn, u.values());
    j["value"] = jnum(value);
    if (g.format == "csv") {
      write_text(g.report, "space,young,s,function,value\n" + space_name(sp) + "," + A.describe() +
                               "," + num(o.s) + ",\"" + o.fn + "\"," + num(value) + "\n");
    } else {
      write_text(g.report, j.dump(2) + "\n");
    }
  }
  return 0;
}

// --- lp --------------------------------------------------------------------

struct LpOpts {
  std::string fn;
  std::string out = "blocks";
  GridOpts grid;
};

int lp_blocks(const Global& g, const LpOpts& o) {
  const auto u = parse_function(o.fn, o.grid.spec());
  const DyadicPartition P(u);
  const auto blocks = blocks_with_remainder(P, u);
  std::filesystem::create_directories(o.out);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = "lp blocks";
  j["function"] = o.fn;
  j["i_max"] = P.i_max();
  auto& files = j["blocks"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const bool rest = i + 1 == blocks.size();
    const std::string name = rest ? "remainder.csv" : "block_" + std::to_string(i) + ".csv";
    save_grid((std::filesystem::path(o.out) / name).string(), blocks[i]);
    files.push_back({{"file", name}, {"index", rest ? -1 : static_cast<int>(i)},
                     {"max_abs", blocks[i].max_abs()}});
  }
  write_text((std::filesystem::path(o.out) / "blocks.json").string(), j.dump(2) + "\n");
  if (!g.report.empty()) write_text(g.report, j.dump(2) + "\n");
  std::cout << blocks.size() - 1 << " blocks and a remainder written to " << o.out << "\n";
  return 0;
}

// --- verify / experiment ---------------------------------------------------

struct SuiteOpts {
  std::string name;
  std::string sub;
  std::size_t cases = 0;
  std::size_t N = 0;
  double L = 8.0;
  std::string young;
  double s = 0.0, r = 0.0;
};

int suite(const Global& g, const SuiteOpts& o) {
  SuiteConfig cfg;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.sub = o.sub;
  cfg.cases = o.cases;
  cfg.N = o.N;
  cfg.L = o.L;
  cfg.young = o.young;
  cfg.s = o.s;
  cfg.r = o.r;
  const auto rep = run_suite(o.name, cfg);
  std::printf("%s: %s (%zu cases, %zu failed, %.1f s)\n", rep.suite.c_str(),
              rep.pass() ? "PASS" : "FAIL", rep.cases.size(), rep.failed_cases(), rep.wall_seconds);
  for (const auto& [name, ok] : rep.checks)
    if (!ok) std::printf("  check failed: %s\n", name.c_str());
  if (!g.report.empty()) write_text(g.report, g.format == "csv" ? report_csv(rep) : report_json(rep));
  return rep.pass() ? 0 : 1;
}

void add_suite_options(CLI::App* app, SuiteOpts& o) {
  app->add_option("--cases", o.cases, "Number of cases (suite default when 0)");
  app->add_option("--N", o.N, "Coarse grid size (suite default when 0)");
  app->add_option("--L", o.L, "Box half-width");
  app->add_option("--A", o.young, "Young function spec");
  app->add_option("--s", o.s, "Smoothness s");
  app->add_option("--r", o.r, "Target smoothness r (embedding)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz and fractional Orlicz-Sobolev norm toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file");
  Global g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--report", g.report, "Write a report to this path");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads for suites")->check(CLI::PositiveNumber);

  int status = 0;

  auto* young = app.add_subcommand("young", "Young function tools");
  young->require_subcommand(1);
  YoungOpts yo;
  auto* target_cmd = young->add_subcommand("target", "Tabulate the optimal target A_{n/sigma}");
  target_cmd->add_option("--A", yo.A, "Young function spec")->required();
  target_cmd->add_option("--n", yo.n, "Dimension")->check(CLI::PositiveNumber);
  target_cmd->add_option("--sigma", yo.sigma, "Smoothness gap in (0, n)");
  target_cmd->add_option("--out", yo.out, "CSV output (stdout when absent)");
  target_cmd->add_option("--tmin", yo.t_min, "Smallest sample")->check(CLI::PositiveNumber);
  target_cmd->add_option("--tmax", yo.t_max, "Largest sample")->check(CLI::PositiveNumber);
  target_cmd->add_option("--points", yo.points, "Log-spaced samples")->check(CLI::Range(2, 1000000));
  target_cmd->callback([&] { status = young_target(g, yo); });
  auto* conj_cmd = young->add_subcommand("conjugate", "Tabulate the Young conjugate");
  conj_cmd->add_option("--A", yo.A, "Young function spec")->required();
  conj_cmd->add_option("--out", yo.out, "CSV output (stdout when absent)");
  conj_cmd->add_option("--tmin", yo.t_min, "Smallest sample")->check(CLI::PositiveNumber);
  conj_cmd->add_option("--tmax", yo.t_max, "Largest sample")->check(CLI::PositiveNumber);
  conj_cmd->add_option("--points", yo.points, "Log-spaced samples")->check(CLI::Range(2, 1000000));
  conj_cmd->callback([&] { status = young_conjugate(yo); });
  auto* check_cmd = young->add_subcommand("check", "Check the Young axioms");
  check_cmd->add_option("--A", yo.A, "Young function spec")->required();
  check_cmd->callback([&] { status = young_check(g, yo); });

  NormOpts no;
  auto* norm_cmd = app.add_subcommand("norm", "Evaluate a norm of a grid function");
  norm_cmd->add_option("--space", no.space, "LA, W, B, O or F")
      ->check(CLI::IsMember({"LA", "W", "B", "O", "F"}));
  norm_cmd->add_option("--A", no.A, "Young function spec");
  norm_cmd->add_option("--s", no.s, "Smoothness (not an integer)");
  norm_cmd->add_option("--fn", no.fn, "Function spec or grid file")->required();
  add_grid(norm_cmd, no.grid);
  norm_cmd->callback([&] { status = norm(g, no); });

  LpOpts lo;
  auto* lp = app.add_subcommand("lp", "Littlewood-Paley tools");
  lp->require_subcommand(1);
  auto* blocks_cmd = lp->add_subcommand("blocks", "Write the dyadic blocks of a function");
  blocks_cmd->add_option("--fn", lo.fn, "Function spec or grid file")->required();
  blocks_cmd->add_option("--out", lo.out, "Output directory");
  add_grid(blocks_cmd, lo.grid);
  blocks_cmd->callback([&] { status = lp_blocks(g, lo); });

  SuiteOpts vo;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("name", vo.name, "Suite")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--suite", vo.sub, "Convolution sub-suite")
      ->check(CLI::IsMember({"l1", "discrete", "sharp", "oneil"}));
  add_suite_options(verify, vo);
  verify->callback([&] { status = suite(g, vo); });

  SuiteOpts eo;
  auto* experiment = app.add_subcommand("experiment", "Run an up-to-constants experiment");
  experiment->add_option("name", eo.name, "embedding or equivalence")
      ->required()
      ->check(CLI::IsMember({"embedding", "equivalence"}));
  add_suite_options(experiment, eo);
  experiment->callback([&] { status = suite(g, eo); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "orlicz: " << e.what() << "\n";
    return 2;
  }
  return status;
}

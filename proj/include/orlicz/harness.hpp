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
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/spec.hpp"

namespace orlicz {

/// Name of the generator behind every random draw in the harness.
inline constexpr const char* kPrngName = "mt19937_64";

/// A seeded family of test functions. Members cycle through `generators`
/// (gaussian, bump, hat, trigpoly, step) with parameters drawn per member.
struct FunctionFamily {
  std::vector<std::string> generators{"gaussian"};
  std::size_t count = 30;
  GridSpec grid;
  std::uint64_t seed = 1;
  int trig_degree = 8;
  int step_breaks = 4;
};

/// Member specs in the grammar of parse_function; they do not depend on N,
/// so the same family can be resampled on a finer grid.
std::vector<std::string> family_specs(const FunctionFamily& family);

/// Samples every member. Throws SpecError when a gaussian or bump member
/// keeps less than 99.99% of its L1 mass a width away from the boundary.
std::vector<GridFunction> generate(const FunctionFamily& family);

/// Share of the L1 mass of u at distance >= margin from the box boundary.
double interior_mass_fraction(const GridFunction& u, double margin);

struct CaseRecord {
  std::size_t index = 0;
  std::string label;
  std::string digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double margin = 0.0;
  bool pass = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  std::map<std::string, double> tolerances;
  /// Recorded constants (ratio bounds, calibrated c, slopes).
  std::map<std::string, double> constants;
  /// Suite-level checks beyond the per-case records.
  std::map<std::string, bool> checks;
  std::vector<CaseRecord> cases;
  /// Optional ratio table, emitted as CSV.
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table_rows;
  double wall_seconds = 0.0;

  bool pass() const;
  double min_ratio() const;
  double max_ratio() const;
  double median_ratio() const;
  double worst_margin() const;
  std::size_t failed_cases() const;
};

/// Knobs shared by the suites; zero or empty fields take suite defaults.
struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  int dim = 1;
  std::size_t N = 0;
  double L = 8.0;
  unsigned threads = 1;
  /// Convolution sub-suite: l1, discrete, sharp or oneil.
  std::string sub;
  /// Young function spec; empty keeps the suite's own choice.
  std::string young;
  double s = 0.0;
  double r = 0.0;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite: young-axioms, convolution, hardy, oracle, equivalence,
/// embedding, examples, lp or invariance. Numerical failures inside a case
/// fail that case only.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// JSON report, schema 1. Timing is left out when `timing` is false so that
/// equal runs give equal bytes.
std::string report_json(const SuiteReport& report, bool timing = true);
/// Per-case CSV, or the ratio table when the suite has one.
std::string report_csv(const SuiteReport& report);

/// 64-bit FNV-1a digest of a label and sample values, as 16 hex digits.
std::string digest(const std::string& label, std::span<const double> values = {});

/// Brute-force O(N^2) Gagliardo double sum over ordered pairs of cells at
/// offsets below N, at least one inside the box (values 0 outside), for a
/// scalar 1D grid function.
double brute_gagliardo_modular(const YoungFunction& A, double s, const GridFunction& u, double lambda);
/// Brute-force Besov sum over dyadic shifts 2^k cells, k = 0..log2 N.
double brute_besov_modular(const YoungFunction& A, double s, const GridFunction& u, double lambda);

}  // namespace orlicz

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
#include "orlicz/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace orlicz {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json jnum(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

std::vector<std::string> family_specs(const FunctionFamily& f) {
  if (f.generators.empty()) throw SpecError("family has no generators");
  std::mt19937_64 rng(f.seed);
  const double L = f.grid.L;
  std::uniform_real_distribution<double> centre(-0.25 * L, 0.25 * L), width(L / 32.0, L / 8.0);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < f.count; ++k) {
    const std::string& g = f.generators[k % f.generators.size()];
    if (g == "gaussian" || g == "bump" || g == "hat") {
      const double cx = centre(rng), cy = centre(rng), w = width(rng);
      out.push_back(g + "(" + num(cx) + "," + (f.grid.dim == 2 ? num(cy) + "," : "") + num(w) + ")");
    } else if (g == "trigpoly") {
      out.push_back("trigpoly(" + std::to_string(f.trig_degree) + "," + std::to_string(rng()) + ")");
    } else if (g == "step") {
      out.push_back("step(" + std::to_string(f.step_breaks) + "," + std::to_string(rng()) + ")");
    } else {
      throw SpecError("unknown generator '" + g + "'");
    }
  }
  return out;
}

double interior_mass_fraction(const GridFunction& u, double margin) {
  const double lo = u.origin(), hi = u.origin() + u.spacing() * static_cast<double>(u.points());
  const std::size_t N = u.points();
  const auto inner = [&](double x) { return std::min(x - lo, hi - x) >= margin; };
  double in = 0.0, total = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double a = std::fabs(u[k]);
    total += a;
    const bool ok = inner(u.coord(k % N)) && (u.dim() == 1 || inner(u.coord(k / N)));
    if (ok) in += a;
  }
  return total > 0.0 ? in / total : 1.0;
}

std::vector<GridFunction> generate(const FunctionFamily& f) {
  std::vector<GridFunction> out;
  for (const auto& spec : family_specs(f)) {
    auto u = parse_function(spec, f.grid);
    const auto c = SpecCall::parse(spec);
    if (c.name == "gaussian" || c.name == "bump") {
      const double w = parse_number(c.args.back());
      if (interior_mass_fraction(u, w) < 0.9999)
        throw SpecError(spec + ": less than 99.99% of the mass lies a width inside the box");
    }
    for (double v : u.values())
      if (!std::isfinite(v)) throw SpecError(spec + ": non-finite sample");
    out.push_back(std::move(u));
  }
  return out;
}

std::string digest(const std::string& label, std::span<const double> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const unsigned char* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  feed(reinterpret_cast<const unsigned char*>(label.data()), label.size());
  feed(reinterpret_cast<const unsigned char*>(values.data()), values.size_bytes());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool SuiteReport::pass() const {
  if (cases.empty() && checks.empty()) return false;
  for (const auto& c : cases)
    if (!c.pass) return false;
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

std::size_t SuiteReport::failed_cases() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass; }));
}

namespace {

std::vector<double> finite_ratios(const std::vector<CaseRecord>& cases) {
  std::vector<double> r;
  for (const auto& c : cases)
    if (std::isfinite(c.ratio)) r.push_back(c.ratio);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

double SuiteReport::min_ratio() const {
  const auto r = finite_ratios(cases);
  return r.empty() ? std::nan("") : r.front();
}

double SuiteReport::max_ratio() const {
  const auto r = finite_ratios(cases);
  return r.empty() ? std::nan("") : r.back();
}

double SuiteReport::median_ratio() const {
  const auto r = finite_ratios(cases);
  if (r.empty()) return std::nan("");
  const std::size_t m = r.size() / 2;
  return r.size() % 2 ? r[m] : 0.5 * (r[m - 1] + r[m]);
}

double SuiteReport::worst_margin() const {
  double w = kInf;
  for (const auto& c : cases) w = std::min(w, std::isnan(c.margin) ? -kInf : c.margin);
  return cases.empty() ? std::nan("") : w;
}

std::string report_json(const SuiteReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["seed"] = r.seed;
  j["prng"] = kPrngName;
  j["config"] = r.config;
  auto& tol = j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.tolerances) tol[k] = jnum(v);
  auto& con = j["constants"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.constants) con[k] = jnum(v);
  j["checks"] = r.checks;
  j["aggregate"] = {{"cases", r.cases.size()},
                    {"failed", r.failed_cases()},
                    {"min_ratio", jnum(r.min_ratio())},
                    {"max_ratio", jnum(r.max_ratio())},
                    {"median_ratio", jnum(r.median_ratio())},
                    {"worst_margin", jnum(r.worst_margin())}};
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json e;
    e["index"] = c.index;
    e["label"] = c.label;
    e["digest"] = c.digest;
    e["lhs"] = jnum(c.lhs);
    e["rhs"] = jnum(c.rhs);
    e["ratio"] = jnum(c.ratio);
    e["margin"] = jnum(c.margin);
    e["pass"] = c.pass;
    if (!c.note.empty()) e["note"] = c.note;
    cases.push_back(std::move(e));
  }
  if (!r.table_header.empty()) j["table"] = {{"header", r.table_header}, {"rows", r.table_rows}};
  if (timing) j["timing"] = {{"wall_seconds", r.wall_seconds}};
  return j.dump(2) + "\n";
}

std::string report_csv(const SuiteReport& r) {
  std::ostringstream out;
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  if (!r.table_header.empty()) {
    row(r.table_header);
    for (const auto& cells : r.table_rows) row(cells);
    return out.str();
  }
  row({"index", "label", "digest", "lhs", "rhs", "ratio", "margin", "pass"});
  for (const auto& c : r.cases) {
    std::string label = c.label;
    std::replace(label.begin(), label.end(), ',', ';');
    row({std::to_string(c.index), label, c.digest, num(c.lhs), num(c.rhs), num(c.ratio),
         num(c.margin), c.pass ? "1" : "0"});
  }
  return out.str();
}

double brute_gagliardo_modular(const YoungFunction& A, double s, const GridFunction& u,
                               double lambda) {
  if (u.dim() != 1) throw GridError("brute-force oracle is one-dimensional");
  const long N = static_cast<long>(u.points());
  const double h = u.spacing(), mu = u.cell_measure();
  auto at = [&](long i) { return i >= 0 && i < N ? u[static_cast<std::size_t>(i)] : 0.0; };
  double total = 0.0;
  for (long x = -N; x < 2 * N; ++x)
    for (long y = -N; y < 2 * N; ++y) {
      const long d = std::labs(x - y);
      if (d == 0 || d >= N) continue;
      if ((x < 0 || x >= N) && (y < 0 || y >= N)) continue;
      const double dist = h * static_cast<double>(d);
      total += mu * mu * A(std::fabs(at(x) - at(y)) / (lambda * std::pow(dist, s))) / dist;
    }
  return total;
}

double brute_besov_modular(const YoungFunction& A, double s, const GridFunction& u, double lambda) {
  if (u.dim() != 1) throw GridError("brute-force oracle is one-dimensional");
  const long N = static_cast<long>(u.points());
  const double h = u.spacing(), mu = u.cell_measure();
  auto at = [&](long i) { return i >= 0 && i < N ? u[static_cast<std::size_t>(i)] : 0.0; };
  double total = 0.0;
  for (long m = 1; m <= N; m *= 2) {
    const double rho = h * static_cast<double>(m);
    for (long x = -m; x < N; ++x)
      total += mu * std::log(2.0) * A(std::fabs(at(x + m) - at(x)) / (lambda * std::pow(rho, s)));
  }
  return total;
}

}  // namespace orlicz

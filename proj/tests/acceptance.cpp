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
// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "orlicz/harness.hpp"

namespace {

using orlicz::SuiteConfig;
using orlicz::SuiteReport;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string summary(const SuiteReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %zu cases, %zu failed, %.1f s", r.suite.c_str(), r.cases.size(),
                r.failed_cases(), r.wall_seconds);
  std::string out = buf;
  for (const auto& [name, ok] : r.checks)
    if (!ok) out += ", check " + name + " failed";
  return out;
}

SuiteReport run(const std::string& name, const std::string& sub = {}) {
  SuiteConfig cfg;
  cfg.sub = sub;
  return orlicz::run_suite(name, cfg);
}

Outcome require(const SuiteReport& r, std::size_t cases, double seconds = 0.0) {
  Outcome o{r.pass() && r.cases.size() >= cases, summary(r)};
  if (seconds > 0.0 && r.wall_seconds >= seconds) {
    o.pass = false;
    o.detail += ", over the " + std::to_string(static_cast<int>(seconds)) + " s budget";
  }
  return o;
}

Outcome merge(std::vector<Outcome> parts) {
  Outcome o;
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

Outcome young_calculus() { return require(run("young-axioms"), 20, 30.0); }

Outcome conjugate_exponents() { return require(run("examples"), 15); }

Outcome convolution() {
  return merge({require(run("convolution", "discrete"), 1000), require(run("convolution", "l1"), 100),
                require(run("convolution", "oneil"), 50)});
}

Outcome hardy() {
  const auto r = run("hardy");
  auto o = require(r, 100);
  o.pass = o.pass && r.checks.count("closed_form") && r.checks.at("closed_form");
  return o;
}

Outcome oracle() { return require(run("oracle"), 10); }

Outcome equivalence() {
  const auto r = run("equivalence");
  auto o = require(r, 30, 180.0);
  const auto it = r.constants.find("C");
  if (it != r.constants.end()) o.detail += ", C = " + std::to_string(it->second);
  return o;
}

Outcome embedding() {
  auto o = require(run("embedding"), 30);
  // Classical cross-check: A = t^2, n = 1, s - r = 0.4 gives exponent 10.
  const auto ex = run("examples");
  bool found = false;
  for (const auto& c : ex.cases)
    if (c.label.rfind("power(2) n=1 ", 0) == 0 && std::fabs(c.rhs - 10.0) < 1e-9) {
      found = true;
      o.pass = o.pass && c.pass;
      o.detail += "; target exponent " + std::to_string(c.lhs) + " vs 10";
    }
  o.pass = o.pass && found;
  return o;
}

Outcome littlewood_paley() { return require(run("lp"), 10); }

Outcome invariance() { return require(run("invariance"), 1); }

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"young calculus", young_calculus},
      {"sobolev conjugate exponents", conjugate_exponents},
      {"exact-constant convolution", convolution},
      {"hardy inequality", hardy},
      {"brute-force oracle", oracle},
      {"norm equivalence", equivalence},
      {"main embedding", embedding},
      {"littlewood-paley structure", littlewood_paley},
      {"scaling and translation", invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}

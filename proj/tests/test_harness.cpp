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

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "orlicz/harness.hpp"
#include "orlicz/spec.hpp"

using namespace orlicz;

TEST_CASE("a fixed seed reproduces the report byte for byte") {
  SuiteConfig cfg;
  cfg.seed = 11;
  cfg.cases = 40;
  cfg.sub = "discrete";
  const auto a = report_json(run_suite("convolution", cfg), false);
  cfg.threads = 3;
  const auto b = report_json(run_suite("convolution", cfg), false);
  CHECK(a.find("\"threads\"") != std::string::npos);
  // Thread count lands in the config block only.
  const auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j["config"].erase("threads");
    return j.dump();
  };
  CHECK(strip(a) == strip(b));
  cfg.seed = 12;
  CHECK(strip(report_json(run_suite("convolution", cfg), false)) != strip(a));
}

TEST_CASE("reports carry the schema and encode non-finite numbers as strings") {
  SuiteReport r;
  r.suite = "demo";
  CaseRecord c;
  c.lhs = INFINITY;
  c.rhs = NAN;
  r.cases.push_back(c);
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["cases"][0]["lhs"] == "inf");
  CHECK(j["cases"][0]["rhs"] == "nan");
  CHECK(j.contains("timing"));
  CHECK_FALSE(nlohmann::json::parse(report_json(r, false)).contains("timing"));
}

TEST_CASE("families are deterministic and keep their mass inside the box") {
  FunctionFamily fam;
  fam.generators = {"gaussian", "bump", "hat"};
  fam.count = 9;
  fam.grid = {1, 256, 8.0};
  fam.seed = 4;
  const auto specs = family_specs(fam);
  REQUIRE(specs.size() == 9);
  CHECK(specs == family_specs(fam));
  const auto us = generate(fam);
  for (std::size_t k = 0; k < us.size(); ++k) {
    CHECK(us[k].max_abs() > 0.5);
    CHECK(interior_mass_fraction(us[k], 0.0) == doctest::Approx(1.0));
    CHECK(digest(specs[k], us[k].values()) == digest(specs[k], parse_function(specs[k], fam.grid).values()));
  }
  fam.seed = 5;
  CHECK(family_specs(fam) != specs);
}

TEST_CASE("interior mass fraction sees profiles cut by the box") {
  const GridSpec g{1, 256, 8.0};
  CHECK(interior_mass_fraction(parse_function("gaussian(0,0.5)", g), 0.5) > 0.9999);
  CHECK(interior_mass_fraction(parse_function("gaussian(7.5,1)", g), 1.0) < 0.9999);
}

TEST_CASE("digests depend on label and values") {
  const std::vector<double> v{1.0, 2.0};
  CHECK(digest("a", v).size() == 16);
  CHECK(digest("a", v) == digest("a", v));
  CHECK(digest("a", v) != digest("b", v));
  CHECK(digest("a", v) != digest("a", std::vector<double>{1.0, 2.5}));
}

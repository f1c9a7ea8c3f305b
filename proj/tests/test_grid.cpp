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
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "orlicz/families.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/grid_io.hpp"

using namespace orlicz;

namespace {

GridFunction random_trig(std::mt19937_64& rng, int dim, std::size_t N, double L) {
  std::normal_distribution<double> g;
  const double a1 = g(rng), a2 = g(rng), b1 = g(rng), c = g(rng);
  return GridFunction::sample(dim, N, L, [&](double x, double y) {
    return c + a1 * std::cos(M_PI * x / L) + a2 * std::sin(2 * M_PI * x / L) +
           b1 * std::cos(3 * M_PI * y / L);
  });
}

}  // namespace

TEST_CASE("grid construction") {
  const auto g = GridFunction::zeros(1, 16, 2.0);
  CHECK(g.spacing() == 0.25);
  CHECK(g.coord(0) == -2.0);
  CHECK(g.cell_measure() == 0.25);
  CHECK(GridFunction::zeros(2, 16, 2.0).cell_measure() == 0.0625);
  CHECK_THROWS_AS(GridFunction(3, 4, 1.0, 0.0, std::vector<double>(64)), GridError);
  CHECK_THROWS_AS(GridFunction(1, 4, 1.0, 0.0, std::vector<double>(5)), GridError);
  CHECK_THROWS_AS(GridFunction::zeros(1, 12, 1.0).require_sampled_box(), GridError);
  CHECK_NOTHROW(GridFunction::zeros(1, 16, 1.0).require_sampled_box());
}

TEST_CASE("modular") {
  const auto A = YoungFunction::power_log(2.0, 1.0);
  // Indicator of a measure-1 block: four cells of width 1/4.
  auto u = GridFunction::zeros(1, 16, 2.0);
  for (std::size_t i = 4; i < 8; ++i) u.mutable_values()[i] = 1.0;
  CHECK(modular(A, u) == doctest::Approx(A(1.0)).epsilon(1e-15));
  CHECK(modular(A, GridFunction::zeros(1, 16, 2.0)) == 0.0);
  // int exp(-2 x^2) dx = sqrt(pi / 2)
  const auto gauss = GridFunction::sample(1, 4096, 8.0, [](double x, double) { return std::exp(-x * x); });
  CHECK(modular(YoungFunction::power(2.0), gauss) == doctest::Approx(std::sqrt(M_PI / 2)).epsilon(1e-6));
  // Past the domain of linf(1) the modular is infinite.
  CHECK(std::isinf(modular(YoungFunction::linf(1.0), u.scaled(2.0))));
  CHECK(modular(YoungFunction::linf(1.0), u) == 0.0);
}

TEST_CASE("Luxemburg norm") {
  std::mt19937_64 rng(1);
  auto u = GridFunction::zeros(1, 16, 2.0);
  for (std::size_t i = 4; i < 8; ++i) u.mutable_values()[i] = 1.0;
  for (const auto& A : {YoungFunction::power(3.0), YoungFunction::exponential(),
                        YoungFunction::power_log(1.5, 2.0)})
    CHECK(luxemburg_norm(A, u) == doctest::Approx(1.0 / A.inverse(1.0)).epsilon(1e-10));
  CHECK(luxemburg_norm(YoungFunction::power(2.0), GridFunction::zeros(1, 16, 1.0)) == 0.0);

  for (int i = 0; i < 5; ++i) {
    const auto v = random_trig(rng, 1 + i % 2, 64, 3.0);
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      double s = 0.0;
      for (double x : v.values()) s += std::pow(std::fabs(x), p);
      const double oracle = std::pow(v.cell_measure() * s, 1.0 / p);
      CHECK(luxemburg_norm(YoungFunction::power(p), v) == doctest::Approx(oracle).epsilon(1e-9));
    }
    const auto A = random_young(rng);
    const double n1 = luxemburg_norm(A, v);
    CHECK(luxemburg_norm(A, v.scaled(-3.5)) == doctest::Approx(3.5 * n1).epsilon(1e-9));
    // Certificate of the bracket.
    CHECK(modular(A, v.scaled(1.0 / n1)) <= 1.0);
    CHECK(modular(A, v.scaled(1.0 / (n1 * (1 - 1e-9)))) > 1.0);
  }
  // linf(b): the norm is max|u| / b.
  const auto w = random_trig(rng, 1, 32, 1.0);
  CHECK(luxemburg_norm(YoungFunction::linf(2.0), w) == doctest::Approx(w.max_abs() / 2.0).epsilon(1e-9));
}

TEST_CASE("rearrangement, u** and Lorentz norms") {
  GridFunction u(1, 3, 1.0, 0.0, {3.0, 1.0, 2.0});
  const auto r = rearrangement(u);
  CHECK(r.values == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(r.widths == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(double_star(r, 2.0) == 2.5);
  CHECK(double_star(r, 3.0) == 2.0);
  CHECK(double_star(r, 0.5) == 3.0);
  CHECK_THROWS_AS(double_star(r, 0.0), GridError);
  double prev = kInf;
  for (double t = 0.1; t < 5.0; t += 0.1) {
    CHECK(double_star(r, t) <= prev * (1 + 1e-15));
    prev = double_star(r, t);
  }

  // Indicator of measure m: p m^{1/p}.
  GridFunction ind(1, 8, 0.5, 0.0, {1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(lorentz_p1(ind, 3.0) == doctest::Approx(3.0 * std::pow(1.5, 1.0 / 3.0)).epsilon(1e-14));
  // Steps (2, 1) on unit cells, p = 2: int_0^1 2 t^{-1/2} + int_1^2 t^{-1/2}.
  GridFunction two(1, 2, 1.0, 0.0, {1.0, 2.0});
  CHECK(lorentz_p1(two, 2.0) == doctest::Approx(4.0 + 2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-14));
  CHECK(lorentz_p1(two.scaled(3.0), 2.0) == doctest::Approx(3.0 * lorentz_p1(two, 2.0)).epsilon(1e-14));
}

TEST_CASE("rearrangement invariance and Hardy-Littlewood consistency") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto u = random_trig(rng, 2, 16, 1.0);
    const auto A = random_young(rng);
    CHECK(luxemburg_norm(A, rearrangement(u)) == luxemburg_norm(A, u));
    CHECK(luxemburg_norm(A, u.translated(3, -5)) == luxemburg_norm(A, u));
    const auto r = rearrangement(u);
    CHECK(r.integral_to(r.total_measure()) == doctest::Approx(u.l1_norm()).epsilon(1e-14));
  }
}

TEST_CASE("Hoelder pairing and monotonicity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto u = random_trig(rng, 1, 64, 2.0);
    const auto v = random_trig(rng, 1, 64, 2.0);
    const auto A = random_young(rng);
    INFO(A.describe());
    double pair = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) pair += std::fabs(u[k] * v[k]);
    pair *= u.cell_measure();
    CHECK(pair <= 2.0 * luxemburg_norm(A, u) * luxemburg_norm(A.conjugate(), v) * (1 + 1e-9));

    auto smaller = u;
    for (auto& x : smaller.mutable_values()) x *= 0.5 + 0.5 * std::cos(x);
    CHECK(luxemburg_norm(A, smaller) <= luxemburg_norm(A, u));
  }
}

TEST_CASE("domination transfers to norms") {
  std::mt19937_64 rng(4);
  const auto A = YoungFunction::power(2.0).scaled(4.0);
  const auto B = YoungFunction::power(2.0);
  const auto d = dominates(A, B, Regime::global);
  REQUIRE(d.has_value());
  for (int i = 0; i < 5; ++i) {
    const auto u = random_trig(rng, 1, 32, 1.0);
    CHECK(luxemburg_norm(B, u) <= d->c * luxemburg_norm(A, u) * (1 + 1e-9));
  }
}

TEST_CASE("sequence norms") {
  RealSequence a{-2, {0.5, -1.0, 0.25}};
  CHECK(a.l1_norm() == 1.75);
  const double p2 = luxemburg_norm(YoungFunction::power(2.0), a);
  CHECK(p2 == doctest::Approx(std::sqrt(0.25 + 1.0 + 0.0625)).epsilon(1e-10));
  CHECK(modular(YoungFunction::power(1.0), a) == 1.75);
}

TEST_CASE("grid file formats round-trip") {
  std::mt19937_64 rng(5);
  for (int dim : {1, 2}) {
    const auto u = random_trig(rng, dim, 16, 2.5);
    std::stringstream csv;
    write_grid_csv(csv, u);
    const auto back = read_grid_csv(csv);
    CHECK(back.same_grid(u));
    for (std::size_t k = 0; k < u.size(); ++k) CHECK(back[k] == u[k]);

    std::stringstream bin;
    write_grid_binary(bin, u);
    CHECK(bin.str().size() == 32 + 8 * u.size());
    CHECK(bin.str().substr(0, 4) == "OGF1");
    const auto back2 = read_grid_binary(bin);
    CHECK(back2.same_grid(u));
    for (std::size_t k = 0; k < u.size(); ++k) CHECK(back2[k] == u[k]);
  }
  std::stringstream bad("x,value\n0,1\n0.5,2\n1.5,3\n");
  CHECK_THROWS_AS(read_grid_csv(bad), GridError);
  std::stringstream junk("garbage");
  CHECK_THROWS_AS(read_grid_binary(junk), GridError);

  const auto path = std::filesystem::temp_directory_path() / "orlicz_grid_test.ogf";
  const auto u = random_trig(rng, 1, 8, 1.0);
  save_grid(path.string(), u);
  CHECK(load_grid(path.string()).same_grid(u));
  std::filesystem::remove(path);
}

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
#include <random>

#include "orlicz/seminorms.hpp"

using namespace orlicz;

namespace {

GridFunction hat(std::size_t N, double L, Extension ext = Extension::zero) {
  return GridFunction::sample(1, N, L, [](double x, double) { return std::max(0.0, 1.0 - std::fabs(x)); }, ext);
}

GridFunction gaussian(int dim, std::size_t N, double L, double cx = 0.0, double w = 1.0) {
  return GridFunction::sample(dim, N, L, [&](double x, double y) {
    return std::exp(-((x - cx) * (x - cx) + (dim == 2 ? y * y : 0.0)) / (w * w));
  });
}

// Value with zero outside [0, N).
double at0(const GridFunction& u, long i) {
  return i >= 0 && i < static_cast<long>(u.points()) ? u[static_cast<std::size_t>(i)] : 0.0;
}

// Modular of t^2 at lambda = 1 by the O(N^2) sum over ordered pairs with
// |x - y| below N cells, at least one point in the box.
double brute_gagliardo_1d(const GridFunction& u, double s, bool zero_ext) {
  const long N = static_cast<long>(u.points());
  const double h = u.spacing();
  const long lo = zero_ext ? -N : 0, hi = zero_ext ? 2 * N : N;
  double sum = 0.0;
  for (long x = lo; x < hi; ++x)
    for (long y = lo; y < hi; ++y) {
      if (x == y || std::labs(x - y) >= N) continue;
      const bool in_x = x >= 0 && x < N, in_y = y >= 0 && y < N;
      if (!in_x && !in_y) continue;
      const double r = h * static_cast<double>(std::labs(x - y));
      const double d = (at0(u, x) - at0(u, y)) / std::pow(r, s);
      sum += d * d * h * h / r;
    }
  return sum;
}

GridFunction bump(int dim, std::size_t N, double L, double radius) {
  return GridFunction::sample(dim, N, L, [&](double x, double y) {
    const double r2 = (x * x + y * y) / (radius * radius);
    return r2 < 1.0 ? (1.0 - r2) * (1.0 - r2) : 0.0;
  });
}

}  // namespace

TEST_CASE("fractional order") {
  const FractionalOrder s(2.25);
  CHECK(s.intpart() == 2);
  CHECK(s.fracpart() == 0.25);
  CHECK_THROWS(FractionalOrder(1.0));
  CHECK_THROWS(FractionalOrder(-0.5));
  CHECK(parse_space("B") == Space::B);
  CHECK(space_name(Space::LA) == "LA");
  CHECK_THROWS(parse_space("Q"));
}

TEST_CASE("finite-difference gradients") {
  const auto lin = GridFunction::sample(2, 16, 2.0, [](double x, double y) { return 3.0 * x + 0.0 * y + 1.0; });
  const auto g = grad_k(lin, 1);
  REQUIRE(g.size() == 2);
  CHECK(g[0].points() == 14);
  for (double v : g[0].values()) CHECK(v == doctest::Approx(3.0).epsilon(1e-13));
  for (double v : g[1].values()) CHECK(v == 0.0);
  CHECK(grad_k(lin, 2).size() == 4);
  const auto id = grad_k(lin, 0);
  CHECK(std::equal(id[0].values().begin(), id[0].values().end(), lin.values().begin()));
  CHECK_THROWS_AS(grad_k(GridFunction::zeros(1, 8, 1.0), 3), GridError);

  // Centered differences of sin: error h^2/6 |cos'''| at most.
  double prev = 0.0;
  for (std::size_t N : {64u, 128u}) {
    const auto u = GridFunction::sample(1, N, M_PI, [](double x, double) { return std::sin(x); });
    const auto d = grad_k(u, 1)[0];
    double err = 0.0;
    for (std::size_t i = 0; i < d.points(); ++i) err = std::max(err, std::fabs(d[i] - std::cos(d.coord(i))));
    const double h = u.spacing();
    CHECK(err <= h * h / 6.0 * (1.0 + 1e-6));
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.01));
    prev = err;
  }
}

TEST_CASE("Gagliardo seminorm") {
  const auto A = YoungFunction::power(2.0);
  const FractionalOrder s(0.3);
  const auto c = GridFunction::sample(1, 32, 1.0, [](double, double) { return 2.0; }, Extension::restricted);
  CHECK(gagliardo(A, s, c).value == 0.0);

  for (bool zero_ext : {true, false}) {
    const auto u = hat(64, 2.0, zero_ext ? Extension::zero : Extension::restricted);
    const double m1 = brute_gagliardo_1d(u, 0.3, zero_ext);
    const auto r = gagliardo(A, s, u);
    CHECK(r.value == doctest::Approx(std::sqrt(m1)).epsilon(1e-10));
    // The modular is m1 / lambda^2 for A = t^2.
    CHECK(r.modular_at_value == doctest::Approx(m1 / (r.value * r.value)).epsilon(1e-12));
  }

  const auto u2 = bump(2, 16, 4.0, 2.0);
  const auto r0 = gagliardo(YoungFunction::power_log(1.5, 1.0), s, u2);
  CHECK(gagliardo(YoungFunction::power_log(1.5, 1.0), s, u2.translated(2, -1)).value == r0.value);
  const auto u1 = bump(1, 128, 8.0, 3.0);
  CHECK(gagliardo(A, s, u1.translated(-7)).value == gagliardo(A, s, u1).value);
  CHECK(gagliardo(A, s, u1.scaled(3.0)).value == doctest::Approx(3.0 * gagliardo(A, s, u1).value).epsilon(1e-9));
}

TEST_CASE("scaling law for power functions") {
  // u(2x) has seminorm 2^{s - n/p} times that of u.
  const double p = 3.0;
  const FractionalOrder s(0.75);
  const auto A = YoungFunction::power(p);
  const auto u = gaussian(1, 1024, 8.0);
  const auto v = GridFunction::sample(1, 1024, 8.0, [](double x, double) { return std::exp(-4.0 * x * x); });
  const double ratio = gagliardo(A, s, v).value / gagliardo(A, s, u).value;
  CHECK(ratio == doctest::Approx(std::pow(2.0, 0.75 - 1.0 / p)).epsilon(0.02));
}

TEST_CASE("higher-order Gagliardo seminorm") {
  const auto A = YoungFunction::power(2.0);
  const FractionalOrder s(1.5);
  const auto aff = GridFunction::sample(1, 32, 2.0, [](double x, double) { return 2.0 * x - 1.0; }, Extension::restricted);
  CHECK(gagliardo_higher(A, s, aff).value == doctest::Approx(0.0).scale(1e-12));

  // Quadratic: centered differences give 2x + 1 exactly on the interior.
  const auto q = GridFunction::sample(1, 64, 2.0, [](double x, double) { return x * x + x; }, Extension::restricted);
  auto d = GridFunction::sample(1, 64, 2.0, [](double x, double) { return 2.0 * x + 1.0; }, Extension::restricted);
  std::vector<double> inner(d.values().begin() + 1, d.values().end() - 1);
  const GridFunction dq(1, 62, d.spacing(), d.origin() + d.spacing(), inner, Extension::restricted);
  const double m1 = brute_gagliardo_1d(dq, 0.5, false);
  const auto r = gagliardo_higher(A, s, q);
  CHECK(r.value == doctest::Approx(std::sqrt(m1)).epsilon(1e-9));

  // With [s] = 0 the higher-order form is the plain seminorm.
  const auto u = hat(64, 2.0);
  CHECK(gagliardo_higher(A, FractionalOrder(0.4), u).value == gagliardo(A, FractionalOrder(0.4), u).value);
}

TEST_CASE("Besov seminorm") {
  const auto A = YoungFunction::power(2.0);
  const FractionalOrder s(0.4);
  const auto c = GridFunction::sample(1, 32, 1.0, [](double, double) { return -1.0; }, Extension::restricted);
  CHECK(besov(A, s, c).value == 0.0);

  // Direct shell sum for t^2: modular = m1 / lambda^2.
  const auto u = hat(64, 2.0);
  double m1 = 0.0;
  for (long shift = 1; shift <= 64; shift *= 2) {
    const double rho = u.spacing() * static_cast<double>(shift);
    for (long x = -shift; x < 64; ++x) {
      const double d = (at0(u, x + shift) - at0(u, x)) / std::pow(rho, 0.4);
      m1 += d * d * u.spacing() * std::log(2.0);
    }
  }
  const auto r = besov(A, s, u);
  CHECK(r.value == doctest::Approx(std::sqrt(m1)).epsilon(1e-10));
  CHECK(r.modular_at_value == doctest::Approx(m1 / (r.value * r.value)).epsilon(1e-12));
  CHECK(besov(A, s, bump(1, 64, 2.0, 1.0).translated(5)).value == besov(A, s, bump(1, 64, 2.0, 1.0)).value);

  // Two-sided comparison with the Gagliardo seminorm over a family.
  double lo = kInf, hi = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double w = 0.4 + 0.2 * k;
    const auto g = gaussian(1, 256, 8.0, 0.3 * k - 1.0, w);
    const double q = gagliardo(A, s, g).value / besov(A, s, g).value;
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  CHECK(lo > 0.2);
  CHECK(hi < 5.0);
  CHECK(hi / lo < 2.0);
}

TEST_CASE("oscillation seminorm") {
  const auto A = YoungFunction::power(2.0);
  const auto lin = GridFunction::sample(1, 64, 4.0, [](double x, double) { return 1.0 - 0.5 * x; }, Extension::restricted);
  CHECK(oscillation(A, FractionalOrder(1.5), lin).value <= 1e-12);
  const auto quad2 = GridFunction::sample(2, 32, 4.0, [](double x, double y) { return x * x - x * y + 2.0; },
                                          Extension::restricted);
  CHECK(oscillation(A, FractionalOrder(2.5), quad2).value <= 1e-11);
  CHECK(oscillation(A, FractionalOrder(0.5), quad2).value > 0.1);

  const auto u = bump(1, 128, 8.0, 3.0);
  const auto r = oscillation(A, FractionalOrder(0.5), u);
  CHECK(r.value > 0.0);
  // r = 1, 1/2, 1/4 and one cell.
  CHECK(r.discretization.at("scales") == 4.0);
  CHECK(oscillation(A, FractionalOrder(0.5), u.translated(9)).value == r.value);
  const auto u2 = bump(2, 32, 4.0, 2.0);
  CHECK(oscillation(A, FractionalOrder(0.5), u2.translated(-3, 2)).value ==
        oscillation(A, FractionalOrder(0.5), u2).value);
}

TEST_CASE("full norms") {
  const auto A = YoungFunction::power(2.0);
  const FractionalOrder s(0.5);
  const auto z = GridFunction::zeros(1, 64, 4.0);
  for (Space sp : {Space::LA, Space::W, Space::B, Space::O, Space::F}) CHECK(full_norm(sp, A, s, z) == 0.0);
  const auto u = gaussian(1, 128, 8.0);
  const double la = luxemburg_norm(A, u);
  CHECK(full_norm(Space::LA, A, s, u) == la);
  CHECK(full_norm(Space::W, A, s, u) >= la);
  CHECK(full_norm(Space::W, A, s, u) == doctest::Approx(la + gagliardo(A, s, u).value).epsilon(1e-15));
  const FractionalOrder s2(1.5);
  const double w2 = full_norm(Space::W, A, s2, u);
  CHECK(w2 > la + luxemburg_norm(A, pointwise_norm(grad_k(u, 1))));
  // Amplitude invariance of the ratios by homogeneity.
  for (Space sp : {Space::W, Space::B, Space::O, Space::F})
    CHECK(full_norm(sp, A, s, u.scaled(5.0)) == doctest::Approx(5.0 * full_norm(sp, A, s, u)).epsilon(1e-9));
}

TEST_CASE("Hardy-type inequality") {
  const auto A = YoungFunction::power(2.0);
  const PiecewiseLinear zero{{0.0, 1.0}, {0.0, 0.0}};
  const auto r0 = hardy_check(A, 0.5, zero);
  CHECK(r0.lhs == 0.0);
  CHECK(r0.rhs == 0.0);

  const PiecewiseLinear ramp{{0.0, 1.0}, {0.0, 1.0}};
  CHECK(ramp(0.5) == 0.5);
  CHECK(ramp(1.5) == 0.0);
  CHECK(ramp.integral_to(3.0) == 0.5);
  const auto r = hardy_check(A, 0.5, ramp);
  CHECK(r.lhs == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-9));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> val(0.0, 2.0), len(0.05, 1.0), sd(0.1, 0.9);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    // Step function vanishing near 0 so both sides are finite.
    PiecewiseLinear f;
    double x = len(rng);
    f.x.push_back(x);
    f.y.push_back(0.0);
    for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k) {
      const double v = val(rng);
      f.x.push_back(x);
      f.y.push_back(v);
      x += len(rng);
      f.x.push_back(x);
      f.y.push_back(v);
    }
    const YoungFunction B = i % 2 ? YoungFunction::power(1.0 + val(rng)) : YoungFunction::power_log(1.5, 1.0);
    const auto h = hardy_check(B, sd(rng), f);
    if (!(h.margin >= -1e-6 * h.rhs)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("gagliardo modular at a given lambda") {
  const auto A = YoungFunction::power_log(2.0, 1.0);
  const auto u = GridFunction::sample(1, 64, 4.0, [](double x, double) { return std::exp(-x * x); });
  const GridFunction comps[] = {u};
  const auto r = gagliardo(A, 0.4, comps);
  CHECK(gagliardo_modular(A, 0.4, comps, r.value) == r.modular_at_value);
  CHECK(gagliardo_modular(A, 0.4, comps, 2 * r.value) < 1.0);
  CHECK(gagliardo_modular(A, 0.4, comps, 0.5 * r.value) > 1.0);
  CHECK_THROWS(gagliardo_modular(A, 0.4, comps, 0.0));
}

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
#include <vector>

#include "orlicz/quadrature.hpp"

using namespace orlicz;

TEST_CASE("gauss16 integrates polynomials of degree 31 exactly") {
  // int_0^2 x^31 dx = 2^32 / 32
  const double v = quad::gauss16([](double x) { return std::pow(x, 31); }, 0.0, 2.0);
  CHECK(v == doctest::Approx(std::exp2(32) / 32).epsilon(1e-13));
  double wsum = 0.0;
  for (double w : quad::gl16_weights()) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("adaptive handles kinks through breakpoints") {
  auto f = [](double x) { return std::fabs(x - 0.3); };
  const std::vector<double> br{0.3};
  const double exact = 0.5 * (0.09 + 0.49);
  CHECK(quad::adaptive_with_breaks(f, 0.0, 1.0, br) == doctest::Approx(exact).epsilon(1e-14));
  CHECK(quad::adaptive(f, 0.0, 1.0, 1e-12) == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("head integrals: convergent, divergent") {
  auto r = quad::integrate_head([](double x) { return 1.0 / std::sqrt(x); }, 1.0);
  CHECK(r.status == quad::Status::converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));

  r = quad::integrate_head([](double x) { return std::pow(x, -0.9); }, 4.0);
  CHECK(r.status == quad::Status::converged);
  CHECK(r.value == doctest::Approx(10.0 * std::pow(4.0, 0.1)).epsilon(1e-10));

  r = quad::integrate_head([](double x) { return 1.0 / x; }, 1.0);
  CHECK(r.status == quad::Status::divergent);
  r = quad::integrate_head([](double x) { return std::pow(x, -1.5); }, 1.0);
  CHECK(r.status == quad::Status::divergent);
}

TEST_CASE("head integral of a slowly convergent integrand is never called divergent") {
  // int_0^{1/2} dx / (x log^2(1/x)) = 1 / log 2
  auto f = [](double x) { const double l = std::log(1.0 / x); return 1.0 / (x * l * l); };
  const auto r = quad::integrate_head(f, 0.5);
  CHECK(r.status != quad::Status::divergent);
}

TEST_CASE("tail integrals") {
  auto r = quad::integrate_tail([](double x) { return 1.0 / (x * x); }, 1.0);
  CHECK(r.status == quad::Status::converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));

  r = quad::integrate_tail([](double x) { return 1.0 / x; }, 1.0);
  CHECK(r.status == quad::Status::divergent);

  const auto g = [](double x) { return std::exp(-x * x); };
  const double total = quad::integrate_head(g, 1.0).value + quad::integrate_tail(g, 1.0).value;
  CHECK(total == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-12));
}

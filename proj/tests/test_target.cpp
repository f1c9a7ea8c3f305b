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

#include "orlicz/conjugate_target.hpp"

using namespace orlicz;

namespace {

// Least-squares slope of log f against log t over a log grid.
template <class F>
double loglog_slope(F f, double lo, double hi, int points = 61) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < points; ++i) {
    const double x = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1);
    const double y = std::log(f(std::exp(x)));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (points * sxy - sx * sy) / (points * sxx - sx * sx);
}

YoungFunction P(double p) { return YoungFunction::power(p); }

}  // namespace

TEST_CASE("smoothness parameters are validated") {
  CHECK_THROWS_AS(SmoothnessParams(2, 0.0), YoungError);
  CHECK_THROWS_AS(SmoothnessParams(2, 2.0), YoungError);
  CHECK_THROWS_AS(SmoothnessParams(0, 0.5), YoungError);
  const SmoothnessParams p(2, 0.5);
  CHECK(p.exponent() == doctest::Approx(1.0 / 3.0));
  CHECK(p.outer() == doctest::Approx(0.75));
}

TEST_CASE("admissibility of powers: p < n / sigma") {
  const SmoothnessParams S(2, 0.5);
  CHECK(admissible(P(1.0), S));
  CHECK(admissible(P(3.9), S));
  CHECK_FALSE(admissible(P(4.0), S));
  CHECK_FALSE(admissible(P(5.0), S));
  CHECK_FALSE(admissible(YoungFunction::linf(1.0), S));
  CHECK_THROWS_AS(target(P(4.0), S), InadmissibleError);
  CHECK_THROWS_AS(h_value(P(4.0), S, 1.0), InadmissibleError);
}

TEST_CASE("H of a power against its closed form") {
  for (auto [n, sigma, p] : {std::tuple{2, 0.5, 1.0}, std::tuple{1, 0.4, 2.0}, std::tuple{2, 1.2, 1.5}}) {
    const SmoothnessParams S(n, sigma);
    const double c = std::pow((n - sigma) / (n - sigma * p), (n - sigma) / n);
    const double e = (n - sigma * p) / n;
    CHECK(h_value(P(p), S, 0.0) == 0.0);
    for (double t : {1e-3, 0.5, 1.0, 7.0, 1e4})
      CHECK(h_value(P(p), S, t) == doctest::Approx(c * std::pow(t, e)).epsilon(1e-9));
  }
  CHECK(h_value(P(1.0), SmoothnessParams(2, 0.5), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("H is non-decreasing") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const SmoothnessParams S(1 + (i % 2), 0.2 + 0.6 * U(rng));
    const double crit = S.n / S.sigma;
    const double p0 = 1.0 + (std::min(crit, 6.0) - 1.0) * 0.9 * U(rng);
    const auto A = YoungFunction::spliced(P(p0), YoungFunction::power_log(p0 + U(rng), U(rng)), 0.5 + U(rng));
    CHECK(h_value(A, S, 2.0) >= h_value(A, S, 1.0));
  }
}

TEST_CASE("t_infinity") {
  CHECK(std::isinf(t_infinity(P(2.0), SmoothnessParams(2, 0.5))));
  // zero branch t^{3/2}, infinity branch t^6, n = 2, sigma = 1/2:
  // int_0^1 t^{-1/6} + int_1^inf t^{-5/3} = 6/5 + 3/2.
  const auto A = YoungFunction::spliced(P(1.5), P(6.0), 1.0);
  const SmoothnessParams S(2, 0.5);
  CHECK(t_infinity(A, S) == doctest::Approx(std::pow(2.7, 0.75)).epsilon(1e-9));
  // n = 1, sigma = 1/2: int_0^inf t / (e^t - 1) dt = pi^2 / 6.
  const double e = t_infinity(YoungFunction::exponential(), SmoothnessParams(1, 0.5));
  CHECK(e == doctest::Approx(std::sqrt(M_PI * M_PI / 6.0)).epsilon(1e-9));
}

TEST_CASE("target of a power") {
  // n = 1, sigma = 0.4, A = t^2: H(t) = 3^{0.6} t^{0.2}, target (s / 3^{0.6})^{10}.
  const auto T = target(P(2.0), SmoothnessParams(1, 0.4));
  for (double s : {1e-3, 0.1, 1.0, 2.5, 10.0})
    CHECK(T(s) == doctest::Approx(std::pow(s / std::pow(3.0, 0.6), 10.0)).epsilon(1e-9));

  const auto T2 = target(P(1.0), SmoothnessParams(2, 0.5));
  CHECK(loglog_slope([&](double s) { return T2(s); }, 1e-3, 1e3) == doctest::Approx(4.0 / 3.0).epsilon(1e-3));
  CHECK(check_axioms(T2).ok);
  CHECK(std::isinf(T2.domain_end()));
}

TEST_CASE("composition identity target(H(t)) = A(t)") {
  const std::vector<std::pair<YoungFunction, SmoothnessParams>> cases{
      {YoungFunction::power_log(2.0, 1.0), SmoothnessParams(2, 0.5)},
      {YoungFunction::spliced(P(1.5), P(6.0), 1.0), SmoothnessParams(2, 0.5)},
      {YoungFunction::exponential(), SmoothnessParams(1, 0.5)},
      {YoungFunction::polyline({{0, 0}, {1, 1}, {1, 2}, {3, 2}, {4, 5}}, 2.0), SmoothnessParams(1, 0.3)},
  };
  for (const auto& [A, S] : cases) {
    INFO(A.describe());
    const auto T = target(A, S);
    const double ti = t_infinity(A, S);
    for (double t = 1e-3; t < 1e3; t *= 1.37) {
      const double a = A(t);
      const double h = h_value(A, S, t);
      // Near a finite t_infinity, H flattens below double resolution.
      if (!std::isfinite(a) || h > (1 - 1e-6) * ti) break;
      CHECK(T(h) == doctest::Approx(a).epsilon(1e-7));
    }
    CHECK(check_axioms(T, 1e-4, 1e2).ok);
  }
}

TEST_CASE("target is infinite beyond a finite t_infinity") {
  const auto A = YoungFunction::spliced(P(1.5), P(6.0), 1.0);
  const SmoothnessParams S(2, 0.5);
  const auto T = target(A, S);
  const double ti = t_infinity(A, S);
  CHECK(T.domain_end() == doctest::Approx(ti).epsilon(1e-9));
  CHECK(std::isinf(T(ti * (1 + 1e-6))));
  CHECK(std::isinf(T(2 * ti)));
  CHECK(std::isfinite(T(0.99 * ti)));
}

TEST_CASE("critical splice grows like exp(t^{n/(n-sigma)})") {
  const SmoothnessParams S(1, 0.4);
  const auto A = YoungFunction::spliced(P(1.5), P(2.5), 1.0);
  const auto T = target(A, S);
  const double slope = loglog_slope([&](double s) { return T.log_eval(s); }, 20.0, 45.0, 21);
  CHECK(slope == doctest::Approx(5.0 / 3.0).epsilon(2e-2));
}

TEST_CASE("scaling covariance") {
  const SmoothnessParams S(2, 0.4);
  const double M = 3.0;
  const auto T = target(P(2.0), S);
  const auto TM = target(P(2.0).scaled(M), S);
  for (double t = 1e-3; t < 1e3; t *= 3.1)
    CHECK(TM(t) == doctest::Approx(T(t * std::pow(M, -S.sigma / S.n)) / M).epsilon(1e-6));
}

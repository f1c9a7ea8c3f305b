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
#include "orlicz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace orlicz::quad {
namespace {

struct Rule {
  std::array<double, 16> x{};
  std::array<double, 16> w{};

  Rule() {
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      const double wt = 2.0 / ((1.0 - z * z) * dp * dp);
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = wt;
      w[n - 1 - i] = wt;
    }
  }
};

const Rule& rule() {
  static const Rule r;
  return r;
}

// Each call spends one unit of `budget`; once it is gone the current
// estimate is accepted (guards against noisy integrands).
double adaptive_rec(const Integrand& f, double a, double b, double whole,
                    double rel_tol, int depth, int& budget) {
  const double m = 0.5 * (a + b);
  const double left = gauss16(f, a, m);
  const double right = gauss16(f, m, b);
  const double both = left + right;
  if (!std::isfinite(both)) return both;
  if (depth <= 0 || --budget <= 0 || std::abs(both - whole) <= rel_tol * std::abs(both) ||
      std::abs(both - whole) <= std::numeric_limits<double>::min() ||
      m <= a || m >= b) {
    return both;
  }
  return adaptive_rec(f, a, m, left, rel_tol, depth - 1, budget) +
         adaptive_rec(f, m, b, right, rel_tol, depth - 1, budget);
}

constexpr double kShrinkFactor = 0.99;
constexpr int kStallPanels = 8;
constexpr int kMaxPanels = 2000;

// Shared driver for head and tail integration. `panel(k)` returns the k-th
// dyadic panel sum; `exhausted(k)` reports that the panel endpoints have left
// the representable range.
template <class Panel, class Exhausted>
HalfLineResult dyadic_sum(Panel panel, Exhausted exhausted, double rel_tol) {
  HalfLineResult out;
  std::vector<double> sums;
  double total = 0.0;
  double prev_ratio = std::numeric_limits<double>::quiet_NaN();
  int stall = 0;
  bool stall_strict = true;  // every stalled ratio is >= 1, i.e. no shrink at all
  int tiny_run = 0;
  for (int k = 0; k < kMaxPanels; ++k) {
    if (exhausted(k)) {
      // Ran off the floating-point range: accept if the geometric remainder
      // is negligible, otherwise the answer is not trustworthy.
      const double last = sums.empty() ? 0.0 : sums.back();
      const double r = prev_ratio;
      if (last == 0.0 || (std::isfinite(r) && r < kShrinkFactor &&
                          last * r / (1.0 - r) <= 1e-6 * total)) {
        if (last != 0.0) total += last * r / (1.0 - r);
        out.value = total;
        out.status = Status::converged;
      } else {
        out.value = total;
        out.status = Status::inconclusive;
      }
      out.panels = k;
      return out;
    }
    const double s = panel(k);
    out.panels = k + 1;
    if (std::isnan(s)) {
      out.value = s;
      out.status = Status::inconclusive;
      return out;
    }
    if (!std::isfinite(s) || !std::isfinite(total + s)) {
      out.value = std::numeric_limits<double>::infinity();
      out.status = Status::divergent;
      return out;
    }
    total += s;
    sums.push_back(s);

    if (total > 0.0 && s <= 1e-3 * rel_tol * total) {
      if (++tiny_run >= 3) {
        out.value = total;
        out.status = Status::converged;
        return out;
      }
    } else {
      tiny_run = 0;
    }
    if (sums.size() < 2) continue;
    const double prev = sums[sums.size() - 2];
    if (prev <= 0.0) {
      // Leading zero panels (integrand vanishing on a whole panel) carry no
      // growth information.
      stall = 0;
      stall_strict = true;
      prev_ratio = std::numeric_limits<double>::quiet_NaN();
      if (s == 0.0 && total == 0.0 && k >= 64) {
        out.value = 0.0;
        out.status = Status::converged;
        return out;
      }
      continue;
    }
    const double r = s / prev;
    if (r >= kShrinkFactor) {
      if (stall == 0) stall_strict = true;
      ++stall;
      if (r < 1.0 - 1e-9) stall_strict = false;
      if (stall >= kStallPanels) {
        out.value = stall_strict ? std::numeric_limits<double>::infinity() : total;
        out.status = stall_strict ? Status::divergent : Status::inconclusive;
        return out;
      }
    } else {
      stall = 0;
      if (std::isfinite(prev_ratio) && std::abs(r - prev_ratio) <= 1e-10 * r) {
        // Geometric regime reached: the remainder is summed in closed form.
        out.value = total + s * r / (1.0 - r);
        out.status = Status::converged;
        return out;
      }
      if (s * r / (1.0 - r) <= rel_tol * total) {
        out.value = total + s * r / (1.0 - r);
        out.status = Status::converged;
        return out;
      }
    }
    prev_ratio = r;
  }
  out.value = total;
  out.status = Status::inconclusive;
  return out;
}

}  // namespace

std::span<const double> gl16_nodes() { return rule().x; }
std::span<const double> gl16_weights() { return rule().w; }

double gauss16(const Integrand& f, double a, double b) {
  const auto& r = rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 16; ++i) sum += r.w[i] * f(c + h * r.x[i]);
  return sum * h;
}

double adaptive(const Integrand& f, double a, double b, double rel_tol,
                int max_depth) {
  if (!(b > a)) return 0.0;
  int budget = 4000;
  return adaptive_rec(f, a, b, gauss16(f, a, b), rel_tol, max_depth, budget);
}

double adaptive_with_breaks(const Integrand& f, double a, double b,
                            std::span<const double> breaks, double rel_tol) {
  if (!(b > a)) return 0.0;
  std::vector<double> pts{a};
  for (double x : breaks)
    if (x > a && x < b) pts.push_back(x);
  std::sort(pts.begin() + 1, pts.end());
  pts.push_back(b);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    sum += adaptive(f, pts[i], pts[i + 1], rel_tol);
  return sum;
}

HalfLineResult integrate_head(const Integrand& f, double a, double rel_tol) {
  auto panel = [&](int k) {
    const double hi = std::ldexp(a, -k);
    return adaptive(f, 0.5 * hi, hi, rel_tol);
  };
  auto exhausted = [&](int k) { return std::ldexp(a, -k - 1) < 1e-300; };
  return dyadic_sum(panel, exhausted, rel_tol);
}

HalfLineResult integrate_tail(const Integrand& f, double a, double rel_tol) {
  auto panel = [&](int k) {
    const double lo = std::ldexp(a, k);
    return adaptive(f, lo, 2.0 * lo, rel_tol);
  };
  auto exhausted = [&](int k) { return std::ldexp(a, k + 1) > 1e300; };
  return dyadic_sum(panel, exhausted, rel_tol);
}

}  // namespace orlicz::quad

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
#include "orlicz/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orlicz {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Magnitudes of the samples, each with the given weight, in canonical order.
WeightedValues sorted_magnitudes(std::span<const double> values, double weight) {
  WeightedValues out;
  for (double x : values) {
    if (std::isnan(x)) throw GridError("NaN sample");
    if (x != 0.0) out.add(std::fabs(x), weight);
  }
  out.canonicalize();
  return out;
}

WeightedValues from_rearrangement(const StepRearrangement& r) {
  WeightedValues out;
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    if (r.values[k] == 0.0 || r.widths[k] == 0.0) continue;
    out.add(std::fabs(r.values[k]), r.widths[k]);
  }
  return out;
}

double weighted_modular(const YoungFunction& A, const WeightedValues& m, double scale) {
  double sum = 0.0;
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    const double a = A(m.values[k] / scale);
    if (a == kInf) return kInf;
    sum += m.weights[k] * a;
  }
  return sum;
}

double weighted_luxemburg(const YoungFunction& A, const WeightedValues& m, double rel_tol) {
  if (m.values.empty()) return 0.0;
  const double top = *std::max_element(m.values.begin(), m.values.end());
  if (top == 0.0) return 0.0;
  const double inv = A.inverse(1.0 / m.total_weight());
  double hint = top;
  if (std::isfinite(inv) && inv > 0.0) hint = top / inv;
  return luxemburg_infimum([&](double lambda) { return weighted_modular(A, m, lambda); },
                           hint, rel_tol);
}

}  // namespace

GridFunction::GridFunction(int dim, std::size_t points, double spacing, double origin,
                           std::vector<double> values, Extension ext)
    : dim_(dim),
      points_(points),
      spacing_(spacing),
      origin_(origin),
      ext_(ext),
      values_(std::move(values)) {
  if (dim != 1 && dim != 2) throw GridError("grid dimension must be 1 or 2");
  if (points == 0) throw GridError("grid needs at least one point");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) throw GridError("grid spacing must be positive");
  const std::size_t expected = dim == 1 ? points : points * points;
  if (values_.size() != expected) throw GridError("grid value count does not match its shape");
}

GridFunction GridFunction::zeros(int dim, std::size_t N, double L) {
  if (!(L > 0.0)) throw GridError("box half-width must be positive");
  const std::size_t count = dim == 1 ? N : N * N;
  return GridFunction(dim, N, 2.0 * L / static_cast<double>(N), -L,
                      std::vector<double>(count, 0.0));
}

GridFunction GridFunction::sample(int dim, std::size_t N, double L,
                                  const std::function<double(double, double)>& f,
                                  Extension ext) {
  GridFunction g = zeros(dim, N, L);
  g.ext_ = ext;
  if (dim == 1) {
    for (std::size_t i = 0; i < N; ++i) g.values_[i] = f(g.coord(i), 0.0);
  } else {
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) g.values_[i + N * j] = f(g.coord(i), g.coord(j));
  }
  return g;
}

double GridFunction::cell_measure() const { return dim_ == 1 ? spacing_ : spacing_ * spacing_; }

bool GridFunction::same_grid(const GridFunction& other) const {
  return dim_ == other.dim_ && points_ == other.points_ && spacing_ == other.spacing_ &&
         origin_ == other.origin_;
}

void GridFunction::require_sampled_box() const {
  if (!is_power_of_two(points_) || points_ < 8)
    throw GridError("grid size must be a power of two and at least 8");
  for (double v : values_)
    if (!std::isfinite(v)) throw GridError("grid values must be finite");
}

GridFunction GridFunction::scaled(double c) const {
  GridFunction g = *this;
  for (double& v : g.values_) v *= c;
  return g;
}

GridFunction GridFunction::translated(long dx, long dy) const {
  GridFunction g = *this;
  const long N = static_cast<long>(points_);
  auto wrap = [N](long i) { return static_cast<std::size_t>(((i % N) + N) % N); };
  if (dim_ == 1) {
    for (long i = 0; i < N; ++i) g.values_[wrap(i + dx)] = values_[static_cast<std::size_t>(i)];
  } else {
    for (long j = 0; j < N; ++j)
      for (long i = 0; i < N; ++i)
        g.values_[wrap(i + dx) + points_ * wrap(j + dy)] =
            values_[static_cast<std::size_t>(i) + points_ * static_cast<std::size_t>(j)];
  }
  return g;
}

GridFunction GridFunction::with_extension(Extension ext) const {
  GridFunction g = *this;
  g.ext_ = ext;
  return g;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

double GridFunction::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += std::fabs(v);
  return s * cell_measure();
}

double GridFunction::lp_norm(double p) const {
  if (p == kInf) return max_abs();
  double s = 0.0;
  for (double v : values_) s += std::pow(std::fabs(v), p);
  return std::pow(s * cell_measure(), 1.0 / p);
}

double RealSequence::l1_norm() const {
  double s = 0.0;
  for (double v : values) s += std::fabs(v);
  return s;
}

double StepRearrangement::total_measure() const {
  return std::accumulate(widths.begin(), widths.end(), 0.0);
}

double StepRearrangement::at(double t) const {
  double m = 0.0;
  for (std::size_t k = 0; k < widths.size(); ++k) {
    m += widths[k];
    if (t < m) return values[k];
  }
  return 0.0;
}

double StepRearrangement::integral_to(double t) const {
  double m = 0.0, s = 0.0;
  for (std::size_t k = 0; k < widths.size() && m < t; ++k) {
    const double w = std::min(widths[k], t - m);
    s += w * values[k];
    m += widths[k];
  }
  return s;
}

void WeightedValues::canonicalize() {
  std::vector<std::size_t> order;
  order.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::isnan(values[k])) throw GridError("NaN sample");
    if (values[k] != 0.0 && weights[k] != 0.0) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return weights[a] > weights[b];
  });
  std::vector<double> v(order.size()), w(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    v[k] = values[order[k]];
    w[k] = weights[order[k]];
  }
  values = std::move(v);
  weights = std::move(w);
}

double WeightedValues::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double modular(const YoungFunction& A, const WeightedValues& m) {
  return weighted_modular(A, m, 1.0);
}

double luxemburg_norm(const YoungFunction& A, const WeightedValues& m, double rel_tol) {
  return weighted_luxemburg(A, m, rel_tol);
}

double modular(const YoungFunction& A, const GridFunction& u) {
  return weighted_modular(A, sorted_magnitudes(u.values(), u.cell_measure()), 1.0);
}

double modular(const YoungFunction& A, const RealSequence& a) {
  return weighted_modular(A, sorted_magnitudes(a.values, 1.0), 1.0);
}

double modular(const YoungFunction& A, const StepRearrangement& r) {
  return weighted_modular(A, from_rearrangement(r), 1.0);
}

double luxemburg_norm(const YoungFunction& A, const GridFunction& u, double rel_tol) {
  return weighted_luxemburg(A, sorted_magnitudes(u.values(), u.cell_measure()), rel_tol);
}

double luxemburg_norm(const YoungFunction& A, const RealSequence& a, double rel_tol) {
  return weighted_luxemburg(A, sorted_magnitudes(a.values, 1.0), rel_tol);
}

double luxemburg_norm(const YoungFunction& A, const StepRearrangement& r, double rel_tol) {
  return weighted_luxemburg(A, from_rearrangement(r), rel_tol);
}

StepRearrangement rearrangement(const GridFunction& u) {
  const auto m = sorted_magnitudes(u.values(), u.cell_measure());
  return StepRearrangement{m.weights, m.values};
}

double double_star(const StepRearrangement& r, double t) {
  if (!(t > 0.0)) throw GridError("u** needs t > 0");
  return r.integral_to(t) / t;
}

double lorentz_p1(const StepRearrangement& r, double p) {
  if (!(p >= 1.0)) throw GridError("Lorentz exponent must be >= 1");
  double m = 0.0, s = 0.0;
  for (std::size_t k = 0; k < r.widths.size(); ++k) {
    const double next = m + r.widths[k];
    s += r.values[k] * p * (std::pow(next, 1.0 / p) - std::pow(m, 1.0 / p));
    m = next;
  }
  return s;
}

double lorentz_p1(const GridFunction& u, double p) { return lorentz_p1(rearrangement(u), p); }

double luxemburg_infimum(const std::function<double(double)>& modular_at, double hint,
                         double rel_tol) {
  if (!(hint > 0.0) || !std::isfinite(hint)) hint = 1.0;
  // Bracket [lo, hi] with modular(lo) > 1 >= modular(hi).
  double lo = hint, hi = hint;
  double m_lo = modular_at(lo), m_hi = m_lo;
  if (m_hi <= 1.0) {
    for (;;) {
      lo = hi * 0.5;
      m_lo = modular_at(lo);
      if (m_lo > 1.0) break;
      hi = lo;
      m_hi = m_lo;
      if (hi < 1e-300) return 0.0;
    }
  } else {
    for (;;) {
      hi = lo * 2.0;
      m_hi = modular_at(hi);
      if (m_hi <= 1.0) break;
      lo = hi;
      m_lo = m_hi;
      if (lo > 1e300) return kInf;
    }
  }

  // Illinois regula falsi on log(modular) against log(lambda), falling back
  // to bisection when an endpoint modular is 0 or infinite. Once the secant
  // through the true endpoint values puts the root within the tolerance of
  // the newest point, one probe just across it closes the bracket.
  double x_lo = std::log(lo), x_hi = std::log(hi);
  double t_lo = std::log(m_lo), t_hi = m_hi > 0.0 ? std::log(m_hi) : -kInf;
  double y_lo = t_lo, y_hi = t_hi;  // Illinois-weighted copies
  int side = 0;
  auto update = [&](double x, double lambda, double m) {
    const double y = m > 0.0 ? std::log(m) : -kInf;
    if (m > 1.0) {
      lo = lambda;
      x_lo = x;
      y_lo = t_lo = y;
      return -1;
    }
    hi = lambda;
    x_hi = x;
    y_hi = t_hi = y;
    return 1;
  };
  for (int it = 0; it < 200 && (hi - lo) > rel_tol * hi; ++it) {
    double x;
    if (std::isfinite(y_lo) && std::isfinite(y_hi) && y_lo > y_hi) {
      x = x_lo + y_lo * (x_hi - x_lo) / (y_lo - y_hi);
      const double margin = 1e-3 * (x_hi - x_lo);
      x = std::clamp(x, x_lo + margin, x_hi - margin);
    } else {
      x = 0.5 * (x_lo + x_hi);
    }
    const double lambda = std::exp(x);
    const int now = update(x, lambda, modular_at(lambda));
    if (now == side) {
      if (now == 1 && std::isfinite(y_lo)) y_lo *= 0.5;
      if (now == -1 && std::isfinite(y_hi)) y_hi *= 0.5;
    }
    side = now;
    if ((hi - lo) <= rel_tol * hi || !std::isfinite(t_lo) || !std::isfinite(t_hi) || !(t_lo > t_hi))
      continue;
    const double slope = (t_hi - t_lo) / (x_hi - x_lo);
    const double t_now = now == 1 ? t_hi : t_lo;
    const double root = x - t_now / slope;
    if (std::fabs(root - x) < 0.5 * rel_tol) {
      const double xp = root + (now == 1 ? -0.5 : 0.5) * rel_tol;
      if (xp > x_lo && xp < x_hi) {
        const double lp = std::exp(xp);
        update(xp, lp, modular_at(lp));
      }
    }
  }
  return hi;
}

}  // namespace orlicz

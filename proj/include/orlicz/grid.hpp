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

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How a sampled function continues outside its box.
///   zero       - the samples describe a function on R^n vanishing outside;
///   restricted - the function lives on the box only (no outside).
enum class Extension { zero, restricted };

/// Real function sampled at the points origin + i*spacing of a uniform
/// box grid in dimension 1 or 2. Values are stored with the first axis
/// fastest: index = i + points * j.
class GridFunction {
 public:
  GridFunction(int dim, std::size_t points, double spacing, double origin,
               std::vector<double> values, Extension ext = Extension::zero);

  /// Zero function on [-L, L)^n with N points per axis.
  static GridFunction zeros(int dim, std::size_t N, double L);
  /// Samples f(x, y) on [-L, L)^n (y is 0 in dimension 1).
  static GridFunction sample(int dim, std::size_t N, double L,
                             const std::function<double(double, double)>& f,
                             Extension ext = Extension::zero);

  int dim() const { return dim_; }
  std::size_t points() const { return points_; }
  double spacing() const { return spacing_; }
  double origin() const { return origin_; }
  Extension extension() const { return ext_; }
  std::size_t size() const { return values_.size(); }
  double cell_measure() const;
  /// L for boxes of the form [-L, L).
  double half_width() const { return 0.5 * spacing_ * static_cast<double>(points_); }
  double coord(std::size_t i) const { return origin_ + spacing_ * static_cast<double>(i); }

  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  double at(std::size_t i, std::size_t j = 0) const { return values_[i + points_ * j]; }

  bool same_grid(const GridFunction& other) const;
  /// Throws unless this is a sampled box: N a power of two, N >= 8, finite values.
  void require_sampled_box() const;

  GridFunction scaled(double c) const;
  /// Cyclic shift by whole cells (an exact permutation of the samples).
  GridFunction translated(long dx, long dy = 0) const;
  GridFunction with_extension(Extension ext) const;
  double max_abs() const;
  /// mu * sum |u|.
  double l1_norm() const;
  /// Classical L^p norm (mu * sum |u|^p)^{1/p}.
  double lp_norm(double p) const;

 private:
  int dim_;
  std::size_t points_;
  double spacing_;
  double origin_;
  Extension ext_;
  std::vector<double> values_;
};

/// Finitely supported sequence: values[k] sits at index offset + k.
struct RealSequence {
  long offset = 0;
  std::vector<double> values;

  double l1_norm() const;
  long end() const { return offset + static_cast<long>(values.size()); }
};

/// Non-increasing right-continuous step function on [0, total measure):
/// value[k] on [m_k, m_{k+1}) with m_{k+1} - m_k = widths[k].
struct StepRearrangement {
  std::vector<double> widths;
  std::vector<double> values;

  double total_measure() const;
  /// u*(t).
  double at(double t) const;
  /// int_0^t u*.
  double integral_to(double t) const;
};

/// Finite weighted sample of nonnegative values: the discrete measure
/// sum_k weights[k] delta_{values[k]}. Modulars of it are sum_k w_k A(v_k).
struct WeightedValues {
  std::vector<double> values;
  std::vector<double> weights;

  void add(double v, double w) {
    values.push_back(v);
    weights.push_back(w);
  }
  /// Drops zero values and sorts by decreasing value, then weight, so that
  /// sums over equal samples are bit-identical whatever the input order.
  void canonicalize();
  double total_weight() const;
};

double modular(const YoungFunction& A, const WeightedValues& m);
double luxemburg_norm(const YoungFunction& A, const WeightedValues& m, double rel_tol = 1e-10);

/// mu * sum A(|u|), summed in the order of the decreasing rearrangement.
double modular(const YoungFunction& A, const GridFunction& u);
double modular(const YoungFunction& A, const RealSequence& a);
double modular(const YoungFunction& A, const StepRearrangement& r);

/// Luxemburg norm inf{lambda > 0 : modular(u / lambda) <= 1}, to relative
/// tolerance rel_tol. The returned value always satisfies modular <= 1.
double luxemburg_norm(const YoungFunction& A, const GridFunction& u, double rel_tol = 1e-10);
double luxemburg_norm(const YoungFunction& A, const RealSequence& a, double rel_tol = 1e-10);
double luxemburg_norm(const YoungFunction& A, const StepRearrangement& r, double rel_tol = 1e-10);

/// Decreasing rearrangement of |u| over its support, one step per cell.
StepRearrangement rearrangement(const GridFunction& u);

/// u**(t) = (1/t) int_0^t u*.
double double_star(const StepRearrangement& r, double t);

/// int_0^inf u*(t) t^{-1+1/p} dt.
double lorentz_p1(const StepRearrangement& r, double p);
double lorentz_p1(const GridFunction& u, double p);

/// Generic Luxemburg-type infimum: smallest lambda with modular(lambda) <= 1,
/// where `modular` is non-increasing in lambda. `hint` seeds the bracket.
/// Returns 0 when the modular vanishes identically.
double luxemburg_infimum(const std::function<double(double)>& modular, double hint,
                         double rel_tol = 1e-10);

}  // namespace orlicz

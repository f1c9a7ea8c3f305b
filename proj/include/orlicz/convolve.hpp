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

#include <limits>
#include <map>
#include <string>

#include "orlicz/conjugate_target.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

/// One evaluated instance of a convolution inequality lhs <= rhs. The
/// modular form is filled in where the inequality has one.
struct ConvolutionReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double modular_lhs = std::numeric_limits<double>::quiet_NaN();
  double modular_rhs = std::numeric_limits<double>::quiet_NaN();
  std::map<std::string, double> context;

  /// lhs <= rhs (1 + slack), and the same for the modular form if present.
  bool holds(double slack) const;
};

/// (u * v)(x_k) = mu sum_j u(x_k - y_j) v(y_j) on the zero-extended grids,
/// truncated to the common box. Symmetric in u and v bit for bit.
GridFunction conv_grid(const GridFunction& u, const GridFunction& v);

/// (a * b)_i = sum_l a_{i-l} b_l, exactly supported on the sum of the supports.
RealSequence conv_seq(const RealSequence& a, const RealSequence& b);

/// ||u * v||_A <= ||v||_1 ||u||_A, plus the modular form
/// int A(|u * v|) <= int A(||v||_1 |u|).
ConvolutionReport check_l1_bound(const YoungFunction& A, const GridFunction& u,
                                 const GridFunction& v);

/// ||a * b||_{l^A} <= ||a||_1 ||b||_{l^A}, plus the modular form
/// sum A(|a * b|) <= sum A(||a||_1 |b|).
ConvolutionReport check_discrete_bound(const YoungFunction& A, const RealSequence& a,
                                       const RealSequence& b);

/// Ratio ||u * v||_{target} / (||v||_{n/(n-sigma)} ||u||_A), reported as lhs with
/// rhs = 1. With a calibrated constant c > 0 the modular form
/// int target(|u * v| / (c ||v|| M^{sigma/n})) <= M, M = int A(|u|), is filled in.
ConvolutionReport check_sharp_bound(const YoungFunction& A, const SmoothnessParams& P,
                                    const GridFunction& u, const GridFunction& v,
                                    double c = 0.0);
/// Same with a precomputed target of A.
ConvolutionReport check_sharp_bound(const YoungFunction& A, const YoungFunction& target_A,
                                    const SmoothnessParams& P, const GridFunction& u,
                                    const GridFunction& v, double c = 0.0);

/// (u * v)**(t) <= ||v||_{n/(n-sigma)} (t^{(sigma-n)/n} int_0^t u* + int_t^inf u*(r) r^{(sigma-n)/n} dr).
ConvolutionReport oneil_check(const GridFunction& u, const GridFunction& v, double t,
                              const SmoothnessParams& P);

/// int_a^b u*(r) r^gamma dr for a step rearrangement, gamma > -1 (b may be inf).
double weighted_step_integral(const StepRearrangement& r, double a, double b, double gamma);

}  // namespace orlicz

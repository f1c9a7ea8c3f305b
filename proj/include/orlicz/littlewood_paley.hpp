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

#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/seminorms.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Smooth dyadic partition of unity on the frequency lattice of a periodic
/// box [-L, L)^n with N points per axis. Frequencies are xi = pi k / L for
/// k in [-N/2, N/2).
class DyadicPartition {
 public:
  DyadicPartition(int dim, std::size_t N, double L);
  explicit DyadicPartition(const GridFunction& shape);

  /// 1 on [0, 1], 0 on [2, inf), smooth and strictly decreasing in between.
  static double profile(double r);

  int dim() const { return dim_; }
  std::size_t points() const { return N_; }
  double half_width() const { return L_; }
  double nyquist() const;
  int i_max() const { return i_max_; }

  /// phi_i(|xi|): phi_0 = g, phi_i(xi) = g(2^{-i} xi) - g(2^{-i+1} xi).
  double multiplier(int i, double xi_abs) const;
  /// |xi| at every entry of the half-spectrum layout used by the transforms.
  const std::vector<double>& lattice_abs() const { return abs_; }
  /// Signed frequency along the given axis at every half-spectrum entry.
  const std::vector<double>& lattice_axis(int axis) const { return axis_[axis]; }
  /// phi_i on the half-spectrum lattice.
  const std::vector<double>& phi(int i) const { return phi_[static_cast<std::size_t>(i)]; }

 private:
  int dim_;
  std::size_t N_;
  double L_;
  int i_max_;
  std::vector<double> abs_;
  std::vector<double> axis_[2];
  std::vector<std::vector<double>> phi_;
};

/// phi_i(D) u on the periodic box, 0 <= i <= i_max.
GridFunction block(const DyadicPartition& P, const GridFunction& u, int i);

/// The blocks 0..i_max followed by the remainder u - sum of them, which
/// holds the frequencies above 2^{i_max}.
std::vector<GridFunction> blocks_with_remainder(const DyadicPartition& P, const GridFunction& u);

/// Spectral partial derivatives of order k, n^k components indexed like grad_k.
std::vector<GridFunction> spectral_gradient(const DyadicPartition& P, const GridFunction& u, int k);

/// inf{lambda : sum_i modular(A, 2^{is} |block_i u| / lambda) <= 1}; the
/// remainder block carries the weight 2^{(i_max + 1) s}.
double fsa_norm(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u);

struct GradientChainReport {
  /// modular(A, c1 |grad^{[s]} u|).
  double gradient_modular = 0.0;
  /// sum_i modular(A, 2^{i {s}} |phi_i(D) grad^{[s]} u|).
  double gradient_blocks = 0.0;
  /// sum_i modular(A, c2 2^{i s} |phi_i(D) u|).
  double function_blocks = 0.0;
  double c1 = 1.0;
  double c2 = 1.0;

  double first_ratio() const;
  double second_ratio() const;
};

/// Evaluates the gradient/block chain for s > 1 with given constants.
GradientChainReport gradient_block_chain(const YoungFunction& A, const FractionalOrder& s,
                                         const GridFunction& u, double c1 = 1.0, double c2 = 1.0);

}  // namespace orlicz

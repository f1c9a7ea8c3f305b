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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "orlicz/convolve.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Smoothness s > 0 that is not an integer, split as [s] + {s}.
class FractionalOrder {
 public:
  explicit FractionalOrder(double s);

  double value() const { return s_; }
  int intpart() const { return int_; }
  double fracpart() const { return frac_; }

 private:
  double s_;
  int int_;
  double frac_;
};

struct SeminormResult {
  double value = 0.0;
  /// The defining modular evaluated at lambda = value (0 when value is 0).
  double modular_at_value = 0.0;
  /// Cutoffs used by the discretization (scales, offsets, grid sizes).
  std::map<std::string, double> discretization;
};

/// All order-k partial derivatives by centered differences, as n^k
/// components indexed by ordered tuples (first index slowest). Each order
/// shrinks the grid by one cell per side. k = 0 returns {u}.
std::vector<GridFunction> grad_k(const GridFunction& u, int k);

/// Pointwise Euclidean norm of a list of components on a common grid.
GridFunction pointwise_norm(std::span<const GridFunction> components);

/// Discrete Gagliardo-Slobodeckij seminorm for 0 < s < 1: the double sum
/// over grid pairs x != y of mu^2 A(|u(x)-u(y)| / (lambda |x-y|^s)) / |x-y|^n,
/// organised by offsets h with every component of h below N in magnitude.
/// For Extension::zero, pairs with one point outside the box count with the
/// value 0 there.
SeminormResult gagliardo(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u);

/// Same seminorm for a vector-valued function; |u(x) - u(y)| is Euclidean.
SeminormResult gagliardo(const YoungFunction& A, double s, std::span<const GridFunction> components);

/// The Gagliardo double sum itself at a given lambda > 0.
double gagliardo_modular(const YoungFunction& A, double s,
                         std::span<const GridFunction> components, double lambda);

/// Gagliardo seminorm of grad^{[s]} u at order {s}, s > 1.
SeminormResult gagliardo_higher(const YoungFunction& A, const FractionalOrder& s,
                                const GridFunction& u);

/// Besov seminorm for 0 < s < 1 with axis shifts rho = 2^k cells, k = 0..log2 N,
/// and weight log 2 per dyadic shell.
SeminormResult besov(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u);
SeminormResult besov(const YoungFunction& A, double s, std::span<const GridFunction> components);

/// Oscillation seminorm: radii r = 2^{-l} down to one cell, with the inner
/// polynomial infimum replaced by the least-squares fit of degree [s] on the
/// grid ball.
SeminormResult oscillation(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u);

enum class Space { LA, W, B, O, F };

Space parse_space(const std::string& name);
std::string space_name(Space space);

/// Full norm of u in the given space: the Orlicz norm for LA, and for the
/// others the Orlicz norms of grad^k u, k <= [s], plus the seminorm of
/// grad^{[s]} u at order {s}. The O norm follows its own definition,
/// ||u||_A + |u|_O at order s; F delegates to the Littlewood-Paley norm.
double full_norm(Space space, const YoungFunction& A, const FractionalOrder& s,
                 const GridFunction& u);

/// Nonnegative piecewise-linear function on [0, inf) through (x[k], y[k]),
/// zero beyond x.back(). Equal consecutive abscissae encode jumps.
struct PiecewiseLinear {
  std::vector<double> x;
  std::vector<double> y;

  double operator()(double t) const;
  /// int_0^t f, exact.
  double integral_to(double t) const;
};

/// Hardy-type inequality with constant one:
/// lhs = int_0^inf A(t^{-1-s} int_0^t f) dt/t, rhs = int_0^inf A(f(t)/t^s) dt/t.
ConvolutionReport hardy_check(const YoungFunction& A, double s, const PiecewiseLinear& f);

}  // namespace orlicz

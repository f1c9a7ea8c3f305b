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

#include <functional>
#include <span>

namespace orlicz::quad {

using Integrand = std::function<double(double)>;

/// Outcome of an integral over a half-line piece (0, a] or [a, inf).
enum class Status { converged, divergent, inconclusive };

struct HalfLineResult {
  double value = 0.0;
  Status status = Status::converged;
  int panels = 0;
};

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
std::span<const double> gl16_nodes();
std::span<const double> gl16_weights();

/// Single 16-point Gauss-Legendre panel on [a, b].
double gauss16(const Integrand& f, double a, double b);

/// Adaptive bisection of Gauss-Legendre panels until the relative change
/// drops below `rel_tol` (or `max_depth` levels have been used).
double adaptive(const Integrand& f, double a, double b, double rel_tol = 1e-12,
                int max_depth = 40);

/// Adaptive quadrature over [a, b] with extra breakpoints where the
/// integrand is known to be non-smooth. Breakpoints outside (a, b) are ignored.
double adaptive_with_breaks(const Integrand& f, double a, double b,
                            std::span<const double> breaks,
                            double rel_tol = 1e-12);

/// Integral over (0, a] built from dyadic panels [a 2^{-k-1}, a 2^{-k}].
///
/// Panel sums of a regularly varying integrand decay geometrically when the
/// integral converges. Eight successive panel sums that fail to shrink by a
/// factor below 0.99 mark the head divergent; a ratio that settles below 0.99
/// lets the remaining geometric tail be added in closed form.
HalfLineResult integrate_head(const Integrand& f, double a,
                              double rel_tol = 1e-12);

/// Integral over [a, inf) built from dyadic panels [a 2^k, a 2^{k+1}], with
/// the same divergence rule as integrate_head.
HalfLineResult integrate_tail(const Integrand& f, double a,
                              double rel_tol = 1e-12);

}  // namespace orlicz::quad

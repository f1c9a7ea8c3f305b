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

#include "orlicz/young.hpp"

namespace orlicz {

/// Dimension n and smoothness gap sigma in (0, n).
struct SmoothnessParams {
  int n = 1;
  double sigma = 0.5;

  SmoothnessParams() = default;
  SmoothnessParams(int dim, double gap);

  /// sigma / (n - sigma), the power applied to t / A(t).
  double exponent() const { return sigma / (n - sigma); }
  /// (n - sigma) / n, the power applied to the integral.
  double outer() const { return (n - sigma) / static_cast<double>(n); }
  /// Exponent n / (n - sigma) of the kernel space paired with the target.
  double kernel_exponent() const { return n / (n - sigma); }
};

/// A Young function that fails the integrability condition near zero.
class InadmissibleError : public YoungError {
 public:
  using YoungError::YoungError;
};

/// The geometric divergence test could not decide (slowly varying integrand).
class InconclusiveError : public YoungError {
 public:
  using YoungError::YoungError;
};

/// Whether (t / A(t))^{sigma/(n-sigma)} is integrable near 0.
bool admissible(const YoungFunction& A, const SmoothnessParams& P);

/// H(t) = (int_0^t (tau / A(tau))^{sigma/(n-sigma)} dtau)^{(n-sigma)/n}.
double h_value(const YoungFunction& A, const SmoothnessParams& P, double t);

/// lim_{t -> inf} H(t); +inf when the tail integral diverges.
double t_infinity(const YoungFunction& A, const SmoothnessParams& P);

/// The optimal target A_{n/sigma}(t) = A(H^{-1}(t)); +inf beyond t_infinity.
YoungFunction target(const YoungFunction& A, const SmoothnessParams& P);

}  // namespace orlicz

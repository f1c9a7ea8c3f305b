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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised for malformed Young functions and contract violations on their
/// arguments (negative t, non-convex splices, ...).
class YoungError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class YoungKind {
  power,
  power_log,
  power_log_zero,
  exponential,
  linf_gauge,
  tabulated,
  spliced,
  sobolev_conjugate,
  legendre_conjugate,
};

/// Vertex of a monotone density graph. Consecutive vertices with equal `t`
/// encode a jump of the density, equal `a` a flat piece.
struct DensityVertex {
  double t = 0.0;
  double a = 0.0;
  friend bool operator==(const DensityVertex&, const DensityVertex&) = default;
};

/// Behaviour shared by every representation of a Young function. Values are
/// extended reals: +inf is returned beyond a finite domain endpoint.
class YoungBase {
 public:
  virtual ~YoungBase() = default;
  virtual YoungKind kind() const = 0;
  virtual double value(double t) const = 0;
  /// log(value(t)) without overflow; -inf where the value is 0.
  virtual double log_value(double t) const = 0;
  /// Left-continuous density a(t).
  virtual double density(double t) const = 0;
  /// Right limit a(t+).
  virtual double density_right(double t) const = 0;
  /// Largest t with finite value (inf when finite everywhere).
  virtual double domain_end() const { return kInf; }
  /// sup{t >= 0 : value(t) <= r}.
  virtual double inverse(double r) const;
  /// Points where the density is not smooth.
  virtual std::vector<double> kinks() const { return {}; }
  virtual std::string describe() const = 0;
};

/// Convex gauge A: [0, inf) -> [0, inf] with A(0) = 0. Immutable value type;
/// copies share the underlying representation.
class YoungFunction {
 public:
  static YoungFunction power(double p);
  /// t^p log(e + t)^alpha.
  static YoungFunction power_log(double p, double alpha);
  /// t^p log(1/t)^alpha; meaningful only as a near-zero branch on (0, 1).
  static YoungFunction power_log_zero(double p, double alpha);
  /// e^t - 1.
  static YoungFunction exponential();
  /// 0 on [0, b], +inf beyond.
  static YoungFunction linf(double b);
  /// Piecewise-constant density: `density[k]` holds on (knots[k], knots[k+1]]
  /// and the last entry on (knots.back(), inf). A last entry of +inf makes
  /// knots.back() the domain endpoint.
  static YoungFunction staircase(std::vector<double> knots,
                                 std::vector<double> density);
  /// Density given as a monotone polyline through `vertices` (first vertex at
  /// t = 0) continued beyond the last vertex with slope `tail_slope`
  /// (0 = constant density, +inf = domain endpoint at the last vertex).
  static YoungFunction polyline(std::vector<DensityVertex> vertices,
                                double tail_slope);
  /// `zero` on [0, at], a multiple of `infinity` beyond, the multiple chosen
  /// so that the two branches agree at `at`.
  static YoungFunction spliced(const YoungFunction& zero,
                               const YoungFunction& infinity, double at);

  explicit YoungFunction(std::shared_ptr<const YoungBase> impl,
                         double factor = 1.0);

  YoungKind kind() const { return impl_->kind(); }
  double operator()(double t) const { return eval(t); }
  double eval(double t) const;
  double log_eval(double t) const;
  double density(double t) const;
  double density_right(double t) const;
  double domain_end() const { return impl_->domain_end(); }
  double inverse(double r) const;
  std::vector<double> kinks() const { return impl_->kinks(); }
  std::string describe() const;

  /// A(t) / M.
  YoungFunction scaled(double M) const;
  /// Young conjugate: exact axis swap for tabulated functions, otherwise a
  /// Legendre transform evaluated through the inverse density.
  YoungFunction conjugate() const;
  /// Factor multiplying the underlying representation (1/M after scaling).
  double factor() const { return factor_; }
  const YoungBase& base() const { return *impl_; }

  /// Polyline density vertices for tabulated functions (empty otherwise).
  const std::vector<DensityVertex>& vertices() const;
  double tail_slope() const;

 private:
  std::shared_ptr<const YoungBase> impl_;
  double factor_ = 1.0;
};

/// Sampling used to turn an analytic density into a polyline.
struct TabulationOptions {
  double t_min = 1e-8;
  double t_max = 1e8;
  int points_per_decade = 256;
  /// Sampling stops once A exceeds this value.
  double value_cap = 1e200;
};

/// Polyline representation of any Young function; exact for tabulated input.
YoungFunction tabulate(const YoungFunction& A, const TabulationOptions& opt = {});

/// Result of a sampled check of the Young axioms. `ok` is false with a
/// human-readable reason on the first violation found.
struct AxiomCheck {
  bool ok = true;
  std::string reason;
};

/// Checks A(0) = 0, monotonicity, midpoint convexity on sampled triples,
/// monotone density and the superhomogeneity lambda A(t) <= A(lambda t).
AxiomCheck check_axioms(const YoungFunction& A, double t_lo = 1e-6,
                        double t_hi = 1e6, int points_per_decade = 16);

enum class Regime { global, near_infinity, near_zero };

struct Domination {
  double c = 1.0;
  /// Threshold used for the regime (unused for global domination).
  double t0 = 0.0;
};

/// Smallest grid constant c with B(t) <= A(c t) on the sampled regime, or
/// nothing when no c <= 1e6 works.
std::optional<Domination> dominates(const YoungFunction& A,
                                    const YoungFunction& B, Regime regime);

}  // namespace orlicz

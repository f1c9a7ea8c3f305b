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
#include "orlicz/conjugate_target.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

// Table resolution in tau: knots at 2^{k/kKnotsPerOctave}.
constexpr int kKnotsPerOctave = 16;
constexpr int kMaxOctaves = 1000;

// (tau / A(tau))^q evaluated in log space.
quad::Integrand make_integrand(const YoungFunction& A, double q) {
  return [A, q](double tau) {
    if (!(tau > 0.0)) return 0.0;
    if (tau > A.domain_end()) return 0.0;
    const double la = A.log_eval(tau);
    if (la == -kInf) return kInf;
    if (la == kInf) return 0.0;
    return std::exp(q * (std::log(tau) - la));
  };
}

void throw_on(quad::Status st, const char* where) {
  if (st == quad::Status::divergent)
    throw InadmissibleError(std::string(where) + ": (t/A(t))^{sigma/(n-sigma)} is not integrable near 0");
  if (st == quad::Status::inconclusive)
    throw InconclusiveError(std::string(where) + ": divergence test inconclusive near 0");
}

// int_0^t of the integrand: a head integral below t1 = min(1, end/2) and
// adaptive dyadic panels from t1 up to t (kinks of A as extra breakpoints).
quad::HalfLineResult head_integral(const YoungFunction& A, const SmoothnessParams& P,
                                   double t) {
  const auto f = make_integrand(A, P.exponent());
  const double end = A.domain_end();
  // Nothing accumulates past the domain endpoint.
  t = std::min(t, end);
  const double t1 = std::min(1.0, 0.5 * end);
  auto r = quad::integrate_head(f, std::min(t, t1));
  if (r.status != quad::Status::converged || t <= t1) return r;
  const std::vector<double> kinks = A.kinks();
  for (double lo = t1; lo < t;) {
    const double hi = std::min(2.0 * lo, t);
    r.value += quad::adaptive_with_breaks(f, lo, hi, kinks, 1e-13);
    lo = hi;
  }
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Cubic Hermite interpolation of y against x on a monotone table, with
// derivative dy/dx given at the knots. `x` must be strictly monotone.
double hermite(const std::vector<double>& xs, const std::vector<double>& ys,
               const std::vector<double>& ds, std::size_t i, std::size_t j, double x) {
  const double h = xs[j] - xs[i];
  const double u = (x - xs[i]) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  const double y = h00 * ys[i] + h10 * h * ds[i] + h01 * ys[j] + h11 * h * ds[j];
  return std::clamp(y, std::min(ys[i], ys[j]), std::max(ys[i], ys[j]));
}

// A o H^{-1}. H^{-1} is realised by cubic Hermite interpolation of log(tau)
// against log(I(tau)) on a dense dyadic table, I(tau) = int_0^tau f. When
// t_infinity is finite the upper half uses log(J(tau)), J = int_tau^inf f,
// instead, which stays well conditioned as H approaches t_infinity. Knot
// slopes are exact: d log tau / d log I = I / (tau f(tau)).
class SobolevConjugate final : public YoungBase {
 public:
  SobolevConjugate(YoungFunction A, SmoothnessParams P)
      : A_(std::move(A)), P_(P), f_(make_integrand(A_, P_.exponent())) {
    const auto& f = f_;
    const double end = A_.domain_end();
    const double start = std::min(1.0, 0.5 * end);

    const auto head = quad::integrate_head(f, start);
    throw_on(head.status, "target");

    const std::vector<double> kinks = A_.kinks();
    auto knots_between = [&](double lo, double hi) {
      std::vector<double> out;
      for (double k : kinks)
        if (k > lo && k < hi) out.push_back(k);
      std::sort(out.begin(), out.end());
      return out;
    };

    // Knots (tau, increment of the integral since the previous knot).
    std::vector<double> taus, incs;

    // Downward pass: panels below `start`, collected from the top down.
    std::vector<double> down_tau{start}, down_int;
    {
      double tau = start;
      const double ratio = std::exp2(-1.0 / kKnotsPerOctave);
      for (int k = 0; k < kMaxOctaves * kKnotsPerOctave; ++k) {
        const double lo = tau * ratio;
        std::vector<double> pts = knots_between(lo, tau);
        pts.insert(pts.begin(), lo);
        pts.push_back(tau);
        for (std::size_t i = pts.size() - 1; i > 0; --i) {
          down_int.push_back(quad::adaptive(f, pts[i - 1], pts[i], 1e-13));
          down_tau.push_back(pts[i - 1]);
        }
        tau = lo;
        if (down_int.back() < 1e-280 * head.value) break;
      }
    }
    // Near the bottom of the double range the dyadic head has no room left,
    // so the remainder is continued geometrically from the last panels.
    double bottom = 0.0;
    const std::size_t nd = down_int.size();
    const double rho = nd >= 2 ? down_int[nd - 1] / down_int[nd - 2] : 1.0;
    if (down_tau.back() < 1e-280 && rho > 0.0 && rho < 1.0) {
      bottom = down_int.back() * rho / (1.0 - rho);
    } else {
      const auto bottom_head = quad::integrate_head(f, down_tau.back());
      throw_on(bottom_head.status, "target");
      bottom = bottom_head.value;
    }
    for (std::size_t i = down_tau.size(); i-- > 0;) {
      taus.push_back(down_tau[i]);
      incs.push_back(i + 1 < down_tau.size() ? down_int[i] : bottom);
    }

    // Upward pass from `start`.
    double total = 0.0;
    for (double v : incs) total += v;
    {
      double tau = start;
      const double ratio = std::exp2(1.0 / kKnotsPerOctave);
      int negligible = 0;
      for (int k = 0; k < kMaxOctaves * kKnotsPerOctave; ++k) {
        double hi = tau * ratio;
        bool last = false;
        if (hi >= end) {
          hi = end;
          last = true;
        }
        std::vector<double> pts = knots_between(tau, hi);
        pts.push_back(hi);
        double lo = tau, added = 0.0;
        for (double p : pts) {
          const double piece = quad::adaptive(f, lo, p, 1e-13);
          added += piece;
          taus.push_back(p);
          incs.push_back(piece);
          lo = p;
        }
        total += added;
        tau = hi;
        if (last || total > 1e280) break;
        negligible = added <= 1e-17 * total ? negligible + 1 : 0;
        if (negligible >= kKnotsPerOctave) break;
      }
    }

    double beyond = 0.0;
    if (std::isfinite(end)) {
      bounded_ = true;
    } else {
      const auto tail = quad::integrate_tail(f, 1.0);
      if (tail.status == quad::Status::inconclusive)
        throw InconclusiveError("target: divergence test inconclusive near infinity");
      bounded_ = tail.status == quad::Status::converged;
      if (bounded_) beyond = quad::integrate_tail(f, taus.back()).value;
    }

    // Prefix sums give I, suffix sums J; both without cancellation.
    const std::size_t K = taus.size();
    std::vector<double> I(K), J(K);
    double acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) I[k] = (acc += incs[k]);
    acc = beyond;
    for (std::size_t k = K; k-- > 0;) {
      J[k] = acc;
      acc += incs[k];
    }
    for (std::size_t k = 0; k < K; ++k) {
      const double lI = std::log(I[k]);
      if (lo_.x.empty() || lI > lo_.x.back()) {
        lo_.x.push_back(lI);
        lo_.y.push_back(std::log(taus[k]));
        lo_.d.push_back(I[k] / (taus[k] * f(taus[k])));
        lo_.knot.push_back(k);
      }
    }
    if (bounded_) {
      total_ = I.back() + beyond;
      t_inf_ = std::pow(total_, P_.outer());
      for (std::size_t k = K; k-- > 0;) {
        if (!(J[k] > 0.0) || !(f(taus[k]) > 0.0)) continue;
        const double lJ = std::log(J[k]);
        if (!hi_.x.empty() && !(lJ > hi_.x.back())) continue;
        hi_.x.push_back(lJ);
        hi_.y.push_back(std::log(taus[k]));
        hi_.d.push_back(-J[k] / (taus[k] * f(taus[k])));
        hi_.knot.push_back(k);
      }
    }
    taus_ = taus;
    I_ = std::move(I);
    J_ = std::move(J);
    for (double k : kinks)
      if (k < end) kink_values_.push_back(s_of_tau(k));
    if (bounded_) kink_values_.push_back(t_inf_);
  }

  YoungKind kind() const override { return YoungKind::sobolev_conjugate; }

  double value(double s) const override {
    if (s == 0.0) return 0.0;
    return std::exp(log_value(s));
  }

  double log_value(double s) const override {
    if (s == 0.0) return -kInf;
    if (bounded_ && s > t_inf_) return kInf;
    const double tau = tau_of(s);
    if (!std::isfinite(tau)) return kInf;
    return A_.log_eval(tau);
  }

  double density(double s) const override {
    if (s == 0.0) return 0.0;
    if (bounded_ && s > t_inf_) return kInf;
    return density_at(s, tau_of(s), false);
  }

  double density_right(double s) const override {
    if (s == 0.0) {
      // Limit of the density at 0+, read off a small argument.
      return density_at(1e-300, tau_of(1e-300), true);
    }
    if (bounded_ && s >= t_inf_) return kInf;
    return density_at(s, tau_of(s), true);
  }

  double domain_end() const override { return bounded_ ? t_inf_ : kInf; }
  std::vector<double> kinks() const override { return kink_values_; }

  std::string describe() const override {
    return "target(" + A_.describe() + ",n=" + std::to_string(P_.n) +
           ",sigma=" + fmt(P_.sigma) + ")";
  }

  // H^{-1}(s): table interpolation polished by Newton steps on the exact
  // integral from the nearest knot.
  double tau_of(double s) const {
    const double x = std::log(s) / P_.outer();  // log I
    if (bounded_ && !hi_.x.empty() && x > std::log(0.5 * total_)) {
      const double rest = total_ - std::exp(x);
      if (!(rest > 0.0)) return taus_[hi_.knot.front()];
      return refine(hi_, std::log(rest), false, -1.0);
    }
    return refine(lo_, x, !bounded_, 1.0);
  }

 private:
  // Knots sorted by increasing x; `knot` maps entries to the full knot list.
  struct Table {
    std::vector<double> x, y, d;
    std::vector<std::size_t> knot;
  };

  // `sign` is +1 for the I table and -1 for the J table (J decreases in tau).
  double refine(const Table& t, double x, bool extend_up, double sign) const {
    if (x <= t.x.front()) return std::exp(t.y.front() + (x - t.x.front()) * t.d.front());
    if (x >= t.x.back())
      return std::exp(extend_up ? t.y.back() + (x - t.x.back()) * t.d.back() : t.y.back());
    const auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - t.x.begin());
    double tau = std::exp(hermite(t.x, t.y, t.d, j - 1, j, x));
    // Bracketing knots in tau order.
    std::size_t ka = t.knot[j - 1], kb = t.knot[j];
    if (ka > kb) std::swap(ka, kb);
    const double ta = taus_[ka], tb = taus_[kb];
    const double goal = std::exp(x);
    for (int iter = 0; iter < 3; ++iter) {
      // Integral from the nearer knot keeps the panel short.
      const bool from_a = tau - ta <= tb - tau;
      const double base = from_a ? (sign > 0 ? I_[ka] : J_[ka]) : (sign > 0 ? I_[kb] : J_[kb]);
      const double piece = from_a ? quad::gauss16(f_, ta, tau) : -quad::gauss16(f_, tau, tb);
      const double current = base + sign * piece;
      const double ft = f_(tau);
      if (!(ft > 0.0) || !std::isfinite(ft)) break;
      const double step = sign * (goal - current) / ft;
      const double next = std::clamp(tau + step, ta, tb);
      if (next == tau) break;
      tau = next;
      if (std::fabs(step) <= 1e-15 * tau) break;
    }
    return tau;
  }

  double s_of_tau(double tau) const {
    const auto it = std::lower_bound(taus_.begin(), taus_.end(), tau);
    if (it == taus_.end()) return bounded_ ? t_inf_ : kInf;
    return std::pow(I_[static_cast<std::size_t>(it - taus_.begin())], P_.outer());
  }

  double density_at(double s, double tau, bool right) const {
    if (!std::isfinite(tau)) return kInf;
    const double a = right ? A_.density_right(tau) : A_.density(tau);
    if (a == 0.0) return 0.0;
    if (!std::isfinite(a)) return kInf;
    const double q = P_.exponent();
    const double log_f = q * (std::log(tau) - A_.log_eval(tau));
    return std::exp(std::log(a) + q * std::log(s) - std::log(P_.outer()) - log_f);
  }

  YoungFunction A_;
  SmoothnessParams P_;
  quad::Integrand f_;
  std::vector<double> taus_, I_, J_;
  Table lo_, hi_;
  std::vector<double> kink_values_;
  bool bounded_ = false;
  double total_ = kInf;
  double t_inf_ = kInf;
};

}  // namespace

SmoothnessParams::SmoothnessParams(int dim, double gap) : n(dim), sigma(gap) {
  if (dim < 1) throw YoungError("dimension must be >= 1");
  if (!(gap > 0.0) || !(gap < dim)) throw YoungError("smoothness gap must lie in (0, n)");
}

bool admissible(const YoungFunction& A, const SmoothnessParams& P) {
  const double end = A.domain_end();
  const auto r = head_integral(A, P, std::min(1.0, 0.5 * end));
  if (r.status == quad::Status::inconclusive)
    throw InconclusiveError("admissible: divergence test inconclusive near 0");
  return r.status == quad::Status::converged && std::isfinite(r.value);
}

double h_value(const YoungFunction& A, const SmoothnessParams& P, double t) {
  if (!(t >= 0.0)) throw YoungError("h_value: t must be >= 0");
  if (!admissible(A, P)) throw InadmissibleError("h_value: inadmissible Young function");
  if (t == 0.0) return 0.0;
  const auto r = head_integral(A, P, t);
  throw_on(r.status, "h_value");
  return std::pow(r.value, P.outer());
}

double t_infinity(const YoungFunction& A, const SmoothnessParams& P) {
  if (!admissible(A, P)) throw InadmissibleError("t_infinity: inadmissible Young function");
  const double end = A.domain_end();
  if (std::isfinite(end)) return h_value(A, P, end);
  const auto f = make_integrand(A, P.exponent());
  const auto head = quad::integrate_head(f, 1.0);
  const auto tail = quad::integrate_tail(f, 1.0);
  if (tail.status == quad::Status::inconclusive)
    throw InconclusiveError("t_infinity: divergence test inconclusive near infinity");
  if (tail.status == quad::Status::divergent) return kInf;
  return std::pow(head.value + tail.value, P.outer());
}

YoungFunction target(const YoungFunction& A, const SmoothnessParams& P) {
  if (!admissible(A, P)) throw InadmissibleError("target: inadmissible Young function");
  return YoungFunction(std::make_shared<SobolevConjugate>(A, P));
}

}  // namespace orlicz

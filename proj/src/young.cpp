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
#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace orlicz {
namespace {

std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_nonneg(double t, const char* what) {
  if (!(t >= 0.0)) throw YoungError(std::string(what) + " must be >= 0");
}

// ---------------------------------------------------------------------------
// Analytic families

class Power final : public YoungBase {
 public:
  explicit Power(double p) : p_(p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw YoungError("power: need p >= 1");
  }
  YoungKind kind() const override { return YoungKind::power; }
  double value(double t) const override { return std::pow(t, p_); }
  double log_value(double t) const override { return p_ * std::log(t); }
  double density(double t) const override {
    if (p_ == 1.0) return t > 0.0 ? 1.0 : 0.0;
    return p_ * std::pow(t, p_ - 1.0);
  }
  double density_right(double t) const override {
    return p_ == 1.0 ? 1.0 : p_ * std::pow(t, p_ - 1.0);
  }
  double inverse(double r) const override { return std::pow(r, 1.0 / p_); }
  std::string describe() const override { return "power(" + fmt_num(p_) + ")"; }

 private:
  double p_;
};

class PowerLog final : public YoungBase {
 public:
  PowerLog(double p, double alpha) : p_(p), alpha_(alpha) {
    if (!(p >= 1.0) || !std::isfinite(alpha))
      throw YoungError("powerlog: need p >= 1 and finite alpha");
  }
  YoungKind kind() const override { return YoungKind::power_log; }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return std::exp(log_value(t));
  }
  double log_value(double t) const override {
    return p_ * std::log(t) + alpha_ * std::log(std::log(std::numbers::e + t));
  }
  double density(double t) const override {
    if (t == 0.0) return p_ == 1.0 ? 0.0 : 0.0;
    const double L = std::log(std::numbers::e + t);
    return std::pow(t, p_ - 1.0) * std::pow(L, alpha_ - 1.0) *
           (p_ * L + alpha_ * t / (std::numbers::e + t));
  }
  double density_right(double t) const override {
    if (t == 0.0) return p_ == 1.0 ? 1.0 : 0.0;
    return density(t);
  }
  std::string describe() const override {
    return "powerlog(" + fmt_num(p_) + "," + fmt_num(alpha_) + ")";
  }

 private:
  double p_, alpha_;
};

class PowerLogZero final : public YoungBase {
 public:
  PowerLogZero(double p, double alpha) : p_(p), alpha_(alpha) {
    if (!(p >= 1.0) || !std::isfinite(alpha))
      throw YoungError("powerlog0: need p >= 1 and finite alpha");
  }
  YoungKind kind() const override { return YoungKind::power_log_zero; }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return std::exp(log_value(t));
  }
  double log_value(double t) const override {
    if (t >= 1.0) throw YoungError("powerlog0 is defined on (0, 1) only");
    return p_ * std::log(t) + alpha_ * std::log(-std::log(t));
  }
  double density(double t) const override {
    if (t == 0.0) return 0.0;
    if (t >= 1.0) throw YoungError("powerlog0 is defined on (0, 1) only");
    const double l = -std::log(t);
    return std::pow(t, p_ - 1.0) * std::pow(l, alpha_ - 1.0) * (p_ * l - alpha_);
  }
  double density_right(double t) const override {
    if (t == 0.0) return p_ == 1.0 && alpha_ == 0.0 ? 1.0 : 0.0;
    return density(t);
  }
  std::string describe() const override {
    return "powerlog0(" + fmt_num(p_) + "," + fmt_num(alpha_) + ")";
  }

 private:
  double p_, alpha_;
};

class Exponential final : public YoungBase {
 public:
  YoungKind kind() const override { return YoungKind::exponential; }
  double value(double t) const override { return std::expm1(t); }
  double log_value(double t) const override {
    if (t == 0.0) return -kInf;
    if (t < 1.0) return std::log(std::expm1(t));
    return t + std::log(-std::expm1(-t));
  }
  double density(double t) const override { return t > 0.0 ? std::exp(t) : 0.0; }
  double density_right(double t) const override { return std::exp(t); }
  double inverse(double r) const override { return std::log1p(r); }
  std::string describe() const override { return "exp()"; }
};

class LinfGauge final : public YoungBase {
 public:
  explicit LinfGauge(double b) : b_(b) {
    if (!(b > 0.0) || !std::isfinite(b)) throw YoungError("linf: need b > 0");
  }
  YoungKind kind() const override { return YoungKind::linf_gauge; }
  double value(double t) const override { return t <= b_ ? 0.0 : kInf; }
  double log_value(double t) const override { return t <= b_ ? -kInf : kInf; }
  double density(double t) const override { return t <= b_ ? 0.0 : kInf; }
  double density_right(double t) const override { return t < b_ ? 0.0 : kInf; }
  double domain_end() const override { return b_; }
  double inverse(double) const override { return b_; }
  std::vector<double> kinks() const override { return {b_}; }
  std::string describe() const override { return "linf(" + fmt_num(b_) + ")"; }

 private:
  double b_;
};

// ---------------------------------------------------------------------------
// Polyline density

class Polyline final : public YoungBase {
 public:
  Polyline(std::vector<DensityVertex> v, double tail) : v_(std::move(v)), tail_(tail) {
    if (v_.empty()) throw YoungError("tabulated: no vertices");
    if (v_.front().t != 0.0) throw YoungError("tabulated: first vertex must sit at t = 0");
    if (!(tail_ >= 0.0)) throw YoungError("tabulated: tail slope must be >= 0");
    std::vector<DensityVertex> clean;
    clean.reserve(v_.size());
    for (const auto& p : v_) {
      if (!std::isfinite(p.t) || !std::isfinite(p.a) || p.a < 0.0)
        throw YoungError("tabulated: vertices must be finite with a >= 0");
      if (!clean.empty()) {
        const auto& q = clean.back();
        if (p.t < q.t || p.a < q.a)
          throw YoungError("tabulated: density must be non-decreasing");
        if (p == q) continue;
        // Collapse runs of three vertical or three flat vertices.
        if (clean.size() >= 2) {
          const auto& r = clean[clean.size() - 2];
          if ((r.t == q.t && q.t == p.t) || (r.a == q.a && q.a == p.a)) {
            clean.back() = p;
            continue;
          }
        }
      }
      clean.push_back(p);
    }
    v_ = std::move(clean);
    const auto& last = v_.back();
    if (last.a == 0.0 && tail_ == 0.0)
      throw YoungError("tabulated: function vanishes identically");
    if (std::isinf(tail_) && last.t == 0.0)
      throw YoungError("tabulated: function is infinite on (0, inf)");
    prefix_.resize(v_.size());
    prefix_[0] = 0.0;
    for (std::size_t i = 1; i < v_.size(); ++i)
      prefix_[i] = prefix_[i - 1] + 0.5 * (v_[i - 1].a + v_[i].a) * (v_[i].t - v_[i - 1].t);
  }

  YoungKind kind() const override { return YoungKind::tabulated; }
  const std::vector<DensityVertex>& vertices() const { return v_; }
  double tail() const { return tail_; }

  double value(double t) const override {
    const auto& last = v_.back();
    if (t > last.t) {
      if (std::isinf(tail_)) return kInf;
      const double x = t - last.t;
      return prefix_.back() + last.a * x + 0.5 * tail_ * x * x;
    }
    const std::size_t i = first_at_or_after(t);
    if (i == 0) return 0.0;
    const auto& lo = v_[i - 1];
    const auto& hi = v_[i];
    const double x = t - lo.t;
    const double slope = (hi.a - lo.a) / (hi.t - lo.t);
    return prefix_[i - 1] + lo.a * x + 0.5 * slope * x * x;
  }

  double log_value(double t) const override {
    const double v = value(t);
    if (v > 1e-280 && v < 1e280) return std::log(v);
    // Far from 1 the piece c0 + c1 x + c2 x^2 is summed in log space.
    const auto& last = v_.back();
    double c0, c1, c2, x;
    if (t > last.t) {
      if (std::isinf(tail_)) return kInf;
      c0 = prefix_.back(), c1 = last.a, c2 = 0.5 * tail_, x = t - last.t;
    } else {
      const std::size_t i = first_at_or_after(t);
      if (i == 0) return -kInf;
      const auto& lo = v_[i - 1];
      const auto& hi = v_[i];
      c0 = prefix_[i - 1], c1 = lo.a, c2 = 0.5 * (hi.a - lo.a) / (hi.t - lo.t), x = t - lo.t;
    }
    const double lx = std::log(x);
    double terms[3] = {c0 > 0 ? std::log(c0) : -kInf, c1 > 0 ? std::log(c1) + lx : -kInf,
                       c2 > 0 ? std::log(c2) + 2 * lx : -kInf};
    const double top = std::max({terms[0], terms[1], terms[2]});
    if (top == -kInf) return -kInf;
    double sum = 0.0;
    for (double l : terms) sum += std::exp(l - top);
    return top + std::log(sum);
  }

  double density(double t) const override {
    const auto& last = v_.back();
    if (t > last.t) return std::isinf(tail_) ? kInf : last.a + tail_ * (t - last.t);
    const std::size_t i = first_at_or_after(t);
    if (i == 0) return v_[0].a;
    return interp(i - 1, i, t);
  }

  double density_right(double t) const override {
    const auto& last = v_.back();
    if (t >= last.t) return std::isinf(tail_) ? kInf : last.a + tail_ * (t - last.t);
    // first vertex strictly after t
    auto it = std::upper_bound(v_.begin(), v_.end(), t,
                               [](double x, const DensityVertex& p) { return x < p.t; });
    const std::size_t i = static_cast<std::size_t>(it - v_.begin());
    return interp(i - 1, i, t);
  }

  double domain_end() const override { return std::isinf(tail_) ? v_.back().t : kInf; }

  double inverse(double r) const override {
    const auto& last = v_.back();
    if (r >= prefix_.back()) {
      if (std::isinf(tail_)) return last.t;
      if (tail_ == 0.0 && last.a == 0.0) return kInf;
      return last.t + solve(last.a, tail_, r - prefix_.back());
    }
    auto it = std::upper_bound(prefix_.begin(), prefix_.end(), r);
    const std::size_t j = static_cast<std::size_t>(it - prefix_.begin());  // prefix_[j] > r
    const std::size_t i = j - 1;
    const auto& lo = v_[i];
    const auto& hi = v_[j];
    const double slope = (hi.a - lo.a) / (hi.t - lo.t);
    return std::min(hi.t, lo.t + solve(lo.a, slope, r - prefix_[i]));
  }

  std::vector<double> kinks() const override {
    std::vector<double> out;
    out.reserve(v_.size());
    for (const auto& p : v_)
      if (p.t > 0.0 && (out.empty() || out.back() != p.t)) out.push_back(p.t);
    return out;
  }

  std::string describe() const override {
    return "table(" + std::to_string(v_.size()) + " vertices)";
  }

 private:
  std::size_t first_at_or_after(double t) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), t,
                               [](const DensityVertex& p, double x) { return p.t < x; });
    return static_cast<std::size_t>(it - v_.begin());
  }
  double interp(std::size_t i, std::size_t j, double t) const {
    const auto& lo = v_[i];
    const auto& hi = v_[j];
    if (hi.t == lo.t) return lo.a;
    return lo.a + (hi.a - lo.a) * (t - lo.t) / (hi.t - lo.t);
  }
  // Smallest x >= 0 with a x + slope x^2 / 2 = c.
  static double solve(double a, double slope, double c) {
    if (c <= 0.0) return 0.0;
    const double disc = a * a + 2.0 * slope * c;
    return 2.0 * c / (a + std::sqrt(disc));
  }

  std::vector<DensityVertex> v_;
  std::vector<double> prefix_;
  double tail_;
};

// ---------------------------------------------------------------------------
// Splice of two branches

class Spliced final : public YoungBase {
 public:
  Spliced(YoungFunction zero, YoungFunction inf, double at)
      : zero_(std::move(zero)), inf_(std::move(inf)), at_(at) {
    if (!(at > 0.0) || !std::isfinite(at)) throw YoungError("spliced: need at > 0");
    const double z = zero_.eval(at);
    const double i = inf_.eval(at);
    if (!std::isfinite(z) || !(z > 0.0) || !std::isfinite(i) || !(i > 0.0))
      throw YoungError("spliced: both branches must be finite and positive at the splice");
    log_kappa_ = zero_.log_eval(at) - inf_.log_eval(at);
    kappa_ = std::exp(log_kappa_);
    const double left = zero_.density(at);
    const double right = kappa_ * inf_.density_right(at);
    if (left > right * (1.0 + 1e-12))
      throw YoungError("spliced: density decreases at the splice point (not convex)");
  }
  YoungKind kind() const override { return YoungKind::spliced; }
  double value(double t) const override {
    return t <= at_ ? zero_.eval(t) : kappa_ * inf_.eval(t);
  }
  double log_value(double t) const override {
    return t <= at_ ? zero_.log_eval(t) : log_kappa_ + inf_.log_eval(t);
  }
  double density(double t) const override {
    return t <= at_ ? zero_.density(t) : kappa_ * inf_.density(t);
  }
  double density_right(double t) const override {
    return t < at_ ? zero_.density_right(t) : kappa_ * inf_.density_right(t);
  }
  double domain_end() const override {
    const double z = zero_.domain_end();
    if (z < at_) return z;
    return inf_.domain_end();
  }
  std::vector<double> kinks() const override {
    std::vector<double> out;
    for (double k : zero_.kinks())
      if (k < at_) out.push_back(k);
    out.push_back(at_);
    for (double k : inf_.kinks())
      if (k > at_) out.push_back(k);
    return out;
  }
  std::string describe() const override {
    return "spliced(zero=" + zero_.describe() + ",inf=" + inf_.describe() +
           ",at=" + fmt_num(at_) + ")";
  }

 private:
  YoungFunction zero_, inf_;
  double at_;
  double kappa_ = 1.0, log_kappa_ = 0.0;
};

// ---------------------------------------------------------------------------
// Legendre conjugate of a general Young function

// Evaluated through the generalized inverse b of the density a:
// conj(s) = s b(s) - A(b(s)), with b(s) = inf{t : a(t+) >= s} found by
// bisection. Exact up to the bisection resolution.
class LegendreConjugate final : public YoungBase {
 public:
  explicit LegendreConjugate(YoungFunction A) : A_(std::move(A)) {
    const double end = A_.domain_end();
    sup_density_ = std::isfinite(end) ? kInf : A_.density_right(1e300);
  }
  YoungKind kind() const override { return YoungKind::legendre_conjugate; }
  const YoungFunction& original() const { return A_; }

  double value(double s) const override {
    if (s == 0.0) return 0.0;
    const double tau = inverse_density(s, false);
    if (!std::isfinite(tau)) return kInf;
    if (tau == 0.0) return 0.0;
    const double st = s * tau, a = A_.eval(tau);
    if (std::isfinite(st) && std::isfinite(a)) return std::max(0.0, st - a);
    return std::exp(log_value(s));
  }
  // log(s tau) + log(1 - A(tau) / (s tau)), free of overflow.
  double log_value(double s) const override {
    if (s == 0.0) return -kInf;
    const double tau = inverse_density(s, false);
    if (!std::isfinite(tau)) return kInf;
    if (tau == 0.0) return -kInf;
    const double lst = std::log(s) + std::log(tau);
    const double st = s * tau, a = A_.eval(tau);
    if (std::isfinite(st) && std::isfinite(a)) return st > a ? std::log(st - a) : -kInf;
    const double frac = -std::expm1(std::min(0.0, A_.log_eval(tau) - lst));
    return frac > 0.0 ? lst + std::log(frac) : -kInf;
  }
  double density(double s) const override { return s == 0.0 ? 0.0 : inverse_density(s, false); }
  double density_right(double s) const override { return inverse_density(s, true); }
  double domain_end() const override { return sup_density_; }
  std::vector<double> kinks() const override {
    std::vector<double> out;
    for (double k : A_.kinks()) {
      if (!(k < A_.domain_end())) continue;
      const double l = A_.density(k), r = A_.density_right(k);
      if (l > 0.0 && std::isfinite(l)) out.push_back(l);
      if (r != l && r > 0.0 && std::isfinite(r)) out.push_back(r);
    }
    if (std::isfinite(sup_density_)) out.push_back(sup_density_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::string describe() const override { return "conjugate(" + A_.describe() + ")"; }

 private:
  // inf{t : a(t+) >= s} (or > s for the right limit).
  double inverse_density(double s, bool strict) const {
    auto reached = [&](double t) {
      const double a = A_.density_right(t);
      return strict ? a > s : a >= s;
    };
    if (reached(0.0)) return 0.0;
    const double end = A_.domain_end();
    double hi = std::isfinite(end) ? end : 1.0;
    if (!std::isfinite(end)) {
      while (!reached(hi)) {
        hi *= 2.0;
        if (hi > 1e300) return kInf;
      }
    }
    double lo = 0.5 * hi;
    while (reached(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) return 0.0;
    }
    for (int it = 0; it < 200 && hi - lo > 2e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (reached(mid) ? hi : lo) = mid;
    }
    return hi;
  }

  YoungFunction A_;
  double sup_density_ = kInf;
};

const Polyline* as_polyline(const YoungBase& b) {
  return b.kind() == YoungKind::tabulated ? static_cast<const Polyline*>(&b) : nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------

double YoungBase::inverse(double r) const {
  if (r == kInf) return domain_end();
  const double end = domain_end();
  if (std::isfinite(end) && value(end) <= r) return end;
  // Bracket [lo, hi] with value(lo) <= r < value(hi), then bisect.
  const double log_r = std::log(r);
  auto le = [&](double t) { return t == 0.0 || log_value(t) <= log_r; };
  double lo = 0.0, hi = 1.0;
  if (std::isfinite(end)) hi = std::min(hi, end);
  while (le(hi)) {
    lo = hi;
    hi = std::isfinite(end) ? std::min(2.0 * hi, end) : 2.0 * hi;
    if (hi > 1e300) return kInf;
    if (hi == lo) return end;
  }
  if (lo == 0.0) {
    double t = hi;
    while (t > 1e-300 && !le(t)) t *= 0.5;
    if (t <= 1e-300) return 0.0;
    lo = t;
    hi = 2.0 * t;
  }
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (le(mid) ? lo : hi) = mid;
  }
  return lo;
}

YoungFunction::YoungFunction(std::shared_ptr<const YoungBase> impl, double factor)
    : impl_(std::move(impl)), factor_(factor) {
  if (!impl_) throw YoungError("null Young function");
  if (!(factor_ > 0.0) || !std::isfinite(factor_))
    throw YoungError("Young function scale must be positive and finite");
}

YoungFunction YoungFunction::power(double p) {
  return YoungFunction(std::make_shared<Power>(p));
}
YoungFunction YoungFunction::power_log(double p, double alpha) {
  return YoungFunction(std::make_shared<PowerLog>(p, alpha));
}
YoungFunction YoungFunction::power_log_zero(double p, double alpha) {
  return YoungFunction(std::make_shared<PowerLogZero>(p, alpha));
}
YoungFunction YoungFunction::exponential() {
  return YoungFunction(std::make_shared<Exponential>());
}
YoungFunction YoungFunction::linf(double b) {
  return YoungFunction(std::make_shared<LinfGauge>(b));
}

YoungFunction YoungFunction::staircase(std::vector<double> knots,
                                       std::vector<double> density) {
  if (knots.empty() || knots.size() != density.size())
    throw YoungError("staircase: knots and density must have the same non-zero length");
  if (knots.front() != 0.0) throw YoungError("staircase: first knot must be 0");
  for (std::size_t k = 1; k < knots.size(); ++k)
    if (!(knots[k] > knots[k - 1])) throw YoungError("staircase: knots must increase strictly");
  std::vector<DensityVertex> v;
  const std::size_t K = knots.size() - 1;
  for (std::size_t k = 0; k < K; ++k) {
    if (!std::isfinite(density[k]))
      throw YoungError("staircase: only the last density value may be infinite");
    v.push_back({knots[k], density[k]});
    v.push_back({knots[k + 1], density[k]});
  }
  double tail = 0.0;
  if (std::isinf(density[K])) {
    tail = kInf;
    if (K == 0) throw YoungError("staircase: function is infinite on (0, inf)");
  } else {
    v.push_back({knots[K], density[K]});
  }
  return polyline(std::move(v), tail);
}

YoungFunction YoungFunction::polyline(std::vector<DensityVertex> vertices,
                                      double tail_slope) {
  return YoungFunction(std::make_shared<Polyline>(std::move(vertices), tail_slope));
}

YoungFunction YoungFunction::spliced(const YoungFunction& zero,
                                     const YoungFunction& infinity, double at) {
  return YoungFunction(std::make_shared<Spliced>(zero, infinity, at));
}

double YoungFunction::eval(double t) const {
  require_nonneg(t, "Young function argument");
  if (t == 0.0) return 0.0;
  return factor_ * impl_->value(t);
}

double YoungFunction::log_eval(double t) const {
  require_nonneg(t, "Young function argument");
  if (t == 0.0) return -kInf;
  return std::log(factor_) + impl_->log_value(t);
}

double YoungFunction::density(double t) const {
  require_nonneg(t, "Young function argument");
  return factor_ * impl_->density(t);
}

double YoungFunction::density_right(double t) const {
  require_nonneg(t, "Young function argument");
  return factor_ * impl_->density_right(t);
}

double YoungFunction::inverse(double r) const {
  require_nonneg(r, "inverse argument");
  return impl_->inverse(r / factor_);
}

std::string YoungFunction::describe() const {
  if (factor_ == 1.0) return impl_->describe();
  return "scaled(" + impl_->describe() + "," + fmt_num(1.0 / factor_) + ")";
}

YoungFunction YoungFunction::scaled(double M) const {
  if (!(M > 0.0) || !std::isfinite(M)) throw YoungError("scale: need M > 0");
  return YoungFunction(impl_, factor_ / M);
}

const std::vector<DensityVertex>& YoungFunction::vertices() const {
  static const std::vector<DensityVertex> empty;
  const auto* p = as_polyline(*impl_);
  return p ? p->vertices() : empty;
}

double YoungFunction::tail_slope() const {
  const auto* p = as_polyline(*impl_);
  return p ? p->tail() * factor_ : 0.0;
}

YoungFunction YoungFunction::conjugate() const {
  if (impl_->kind() == YoungKind::legendre_conjugate && factor_ == 1.0)
    return static_cast<const LegendreConjugate&>(*impl_).original();
  if (impl_->kind() != YoungKind::tabulated)
    return YoungFunction(std::make_shared<LegendreConjugate>(*this));
  const YoungFunction tab = tabulate(*this);
  // Swapping the axes of the density graph gives the graph of its
  // generalized inverse; the leading (0,0) vertex restores the start at t = 0.
  std::vector<DensityVertex> v{{0.0, 0.0}};
  for (const auto& p : tab.vertices()) v.push_back({p.a * tab.factor(), p.t});
  const double m = tab.tail_slope();
  const double tail = m == 0.0 ? kInf : (std::isinf(m) ? 0.0 : 1.0 / m);
  return polyline(std::move(v), tail);
}

YoungFunction tabulate(const YoungFunction& A, const TabulationOptions& opt) {
  if (A.kind() == YoungKind::tabulated) {
    if (A.factor() == 1.0) return A;
    std::vector<DensityVertex> v = A.vertices();
    for (auto& p : v) p.a *= A.factor();
    return YoungFunction::polyline(std::move(v), A.tail_slope());
  }
  const double end = A.domain_end();
  std::vector<double> ts;
  const int lo = static_cast<int>(std::floor(std::log10(opt.t_min) * opt.points_per_decade));
  const int hi = static_cast<int>(std::ceil(std::log10(opt.t_max) * opt.points_per_decade));
  for (int k = lo; k <= hi; ++k) {
    const double t = std::pow(10.0, static_cast<double>(k) / opt.points_per_decade);
    if (t >= end) break;
    ts.push_back(t);
  }
  for (double k : A.kinks())
    if (k > 0.0 && k < end && k >= opt.t_min && k <= opt.t_max) ts.push_back(k);
  if (std::isfinite(end)) ts.push_back(end);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<DensityVertex> v{{0.0, A.density_right(0.0)}};
  const double log_cap = std::log(opt.value_cap);
  for (double t : ts) {
    const double dl = A.density(t);
    const double dr = A.density_right(t);
    if (std::isfinite(dl)) v.push_back({t, dl});
    if (std::isfinite(dr) && dr != dl) v.push_back({t, dr});
    if (A.log_eval(t) > log_cap) break;
  }
  double tail = 0.0;
  if (std::isfinite(end) && v.back().t >= end) {
    tail = kInf;
  } else if (v.size() >= 2) {
    const auto& a = v[v.size() - 2];
    const auto& b = v.back();
    tail = b.t > a.t ? (b.a - a.a) / (b.t - a.t) : 0.0;
  }
  return YoungFunction::polyline(std::move(v), tail);
}

AxiomCheck check_axioms(const YoungFunction& A, double t_lo, double t_hi,
                        int points_per_decade) {
  auto fail = [](std::string why) { return AxiomCheck{false, std::move(why)}; };
  if (A.eval(0.0) != 0.0) return fail("A(0) != 0");
  std::vector<double> ts;
  const int lo = static_cast<int>(std::floor(std::log10(t_lo) * points_per_decade));
  const int hi = static_cast<int>(std::ceil(std::log10(t_hi) * points_per_decade));
  for (int k = lo; k <= hi; ++k)
    ts.push_back(std::pow(10.0, static_cast<double>(k) / points_per_decade));
  bool positive = false, finite = false;
  double prev_val = 0.0, prev_den = 0.0;
  const double end = A.domain_end();
  for (double t : ts) {
    const double val = A.eval(t);
    const double den = A.density(t);
    if (val > 0.0) positive = true;
    if (std::isfinite(val)) finite = true;
    if (val < prev_val * (1.0 - 1e-12)) return fail("A decreases near t = " + std::to_string(t));
    if (den < prev_den * (1.0 - 1e-9)) return fail("density decreases near t = " + std::to_string(t));
    prev_val = val;
    prev_den = den;
    if (t > end) continue;
    for (double lambda : {2.0, 10.0}) {
      const double big = A.eval(lambda * t);
      if (lambda * val > big * (1.0 + 1e-9) + 1e-300)
        return fail("superhomogeneity fails near t = " + std::to_string(t));
    }
  }
  // Midpoint convexity on triples (x, (x+y)/2, y) inside the finite domain.
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); j += 1 + (ts.size() / 40)) {
      const double x = ts[i], y = ts[j];
      if (y > end) break;
      const double fx = A.eval(x), fy = A.eval(y), fm = A.eval(0.5 * (x + y));
      if (!std::isfinite(fx) || !std::isfinite(fy)) continue;
      if (fm > 0.5 * (fx + fy) * (1.0 + 1e-9) + 1e-300)
        return fail("midpoint convexity fails on [" + std::to_string(x) + ", " +
                    std::to_string(y) + "]");
    }
  }
  if (!positive) return fail("A vanishes identically on the sampled range");
  if (!finite) return fail("A is infinite on the sampled range");
  return {};
}

std::optional<Domination> dominates(const YoungFunction& A, const YoungFunction& B,
                                    Regime regime) {
  constexpr int kPerDecade = 64;
  auto grid = [](double lo_exp, double hi_exp) {
    std::vector<double> g;
    for (int k = static_cast<int>(lo_exp * kPerDecade); k <= static_cast<int>(hi_exp * kPerDecade); ++k)
      g.push_back(k == 0 ? 1.0 : std::pow(10.0, static_cast<double>(k) / kPerDecade));
    return g;
  };
  const std::vector<double> cs = grid(-6, 6);
  const std::vector<double> ts = grid(-6, 6);
  std::vector<double> bval(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) bval[i] = B.eval(ts[i]);

  auto holds_at = [&](double c, std::size_t i) {
    const double a = A.eval(c * ts[i]);
    if (std::isinf(bval[i])) return std::isinf(a);
    return bval[i] <= a * (1.0 + 1e-12) + 1e-300;
  };
  // ok[i] for a fixed c; domination on a range of indices is a conjunction.
  for (double c : cs) {
    std::vector<char> ok(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) ok[i] = holds_at(c, i);
    switch (regime) {
      case Regime::global:
        if (std::all_of(ok.begin(), ok.end(), [](char b) { return b != 0; }))
          return Domination{c, 0.0};
        break;
      case Regime::near_infinity: {
        // t0 ranges over grid points up to 1e3 so at least three decades remain.
        std::size_t first_ok = ts.size();
        while (first_ok > 0 && ok[first_ok - 1]) --first_ok;
        if (first_ok < ts.size() && ts[first_ok] <= 1e3 * (1.0 + 1e-12))
          return Domination{c, ts[first_ok]};
        break;
      }
      case Regime::near_zero: {
        std::size_t last_ok = 0;
        while (last_ok < ts.size() && ok[last_ok]) ++last_ok;
        if (last_ok > 0 && ts[last_ok - 1] >= 1e-3 * (1.0 - 1e-12))
          return Domination{c, ts[last_ok - 1]};
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace orlicz

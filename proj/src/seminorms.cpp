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
#include "orlicz/seminorms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "orlicz/littlewood_paley.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

const double kLn2 = std::log(2.0);

void require_common_grid(std::span<const GridFunction> comps) {
  if (comps.empty()) throw GridError("no components given");
  for (const auto& c : comps)
    if (!c.same_grid(comps.front())) throw GridError("components live on different grids");
}

// Component values with zero outside the box.
class Sampler {
 public:
  explicit Sampler(std::span<const GridFunction> comps)
      : comps_(comps), n_(static_cast<long>(comps.front().points())), dim_(comps.front().dim()) {}

  bool inside(long i, long j) const {
    return i >= 0 && i < n_ && (dim_ == 1 || (j >= 0 && j < n_));
  }
  double value(std::size_t c, long i, long j) const {
    if (!inside(i, j)) return 0.0;
    return comps_[c].at(static_cast<std::size_t>(i), static_cast<std::size_t>(dim_ == 1 ? 0 : j));
  }
  // |u(a) - u(b)|, Euclidean over components.
  double distance(long ai, long aj, long bi, long bj) const {
    if (comps_.size() == 1) return std::fabs(value(0, ai, aj) - value(0, bi, bj));
    double s = 0.0;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      const double d = value(c, ai, aj) - value(c, bi, bj);
      s += d * d;
    }
    return std::sqrt(s);
  }
  long n() const { return n_; }
  int dim() const { return dim_; }

 private:
  std::span<const GridFunction> comps_;
  long n_;
  int dim_;
};

// Groups of values sharing one weight. Each group is sorted in decreasing
// order, so equal groups give bit-identical sums.
struct GroupedTerms {
  std::vector<double> weights;
  std::vector<std::vector<double>> values;

  void add_group(double w, std::vector<double> v) {
    v.erase(std::remove(v.begin(), v.end(), 0.0), v.end());
    if (v.empty()) return;
    std::sort(v.begin(), v.end(), std::greater<>());
    weights.push_back(w);
    values.push_back(std::move(v));
  }

  double modular(const YoungFunction& A, double lambda) const {
    double total = 0.0;
    for (std::size_t g = 0; g < values.size(); ++g) {
      double s = 0.0;
      for (double v : values[g]) {
        const double a = A(v / lambda);
        if (a == kInf) return kInf;
        s += a;
      }
      total += weights[g] * s;
    }
    return total;
  }

  SeminormResult solve(const YoungFunction& A) const {
    SeminormResult out;
    if (values.empty()) return out;
    double top = 0.0, mass = 0.0;
    for (std::size_t g = 0; g < values.size(); ++g) {
      top = std::max(top, values[g].front());
      mass += weights[g] * static_cast<double>(values[g].size());
    }
    const double inv = A.inverse(1.0 / mass);
    const double hint = std::isfinite(inv) && inv > 0.0 ? top / inv : top;
    out.value = luxemburg_infimum([&](double l) { return modular(A, l); }, hint);
    out.modular_at_value = out.value > 0.0 ? modular(A, out.value) : 0.0;
    return out;
  }
};

// Index range of x for an offset h along one axis: x or x + h in the box
// for zero extension, both for the restricted one.
void offset_range(long h, long n, bool zero_ext, long& lo, long& hi) {
  if (zero_ext) {
    lo = std::min(0L, -h);
    hi = std::max(n, n - h);
  } else {
    lo = std::max(0L, -h);
    hi = std::min(n, n - h);
  }
}

SeminormResult solve_with(const GroupedTerms& terms, const YoungFunction& A,
                          std::map<std::string, double> record) {
  SeminormResult r = terms.solve(A);
  r.discretization = std::move(record);
  return r;
}

void check_frac(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("seminorm order must lie in (0, 1)");
}

// Monomial exponents of total degree <= d in dimension n.
std::vector<std::pair<int, int>> monomials(int dim, int degree) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= degree; ++a) {
    if (dim == 1) {
      out.emplace_back(a, 0);
    } else {
      for (int b = 0; a + b <= degree; ++b) out.emplace_back(a, b);
    }
  }
  return out;
}

Eigen::MatrixXd design_matrix(const std::vector<std::pair<long, long>>& offsets, double scale,
                              const std::vector<std::pair<int, int>>& mono) {
  Eigen::MatrixXd X(static_cast<Eigen::Index>(offsets.size()), static_cast<Eigen::Index>(mono.size()));
  for (std::size_t p = 0; p < offsets.size(); ++p) {
    const double a = static_cast<double>(offsets[p].first) * scale;
    const double b = static_cast<double>(offsets[p].second) * scale;
    for (std::size_t m = 0; m < mono.size(); ++m)
      X(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(m)) =
          std::pow(a, mono[m].first) * std::pow(b, mono[m].second);
  }
  return X;
}

// I - X (X^T X)^{-1} X^T, the least-squares residual map.
Eigen::MatrixXd residual_map(const Eigen::MatrixXd& X) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(X.rows(), X.cols());
  return Eigen::MatrixXd::Identity(X.rows(), X.rows()) - Q * Q.transpose();
}

}  // namespace

FractionalOrder::FractionalOrder(double s) : s_(s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("smoothness must be positive");
  if (s == std::floor(s)) throw std::invalid_argument("smoothness must not be an integer");
  int_ = static_cast<int>(std::floor(s));
  frac_ = s - int_;
}

std::vector<GridFunction> grad_k(const GridFunction& u, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (k == 0) return {u};
  const std::size_t N = u.points();
  if (N < 2 * static_cast<std::size_t>(k) + 4) throw GridError("grid too small for the derivative order");
  std::vector<GridFunction> comps{u};
  for (int order = 0; order < k; ++order) {
    std::vector<GridFunction> next;
    for (const auto& c : comps) {
      const std::size_t M = c.points() - 2;
      const double h2 = 2.0 * c.spacing();
      for (int axis = 0; axis < c.dim(); ++axis) {
        std::vector<double> v(c.dim() == 1 ? M : M * M);
        for (std::size_t j = 0; j < (c.dim() == 1 ? 1 : M); ++j)
          for (std::size_t i = 0; i < M; ++i) {
            const std::size_t jj = c.dim() == 1 ? 0 : j + 1;
            const double d = axis == 0 ? c.at(i + 2, jj) - c.at(i, jj)
                                       : c.at(i + 1, j + 2) - c.at(i + 1, j);
            v[i + M * j] = d / h2;
          }
        next.emplace_back(c.dim(), M, c.spacing(), c.origin() + c.spacing(), std::move(v),
                          c.extension());
      }
    }
    comps = std::move(next);
  }
  return comps;
}

GridFunction pointwise_norm(std::span<const GridFunction> comps) {
  require_common_grid(comps);
  if (comps.size() == 1) {
    GridFunction g = comps.front();
    for (double& v : g.mutable_values()) v = std::fabs(v);
    return g;
  }
  GridFunction g = comps.front();
  auto& out = g.mutable_values();
  for (std::size_t k = 0; k < out.size(); ++k) {
    double s = 0.0;
    for (const auto& c : comps) s += c[k] * c[k];
    out[k] = std::sqrt(s);
  }
  return g;
}

SeminormResult gagliardo(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u) {
  if (s.intpart() != 0) throw std::invalid_argument("gagliardo needs s < 1; use gagliardo_higher");
  const GridFunction comps[] = {u};
  return gagliardo(A, s.value(), comps);
}

namespace {

GroupedTerms gagliardo_terms(double s, std::span<const GridFunction> components) {
  check_frac(s);
  require_common_grid(components);
  const Sampler S(components);
  const auto& g = components.front();
  const long n = S.n();
  const int dim = S.dim();
  const bool zero_ext = g.extension() == Extension::zero;
  const double h = g.spacing(), mu = g.cell_measure();
  GroupedTerms terms;
  // Half of the offsets; the mirrored offset gives the same terms.
  auto visit = [&](long h1, long h2) {
    const double len = h * std::hypot(static_cast<double>(h1), static_cast<double>(h2));
    long lo1, hi1, lo2 = 0, hi2 = 1;
    offset_range(h1, n, zero_ext, lo1, hi1);
    if (dim == 2) offset_range(h2, n, zero_ext, lo2, hi2);
    const double scale = std::pow(len, s);
    std::vector<double> v;
    for (long j = lo2; j < hi2; ++j)
      for (long i = lo1; i < hi1; ++i) {
        if (!S.inside(i, j) && !S.inside(i + h1, j + h2)) continue;
        v.push_back(S.distance(i + h1, j + h2, i, j) / scale);
      }
    terms.add_group(2.0 * mu * mu / std::pow(len, dim), std::move(v));
  };
  if (dim == 1) {
    for (long h1 = 1; h1 < n; ++h1) visit(h1, 0);
  } else {
    for (long h1 = 0; h1 < n; ++h1)
      for (long h2 = h1 == 0 ? 1 : -(n - 1); h2 < n; ++h2) visit(h1, h2);
  }
  return terms;
}

}  // namespace

SeminormResult gagliardo(const YoungFunction& A, double s,
                         std::span<const GridFunction> components) {
  const auto terms = gagliardo_terms(s, components);
  const double n = static_cast<double>(components.front().points());
  return solve_with(terms, A, {{"max_offset_cells", n - 1}, {"grid_points", n}});
}

double gagliardo_modular(const YoungFunction& A, double s,
                         std::span<const GridFunction> components, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return gagliardo_terms(s, components).modular(A, lambda);
}

SeminormResult gagliardo_higher(const YoungFunction& A, const FractionalOrder& s,
                                const GridFunction& u) {
  const auto comps = grad_k(u, s.intpart());
  return gagliardo(A, s.fracpart(), comps);
}

SeminormResult besov(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u) {
  if (s.intpart() != 0) throw std::invalid_argument("besov needs s < 1");
  const GridFunction comps[] = {u};
  return besov(A, s.value(), comps);
}

SeminormResult besov(const YoungFunction& A, double s, std::span<const GridFunction> components) {
  check_frac(s);
  require_common_grid(components);
  const Sampler S(components);
  const auto& g = components.front();
  const long n = S.n();
  const int dim = S.dim();
  const bool zero_ext = g.extension() == Extension::zero;
  const double mu = g.cell_measure();
  GroupedTerms terms;
  int shells = 0;
  for (long shift = 1; shift <= n; shift *= 2, ++shells) {
    const double scale = std::pow(g.spacing() * static_cast<double>(shift), s);
    for (int axis = 0; axis < dim; ++axis) {
      const long h1 = axis == 0 ? shift : 0, h2 = axis == 1 ? shift : 0;
      long lo1, hi1, lo2 = 0, hi2 = 1;
      offset_range(h1, n, zero_ext, lo1, hi1);
      if (dim == 2) offset_range(h2, n, zero_ext, lo2, hi2);
      std::vector<double> v;
      for (long j = lo2; j < hi2; ++j)
        for (long i = lo1; i < hi1; ++i) {
          if (!S.inside(i, j) && !S.inside(i + h1, j + h2)) continue;
          v.push_back(S.distance(i + h1, j + h2, i, j) / scale);
        }
      terms.add_group(mu * kLn2, std::move(v));
    }
  }
  return solve_with(terms, A, {{"shells", static_cast<double>(shells)},
                               {"min_shift", g.spacing()},
                               {"max_shift", g.spacing() * static_cast<double>(n)}});
}

SeminormResult oscillation(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u) {
  const int dim = u.dim();
  const long n = static_cast<long>(u.points());
  const double h = u.spacing(), mu = u.cell_measure();
  const bool zero_ext = u.extension() == Extension::zero;
  const auto mono = monomials(dim, s.intpart());
  const GridFunction comps[] = {u};
  const Sampler S(comps);

  WeightedValues terms;
  int scales = 0;
  double smallest = 0.0;
  for (int l = 0;; ++l) {
    const double r = std::ldexp(1.0, -l);
    if (r < h) break;
    const long R = static_cast<long>(std::floor(r / h * (1.0 + 1e-12)));
    std::vector<std::pair<long, long>> ball;
    for (long b = dim == 1 ? 0 : -R; b <= (dim == 1 ? 0 : R); ++b)
      for (long a = -R; a <= R; ++a)
        if (static_cast<double>(a * a + b * b) * h * h <= r * r * (1.0 + 1e-12)) ball.emplace_back(a, b);
    if (ball.size() <= mono.size()) break;
    ++scales;
    smallest = r;
    const double scale = h / r;
    const double rs = std::pow(r, s.value());
    const Eigen::MatrixXd full = residual_map(design_matrix(ball, scale, mono));

    const long pad = zero_ext ? R : 0;
    const long jlo = dim == 1 ? 0 : -pad, jhi = dim == 1 ? 1 : n + pad;
    Eigen::VectorXd vals(static_cast<Eigen::Index>(ball.size()));
    for (long j = jlo; j < jhi; ++j)
      for (long i = -pad; i < n + pad; ++i) {
        std::vector<std::pair<long, long>> local;
        bool clipped = false, any = false;
        for (const auto& [a, b] : ball) {
          if (S.inside(i + a, j + b)) {
            any = any || S.value(0, i + a, j + b) != 0.0;
          } else if (!zero_ext) {
            clipped = true;
          }
        }
        if (!any) continue;
        double mean = 0.0;
        if (!clipped) {
          for (std::size_t p = 0; p < ball.size(); ++p)
            vals(static_cast<Eigen::Index>(p)) = S.value(0, i + ball[p].first, j + ball[p].second);
          mean = (full * vals).cwiseAbs().mean();
        } else {
          for (const auto& o : ball)
            if (S.inside(i + o.first, j + o.second)) local.push_back(o);
          if (local.size() <= mono.size()) continue;
          Eigen::VectorXd lv(static_cast<Eigen::Index>(local.size()));
          for (std::size_t p = 0; p < local.size(); ++p)
            lv(static_cast<Eigen::Index>(p)) = S.value(0, i + local[p].first, j + local[p].second);
          mean = (residual_map(design_matrix(local, scale, mono)) * lv).cwiseAbs().mean();
        }
        terms.add(mean / rs, mu * kLn2);
      }
  }
  terms.canonicalize();
  SeminormResult out;
  out.value = luxemburg_norm(A, terms);
  if (out.value > 0.0) {
    WeightedValues scaled = terms;
    for (double& v : scaled.values) v /= out.value;
    out.modular_at_value = modular(A, scaled);
  }
  out.discretization = {{"scales", static_cast<double>(scales)},
                        {"min_radius", smallest},
                        {"max_radius", 1.0}};
  return out;
}

Space parse_space(const std::string& name) {
  if (name == "LA") return Space::LA;
  if (name == "W") return Space::W;
  if (name == "B") return Space::B;
  if (name == "O") return Space::O;
  if (name == "F") return Space::F;
  throw std::invalid_argument("unknown space '" + name + "' (expected LA, W, B, O or F)");
}

std::string space_name(Space space) {
  switch (space) {
    case Space::LA: return "LA";
    case Space::W: return "W";
    case Space::B: return "B";
    case Space::O: return "O";
    case Space::F: return "F";
  }
  return "?";
}

double full_norm(Space space, const YoungFunction& A, const FractionalOrder& s,
                 const GridFunction& u) {
  switch (space) {
    case Space::LA:
      return luxemburg_norm(A, u);
    case Space::O:
      return luxemburg_norm(A, u) + oscillation(A, s, u).value;
    case Space::F:
      return fsa_norm(A, s, u);
    case Space::W:
    case Space::B: {
      double total = 0.0;
      std::vector<GridFunction> top;
      for (int k = 0; k <= s.intpart(); ++k) {
        auto comps = grad_k(u, k);
        total += luxemburg_norm(A, pointwise_norm(comps));
        if (k == s.intpart()) top = std::move(comps);
      }
      const auto semi = space == Space::W ? gagliardo(A, s.fracpart(), top)
                                          : besov(A, s.fracpart(), top);
      return total + semi.value;
    }
  }
  return kInf;
}

double PiecewiseLinear::operator()(double t) const {
  if (x.empty() || t < x.front() || t >= x.back()) return 0.0;
  const auto it = std::upper_bound(x.begin(), x.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - x.begin());
  const double x0 = x[k - 1], x1 = x[k];
  return y[k - 1] + (y[k] - y[k - 1]) * (t - x0) / (x1 - x0);
}

double PiecewiseLinear::integral_to(double t) const {
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < x.size() && x[k] < t; ++k) {
    const double x0 = x[k], x1 = x[k + 1];
    if (x1 == x0) continue;
    const double b = std::min(t, x1);
    const double yb = y[k] + (y[k + 1] - y[k]) * (b - x0) / (x1 - x0);
    s += 0.5 * (y[k] + yb) * (b - x0);
  }
  return s;
}

ConvolutionReport hardy_check(const YoungFunction& A, double s, const PiecewiseLinear& f) {
  check_frac(s);
  if (f.x.size() != f.y.size()) throw std::invalid_argument("profile abscissae and values differ in length");
  for (std::size_t k = 0; k < f.x.size(); ++k) {
    if (!(f.y[k] >= 0.0) || !(f.x[k] >= 0.0)) throw std::invalid_argument("profile must be nonnegative");
    if (k > 0 && f.x[k] < f.x[k - 1]) throw std::invalid_argument("profile abscissae must be sorted");
  }
  ConvolutionReport r;
  r.context["s"] = s;
  double first = 0.0, last = 0.0;
  for (double x : f.x)
    if (x > 0.0) {
      first = first == 0.0 ? x : first;
      last = x;
    }
  if (first == 0.0) return r;

  const quad::Integrand lhs_f = [&](double t) {
    const double v = f.integral_to(t) / std::pow(t, 1.0 + s);
    return v == 0.0 ? 0.0 : A(v) / t;
  };
  const quad::Integrand rhs_f = [&](double t) {
    const double v = f(t) / std::pow(t, s);
    return v == 0.0 ? 0.0 : A(v) / t;
  };
  auto total = [&](const quad::Integrand& g, bool tail) {
    const auto head = quad::integrate_head(g, first);
    if (head.status == quad::Status::divergent) return kInf;
    double sum = head.value + quad::adaptive_with_breaks(g, first, last, f.x);
    if (tail) {
      const auto t = quad::integrate_tail(g, last);
      if (t.status == quad::Status::divergent) return kInf;
      sum += t.value;
    }
    return sum;
  };
  r.lhs = total(lhs_f, true);
  r.rhs = total(rhs_f, false);
  r.margin = r.lhs == kInf && r.rhs == kInf ? 0.0 : r.rhs - r.lhs;
  return r;
}

}  // namespace orlicz

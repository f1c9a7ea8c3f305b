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
#include "orlicz/convolve.hpp"

#include <algorithm>
#include <cmath>

#include "spectral.hpp"

namespace orlicz {
namespace {

// Above this many multiply-adds the grid convolution goes through FFTW.
constexpr double kDirectLimit = 6.7e7;

// Solver tolerance for the constant-one bounds, well under their slack.
constexpr double kTightTol = 1e-14;

// Linear convolution of two N^dim arrays via zero padding to (2N)^dim,
// returning entries m = k + N/2 for k in [0, N)^dim.
std::vector<double> fft_convolve(int dim, std::size_t N, std::span<const double> u,
                                 std::span<const double> v) {
  const std::size_t M = 2 * N;
  auto padded = [&](std::span<const double> src) {
    std::vector<double> dst(dim == 1 ? M : M * M, 0.0);
    if (dim == 1) {
      std::copy(src.begin(), src.end(), dst.begin());
    } else {
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) dst[j * M + i] = src[j * N + i];
    }
    return dst;
  };
  auto fa = detail::forward_real(dim, M, padded(u));
  const auto fb = detail::forward_real(dim, M, padded(v));
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  const auto out = detail::backward_real(dim, M, std::move(fa));
  std::vector<double> res(dim == 1 ? N : N * N);
  const std::size_t off = N / 2;
  if (dim == 1) {
    for (std::size_t k = 0; k < N; ++k) res[k] = out[k + off];
  } else {
    for (std::size_t k2 = 0; k2 < N; ++k2)
      for (std::size_t k1 = 0; k1 < N; ++k1) res[k2 * N + k1] = out[(k2 + off) * M + k1 + off];
  }
  return res;
}

// Direct sum over the valid box of j, pairing j with K - j. The valid box is
// symmetric under j -> K - j, which reverses lexicographic order, so the
// pairs are summed in an order that does not depend on which factor is u.
std::vector<double> direct_convolve(int dim, std::size_t N, std::span<const double> u,
                                    std::span<const double> v) {
  const long n = static_cast<long>(N);
  const long off = n / 2;
  std::vector<double> res(dim == 1 ? N : N * N, 0.0);
  auto range = [n](long K, long& lo, long& hi) {
    lo = std::max(0L, K - (n - 1));
    hi = std::min(n - 1, K);
  };
  if (dim == 1) {
    for (long k = 0; k < n; ++k) {
      const long K = k + off;
      long lo, hi;
      range(K, lo, hi);
      double s = 0.0;
      for (long a = lo, b = hi; a <= b; ++a, --b) {
        const double ta = u[static_cast<std::size_t>(K - a)] * v[static_cast<std::size_t>(a)];
        if (a == b) {
          s += ta;
        } else {
          const double tb = u[static_cast<std::size_t>(K - b)] * v[static_cast<std::size_t>(b)];
          s += ta + tb;
        }
      }
      res[static_cast<std::size_t>(k)] = s;
    }
    return res;
  }
  auto at = [n](std::span<const double> w, long i, long j) {
    return w[static_cast<std::size_t>(j * n + i)];
  };
  for (long k2 = 0; k2 < n; ++k2) {
    const long K2 = k2 + off;
    long lo2, hi2;
    range(K2, lo2, hi2);
    for (long k1 = 0; k1 < n; ++k1) {
      const long K1 = k1 + off;
      long lo1, hi1;
      range(K1, lo1, hi1);
      const long w1 = hi1 - lo1 + 1;
      const long count = w1 * (hi2 - lo2 + 1);
      double s = 0.0;
      for (long f = 0, g = count - 1; f <= g; ++f, --g) {
        const long a1 = lo1 + f % w1, a2 = lo2 + f / w1;
        const double ta = at(u, K1 - a1, K2 - a2) * at(v, a1, a2);
        if (f == g) {
          s += ta;
        } else {
          const long b1 = lo1 + g % w1, b2 = lo2 + g / w1;
          s += ta + at(u, K1 - b1, K2 - b2) * at(v, b1, b2);
        }
      }
      res[static_cast<std::size_t>(k2 * n + k1)] = s;
    }
  }
  return res;
}

double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

}  // namespace

bool ConvolutionReport::holds(double slack) const {
  if (!(lhs <= rhs * (1.0 + slack))) return false;
  if (std::isnan(modular_lhs)) return true;
  return modular_lhs <= modular_rhs * (1.0 + slack);
}

GridFunction conv_grid(const GridFunction& u, const GridFunction& v) {
  if (!u.same_grid(v)) throw GridError("convolution needs functions on the same grid");
  const std::size_t N = u.points();
  const int dim = u.dim();
  const double cells = static_cast<double>(u.size());
  std::vector<double> w = cells * cells <= kDirectLimit
                              ? direct_convolve(dim, N, u.values(), v.values())
                              : fft_convolve(dim, N, u.values(), v.values());
  const double mu = u.cell_measure();
  for (double& x : w) x *= mu;
  return GridFunction(dim, N, u.spacing(), u.origin(), std::move(w), u.extension());
}

RealSequence conv_seq(const RealSequence& a, const RealSequence& b) {
  if (a.values.empty() || b.values.empty()) return RealSequence{a.offset + b.offset, {}};
  RealSequence out{a.offset + b.offset,
                   std::vector<double>(a.values.size() + b.values.size() - 1, 0.0)};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    for (std::size_t l = 0; l < b.values.size(); ++l) out.values[i + l] += a.values[i] * b.values[l];
  return out;
}

ConvolutionReport check_l1_bound(const YoungFunction& A, const GridFunction& u,
                                 const GridFunction& v) {
  const GridFunction w = conv_grid(u, v);
  const double v1 = v.l1_norm();
  ConvolutionReport r;
  r.lhs = luxemburg_norm(A, w, kTightTol);
  r.rhs = v1 * luxemburg_norm(A, u, kTightTol);
  r.margin = r.rhs - r.lhs;
  r.modular_lhs = modular(A, w);
  r.modular_rhs = modular(A, u.scaled(v1));
  r.context["v_l1"] = v1;
  return r;
}

ConvolutionReport check_discrete_bound(const YoungFunction& A, const RealSequence& a,
                                       const RealSequence& b) {
  const RealSequence ab = conv_seq(a, b);
  const double a1 = a.l1_norm();
  RealSequence scaled_b = b;
  for (double& x : scaled_b.values) x *= a1;
  ConvolutionReport r;
  r.lhs = luxemburg_norm(A, ab, kTightTol);
  r.rhs = a1 * luxemburg_norm(A, b, kTightTol);
  r.margin = r.rhs - r.lhs;
  r.modular_lhs = modular(A, ab);
  r.modular_rhs = modular(A, scaled_b);
  r.context["a_l1"] = a1;
  return r;
}

ConvolutionReport check_sharp_bound(const YoungFunction& A, const SmoothnessParams& P,
                                    const GridFunction& u, const GridFunction& v, double c) {
  return check_sharp_bound(A, target(A, P), P, u, v, c);
}

ConvolutionReport check_sharp_bound(const YoungFunction& A, const YoungFunction& target_A,
                                    const SmoothnessParams& P, const GridFunction& u,
                                    const GridFunction& v, double c) {
  const GridFunction w = conv_grid(u, v);
  const double vq = v.lp_norm(P.kernel_exponent());
  const double ua = luxemburg_norm(A, u);
  ConvolutionReport r;
  r.rhs = 1.0;
  r.lhs = ua == 0.0 || vq == 0.0 ? 0.0 : luxemburg_norm(target_A, w) / (vq * ua);
  r.margin = r.rhs - r.lhs;
  r.context["v_norm"] = vq;
  r.context["u_norm"] = ua;
  if (c > 0.0) {
    const double M = modular(A, u);
    r.modular_rhs = M;
    r.modular_lhs = 0.0;
    if (M > 0.0 && std::isfinite(M) && vq > 0.0) {
      const double scale = c * vq * std::pow(M, P.sigma / P.n);
      r.modular_lhs = modular(target_A, w.scaled(1.0 / scale));
    }
    r.context["c"] = c;
  }
  return r;
}

double weighted_step_integral(const StepRearrangement& r, double a, double b, double gamma) {
  if (!(gamma > -1.0)) throw GridError("weighted step integral needs gamma > -1");
  const double e = gamma + 1.0;
  double m = 0.0;
  std::vector<double> terms;
  for (std::size_t k = 0; k < r.widths.size(); ++k) {
    const double lo = std::max(m, a);
    const double hi = std::min(m + r.widths[k], b);
    if (hi > lo) terms.push_back(r.values[k] * (std::pow(hi, e) - std::pow(lo, e)) / e);
    m += r.widths[k];
    if (m >= b) break;
  }
  return sorted_sum(std::move(terms));
}

ConvolutionReport oneil_check(const GridFunction& u, const GridFunction& v, double t,
                              const SmoothnessParams& P) {
  if (!(t > 0.0)) throw GridError("O'Neil check needs t > 0");
  const GridFunction w = conv_grid(u, v);
  const StepRearrangement ws = rearrangement(w);
  const StepRearrangement us = rearrangement(u);
  const double gamma = (P.sigma - P.n) / P.n;
  const double vq = v.lp_norm(P.kernel_exponent());
  ConvolutionReport r;
  r.lhs = double_star(ws, t);
  r.rhs = vq * (std::pow(t, gamma) * us.integral_to(t) +
                weighted_step_integral(us, t, kInf, gamma));
  r.margin = r.rhs - r.lhs;
  r.context["t"] = t;
  r.context["v_norm"] = vq;
  return r;
}

}  // namespace orlicz

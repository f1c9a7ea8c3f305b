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
#include "orlicz/littlewood_paley.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>

#include "spectral.hpp"

namespace orlicz {
namespace {

double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_shape(const DyadicPartition& P, const GridFunction& u) {
  if (u.dim() != P.dim() || u.points() != P.points() ||
      std::fabs(u.half_width() - P.half_width()) > 1e-12 * P.half_width())
    throw GridError("function does not live on the partition's grid");
}

GridFunction like(const GridFunction& u, std::vector<double> values) {
  return GridFunction(u.dim(), u.points(), u.spacing(), u.origin(), std::move(values), u.extension());
}

// Sample positions sit at -L + i h, so the transform of u carries a phase
// relative to a box centred at 0. Radial multipliers do not see it.
std::vector<std::complex<double>> spectrum(const GridFunction& u) {
  return detail::forward_real(u.dim(), u.points(), u.values());
}

// Direct circular convolution is used up to this many multiply-adds.
constexpr std::size_t kDirectLimit = std::size_t{1} << 26;

// out(x) = sum_j K(j) u(x - j), summed over j in a fixed order so that a
// whole-cell shift of u shifts the output bit for bit.
std::vector<double> circular(int dim, std::size_t N, const std::vector<double>& K,
                             std::span<const double> u) {
  std::vector<double> out(u.size(), 0.0);
  const std::size_t Ny = dim == 2 ? N : 1;
  for (std::size_t jy = 0; jy < Ny; ++jy)
    for (std::size_t jx = 0; jx < N; ++jx) {
      const double k = K[jx + N * jy];
      if (k == 0.0) continue;
      for (std::size_t iy = 0; iy < Ny; ++iy) {
        const std::size_t sy = (iy + Ny - jy) % Ny;
        double* o = out.data() + N * iy;
        const double* in = u.data() + N * sy;
        for (std::size_t ix = 0; ix < jx; ++ix) o[ix] += k * in[ix + N - jx];
        for (std::size_t ix = jx; ix < N; ++ix) o[ix] += k * in[ix - jx];
      }
    }
  return out;
}

GridFunction apply(const GridFunction& u, const std::vector<std::complex<double>>& spec,
                   const std::vector<double>& mult) {
  if (u.size() * u.size() <= kDirectLimit) {
    std::vector<std::complex<double>> m(mult.begin(), mult.end());
    const auto K = detail::backward_real(u.dim(), u.points(), std::move(m));
    return like(u, circular(u.dim(), u.points(), K, u.values()));
  }
  std::vector<std::complex<double>> s = spec;
  for (std::size_t k = 0; k < s.size(); ++k) s[k] *= mult[k];
  return like(u, detail::backward_real(u.dim(), u.points(), std::move(s)));
}

// Sum over blocks of modular(A, weight_i |block_i| / lambda), blocks given
// as lists of components (Euclidean norm across components).
WeightedValues block_sample(const std::vector<std::vector<GridFunction>>& blocks,
                            const std::vector<double>& weights) {
  WeightedValues m;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto mag = pointwise_norm(blocks[b]);
    for (double v : mag.values()) m.add(weights[b] * v, mag.cell_measure());
  }
  m.canonicalize();
  return m;
}

}  // namespace

DyadicPartition::DyadicPartition(int dim, std::size_t N, double L) : dim_(dim), N_(N), L_(L) {
  if (dim != 1 && dim != 2) throw GridError("partition dimension must be 1 or 2");
  if (!is_power_of_two(N)) throw GridError("partition needs N a power of two");
  if (!(L > 0.0)) throw GridError("box half-width must be positive");
  i_max_ = static_cast<int>(std::floor(std::log2(nyquist()))) - 1;
  if (i_max_ < 1) throw GridError("grid too coarse for two dyadic blocks");

  const std::size_t half = N / 2 + 1;
  const std::size_t rows = dim == 1 ? 1 : N;
  const double step = M_PI / L;
  abs_.resize(half * rows);
  axis_[0].resize(abs_.size());
  axis_[1].assign(abs_.size(), 0.0);
  for (std::size_t j = 0; j < rows; ++j) {
    const long kj = j < N / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(N);
    for (std::size_t i = 0; i < half; ++i) {
      const std::size_t idx = j * half + i;
      axis_[0][idx] = step * static_cast<double>(i);
      if (dim == 2) axis_[1][idx] = step * static_cast<double>(kj);
      abs_[idx] = std::hypot(axis_[0][idx], axis_[1][idx]);
    }
  }
  phi_.resize(static_cast<std::size_t>(i_max_) + 1);
  for (int i = 0; i <= i_max_; ++i) {
    auto& p = phi_[static_cast<std::size_t>(i)];
    p.resize(abs_.size());
    for (std::size_t k = 0; k < abs_.size(); ++k) p[k] = multiplier(i, abs_[k]);
  }
}

DyadicPartition::DyadicPartition(const GridFunction& shape)
    : DyadicPartition(shape.dim(), shape.points(), shape.half_width()) {}

double DyadicPartition::profile(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double a = bump(2.0 - r), b = bump(r - 1.0);
  return a / (a + b);
}

double DyadicPartition::nyquist() const { return M_PI * static_cast<double>(N_) / (2.0 * L_); }

double DyadicPartition::multiplier(int i, double xi_abs) const {
  if (i == 0) return profile(xi_abs);
  return profile(std::ldexp(xi_abs, -i)) - profile(std::ldexp(xi_abs, -i + 1));
}

GridFunction block(const DyadicPartition& P, const GridFunction& u, int i) {
  require_shape(P, u);
  if (i < 0 || i > P.i_max()) throw std::out_of_range("block index out of range");
  return apply(u, spectrum(u), P.phi(i));
}

std::vector<GridFunction> blocks_with_remainder(const DyadicPartition& P, const GridFunction& u) {
  require_shape(P, u);
  const auto spec = spectrum(u);
  std::vector<GridFunction> out;
  for (int i = 0; i <= P.i_max(); ++i) out.push_back(apply(u, spec, P.phi(i)));
  // 1 - sum_{i <= i_max} phi_i = 1 - phi_0(2^{-i_max} xi).
  std::vector<double> rest(P.lattice_abs().size());
  for (std::size_t k = 0; k < rest.size(); ++k)
    rest[k] = 1.0 - DyadicPartition::profile(std::ldexp(P.lattice_abs()[k], -P.i_max()));
  out.push_back(apply(u, spec, rest));
  return out;
}

std::vector<GridFunction> spectral_gradient(const DyadicPartition& P, const GridFunction& u, int k) {
  require_shape(P, u);
  if (k < 0) throw std::invalid_argument("derivative order must be nonnegative");
  const std::size_t N = P.points(), half = N / 2 + 1;
  std::vector<std::vector<std::complex<double>>> comps{spectrum(u)};
  for (int order = 0; order < k; ++order) {
    std::vector<std::vector<std::complex<double>>> next;
    for (const auto& c : comps)
      for (int axis = 0; axis < P.dim(); ++axis) {
        auto d = c;
        const auto& xi = P.lattice_axis(axis);
        for (std::size_t q = 0; q < d.size(); ++q) {
          // The Nyquist mode has no signed frequency; drop it.
          const std::size_t i = q % half, j = q / half;
          const bool nyq = axis == 0 ? i == N / 2 : j == N / 2;
          d[q] = nyq ? 0.0 : d[q] * std::complex<double>(0.0, xi[q]);
        }
        next.push_back(std::move(d));
      }
    comps = std::move(next);
  }
  std::vector<GridFunction> out;
  for (auto& c : comps) out.push_back(like(u, detail::backward_real(u.dim(), N, std::move(c))));
  return out;
}

double fsa_norm(const YoungFunction& A, const FractionalOrder& s, const GridFunction& u) {
  const DyadicPartition P(u);
  std::vector<std::vector<GridFunction>> blocks;
  std::vector<double> weights;
  const auto all = blocks_with_remainder(P, u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    blocks.push_back({all[i]});
    weights.push_back(std::exp2(static_cast<double>(i) * s.value()));
  }
  return luxemburg_norm(A, block_sample(blocks, weights));
}

double GradientChainReport::first_ratio() const {
  return gradient_blocks > 0.0 ? gradient_modular / gradient_blocks : 0.0;
}

double GradientChainReport::second_ratio() const {
  return function_blocks > 0.0 ? gradient_blocks / function_blocks : 0.0;
}

GradientChainReport gradient_block_chain(const YoungFunction& A, const FractionalOrder& s,
                                         const GridFunction& u, double c1, double c2) {
  const DyadicPartition P(u);
  GradientChainReport r;
  r.c1 = c1;
  r.c2 = c2;
  const auto grad = spectral_gradient(P, u, s.intpart());
  r.gradient_modular = modular(A, pointwise_norm(grad).scaled(c1));

  // Blocks of every gradient component, grouped by block index.
  std::vector<std::vector<GridFunction>> gblocks(static_cast<std::size_t>(P.i_max()) + 2);
  for (const auto& g : grad) {
    auto b = blocks_with_remainder(P, g);
    for (std::size_t i = 0; i < b.size(); ++i) gblocks[i].push_back(std::move(b[i]));
  }
  std::vector<double> gw, uw;
  std::vector<std::vector<GridFunction>> ublocks;
  const auto ub = blocks_with_remainder(P, u);
  for (std::size_t i = 0; i < gblocks.size(); ++i) {
    gw.push_back(std::exp2(static_cast<double>(i) * s.fracpart()));
    uw.push_back(c2 * std::exp2(static_cast<double>(i) * s.value()));
    ublocks.push_back({ub[i]});
  }
  r.gradient_blocks = modular(A, block_sample(gblocks, gw));
  r.function_blocks = modular(A, block_sample(ublocks, uw));
  return r;
}

}  // namespace orlicz

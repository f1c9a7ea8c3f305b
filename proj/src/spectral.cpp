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
#include "spectral.hpp"

#include <fftw3.h>

#include <mutex>

namespace orlicz::detail {
namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::size_t half_size(int dim, std::size_t M) { return (M / 2 + 1) * (dim == 1 ? 1 : M); }

}  // namespace

std::vector<std::complex<double>> forward_real(int dim, std::size_t M, std::span<const double> x) {
  std::vector<double> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(half_size(dim, M));
  auto* c = reinterpret_cast<fftw_complex*>(out.data());
  const int m = static_cast<int>(M);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = dim == 1 ? fftw_plan_dft_r2c_1d(m, in.data(), c, FFTW_ESTIMATE)
                    : fftw_plan_dft_r2c_2d(m, m, in.data(), c, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<double> backward_real(int dim, std::size_t M, std::vector<std::complex<double>> spec) {
  std::vector<double> out(dim == 1 ? M : M * M);
  auto* c = reinterpret_cast<fftw_complex*>(spec.data());
  const int m = static_cast<int>(M);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = dim == 1 ? fftw_plan_dft_c2r_1d(m, c, out.data(), FFTW_ESTIMATE)
                    : fftw_plan_dft_c2r_2d(m, m, c, out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / static_cast<double>(out.size());
  for (double& v : out) v *= scale;
  return out;
}

}  // namespace orlicz::detail

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
#include "orlicz/families.hpp"

#include <cmath>

namespace orlicz {
namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace

YoungFunction random_tabulated_young(std::mt19937_64& rng) {
  const int pieces = std::uniform_int_distribution<int>(2, 8)(rng);
  std::vector<DensityVertex> v;
  double t = 0.0;
  double a = uniform(rng, 0.0, 1.0) < 0.3 ? log_uniform(rng, 0.01, 1.0) : 0.0;
  v.push_back({t, a});
  for (int k = 0; k < pieces; ++k) {
    const double kind = uniform(rng, 0.0, 1.0);
    if (kind < 0.15) {
      a += log_uniform(rng, 0.05, 2.0);  // jump
    } else if (kind < 0.3) {
      t += log_uniform(rng, 0.05, 3.0);  // flat piece
    } else {
      t += log_uniform(rng, 0.05, 3.0);
      a += log_uniform(rng, 0.05, 2.0);
    }
    v.push_back({t, a});
  }
  const double tail_kind = uniform(rng, 0.0, 1.0);
  double tail = log_uniform(rng, 0.1, 5.0);
  if (tail_kind < 0.2 && v.back().a > 0.0) tail = 0.0;
  else if (tail_kind < 0.4 && v.back().t > 0.0) tail = kInf;
  return YoungFunction::polyline(std::move(v), tail);
}

YoungFunction random_young(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:
      return YoungFunction::power(uniform(rng, 1.0, 4.0));
    case 1:
      return YoungFunction::power_log(uniform(rng, 1.2, 3.0), uniform(rng, -0.15, 2.0));
    case 2:
      return YoungFunction::exponential().scaled(log_uniform(rng, 0.1, 10.0));
    case 3: {
      const double p0 = uniform(rng, 1.0, 3.0);
      const double p = uniform(rng, p0, 4.0);
      return YoungFunction::spliced(YoungFunction::power(p0), YoungFunction::power(p),
                                    log_uniform(rng, 0.1, 10.0));
    }
    default:
      return random_tabulated_young(rng);
  }
}

}  // namespace orlicz

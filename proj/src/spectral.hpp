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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace orlicz::detail {

/// Real-to-half-complex transform of an M^dim array (first axis fastest).
/// The half spectrum has M/2 + 1 entries along the first axis.
std::vector<std::complex<double>> forward_real(int dim, std::size_t M, std::span<const double> x);

/// Inverse of forward_real, normalized so that backward(forward(x)) = x.
std::vector<double> backward_real(int dim, std::size_t M, std::vector<std::complex<double>> spec);

}  // namespace orlicz::detail

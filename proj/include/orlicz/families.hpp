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

#include <random>

#include "orlicz/young.hpp"

namespace orlicz {

/// Random tabulated Young function: a monotone polyline density with a few
/// vertices (jumps and flat pieces included) and a random tail that is
/// constant, linear or a domain endpoint.
YoungFunction random_tabulated_young(std::mt19937_64& rng);

/// Random Young function drawn from the analytic families, splices of them
/// and tabulated densities.
YoungFunction random_young(std::mt19937_64& rng);

}  // namespace orlicz

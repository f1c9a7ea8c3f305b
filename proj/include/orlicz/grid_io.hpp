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

#include <iosfwd>
#include <string>

#include "orlicz/grid.hpp"

namespace orlicz {

/// CSV rows `x,value` (1-D) or `x,y,value` (2-D), x fastest. A header line is
/// optional. Rows must cover a uniform box grid exactly once.
GridFunction read_grid_csv(std::istream& in);
void write_grid_csv(std::ostream& out, const GridFunction& u);

/// Little-endian binary: 32-byte header ("OGF1" padded with zeros to 8 bytes,
/// int64 n, int64 N, float64 L) followed by N^n float64 samples on [-L, L)^n,
/// x fastest.
GridFunction read_grid_binary(std::istream& in);
void write_grid_binary(std::ostream& out, const GridFunction& u);

/// Reads either format, detected from the magic bytes.
GridFunction load_grid(const std::string& path);
/// Writes binary when the path ends in ".ogf", CSV otherwise.
void save_grid(const std::string& path, const GridFunction& u);

}  // namespace orlicz

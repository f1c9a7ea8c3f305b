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
#include "orlicz/grid_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace orlicz {
namespace {

static_assert(std::endian::native == std::endian::little, "binary grid I/O assumes little-endian");

constexpr char kMagic[8] = {'O', 'G', 'F', '1', 0, 0, 0, 0};

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw GridError("empty CSV cell");
    cell = cell.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw GridError("non-numeric CSV cell '" + cell + "'");
    }
    if (used != cell.size()) throw GridError("non-numeric CSV cell '" + cell + "'");
    out.push_back(v);
  }
  return out;
}

// Sorted distinct coordinates; checks uniform spacing.
std::vector<double> axis_of(std::vector<double> xs, double& spacing) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) throw GridError("CSV grid needs at least two points per axis");
  spacing = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double expect = xs.front() + spacing * static_cast<double>(i);
    if (std::fabs(xs[i] - expect) > 1e-9 * spacing * static_cast<double>(xs.size()))
      throw GridError("CSV rows are not grid-aligned");
  }
  return xs;
}

std::size_t index_on(const std::vector<double>& axis, double x, double spacing) {
  const double r = (x - axis.front()) / spacing;
  const long k = std::lround(r);
  if (k < 0 || static_cast<std::size_t>(k) >= axis.size() || std::fabs(r - k) > 1e-6)
    throw GridError("CSV row off the grid");
  return static_cast<std::size_t>(k);
}

}  // namespace

GridFunction read_grid_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (first) {
      first = false;
      const auto c = line.find_first_not_of(" \t");
      if (c != std::string::npos && std::isalpha(static_cast<unsigned char>(line[c])) &&
          line.substr(c, 3) != "inf" && line.substr(c, 3) != "nan")
        continue;  // header
    }
    rows.push_back(parse_row(line));
  }
  if (rows.empty()) throw GridError("empty CSV grid");
  const std::size_t cols = rows.front().size();
  if (cols != 2 && cols != 3) throw GridError("CSV grid rows need 2 or 3 columns");
  for (const auto& r : rows)
    if (r.size() != cols) throw GridError("ragged CSV grid");
  const int dim = static_cast<int>(cols) - 1;

  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    xs.push_back(r[0]);
    if (dim == 2) ys.push_back(r[1]);
  }
  double hx = 0.0, hy = 0.0;
  const auto ax = axis_of(xs, hx);
  const std::size_t N = ax.size();
  std::vector<double> ay;
  if (dim == 2) {
    ay = axis_of(ys, hy);
    if (ay.size() != N || std::fabs(hy - hx) > 1e-9 * hx || ay.front() != ax.front())
      throw GridError("2-D CSV grid must be a square box");
  }
  const std::size_t count = dim == 1 ? N : N * N;
  if (rows.size() != count) throw GridError("CSV grid has missing or repeated rows");
  std::vector<double> values(count, 0.0);
  std::vector<char> seen(count, 0);
  for (const auto& r : rows) {
    std::size_t k = index_on(ax, r[0], hx);
    if (dim == 2) k += N * index_on(ay, r[1], hx);
    if (seen[k]) throw GridError("repeated CSV grid row");
    seen[k] = 1;
    values[k] = r[cols - 1];
  }
  return GridFunction(dim, N, hx, ax.front(), std::move(values));
}

void write_grid_csv(std::ostream& out, const GridFunction& u) {
  out << std::setprecision(17);
  out << (u.dim() == 1 ? "x,value\n" : "x,y,value\n");
  const std::size_t N = u.points();
  if (u.dim() == 1) {
    for (std::size_t i = 0; i < N; ++i) out << u.coord(i) << ',' << u.at(i) << '\n';
  } else {
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i)
        out << u.coord(i) << ',' << u.coord(j) << ',' << u.at(i, j) << '\n';
  }
}

GridFunction read_grid_binary(std::istream& in) {
  char magic[8];
  std::int64_t n = 0, N = 0;
  double L = 0.0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&n), 8);
  in.read(reinterpret_cast<char*>(&N), 8);
  in.read(reinterpret_cast<char*>(&L), 8);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) throw GridError("not an OGF1 grid file");
  if (n != 1 && n != 2) throw GridError("OGF1 dimension must be 1 or 2");
  if (N <= 0 || N > (std::int64_t{1} << 24)) throw GridError("OGF1 grid size out of range");
  const std::size_t count = n == 1 ? static_cast<std::size_t>(N)
                                   : static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
  std::vector<double> values(count);
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (!in) throw GridError("truncated OGF1 grid file");
  GridFunction g = GridFunction::zeros(static_cast<int>(n), static_cast<std::size_t>(N), L);
  g.mutable_values() = std::move(values);
  return g;
}

void write_grid_binary(std::ostream& out, const GridFunction& u) {
  const std::int64_t n = u.dim();
  const std::int64_t N = static_cast<std::int64_t>(u.points());
  const double L = u.half_width();
  out.write(kMagic, 8);
  out.write(reinterpret_cast<const char*>(&n), 8);
  out.write(reinterpret_cast<const char*>(&N), 8);
  out.write(reinterpret_cast<const char*>(&L), 8);
  out.write(reinterpret_cast<const char*>(u.values().data()),
            static_cast<std::streamsize>(u.size() * sizeof(double)));
}

GridFunction load_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GridError("cannot open grid file " + path);
  char head[4] = {0, 0, 0, 0};
  in.read(head, 4);
  in.clear();
  in.seekg(0);
  if (std::memcmp(head, kMagic, 4) == 0) return read_grid_binary(in);
  return read_grid_csv(in);
}

void save_grid(const std::string& path, const GridFunction& u) {
  const bool binary = path.size() >= 4 && path.substr(path.size() - 4) == ".ogf";
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw GridError("cannot write grid file " + path);
  if (binary)
    write_grid_binary(out, u);
  else
    write_grid_csv(out, u);
}

}  // namespace orlicz

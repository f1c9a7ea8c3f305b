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
#include "orlicz/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "orlicz/grid_io.hpp"

namespace orlicz {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  const std::string t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw SpecError("expected a non-negative integer, got '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string& text, const char* what) {
  const double v = parse_number(text);
  if (v < 0 || v != std::floor(v) || v > 1e6)
    throw SpecError(std::string(what) + " must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "+inf") return kInf;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw SpecError("expected a number, got '" + text + "'");
  return v;
}

SpecCall SpecCall::parse(const std::string& text) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw SpecError("malformed spec '" + text + "': expected name(args)");
  SpecCall call;
  call.name = trim(t.substr(0, open));
  if (call.name.empty()) throw SpecError("malformed spec '" + text + "': missing name");
  const std::string body = t.substr(open + 1, t.size() - open - 2);
  if (call.name == "table") {
    // Paths may contain commas and parentheses; keep the body verbatim.
    call.args.push_back(trim(body));
    call.keys.emplace_back();
    return call;
  }
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    std::string piece = trim(cur);
    cur.clear();
    if (piece.empty()) {
      if (!call.args.empty() || depth != 0) throw SpecError("empty argument in '" + text + "'");
      return;
    }
    std::string key;
    const auto eq = piece.find('=');
    const auto paren = piece.find('(');
    if (eq != std::string::npos && (paren == std::string::npos || eq < paren)) {
      key = trim(piece.substr(0, eq));
      piece = trim(piece.substr(eq + 1));
    }
    call.keys.push_back(key);
    call.args.push_back(piece);
  };
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw SpecError("unbalanced parentheses in '" + text + "'");
    if (c == ',' && depth == 0) {
      const bool first_empty = trim(cur).empty();
      flush();
      if (first_empty) throw SpecError("empty argument in '" + text + "'");
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw SpecError("unbalanced parentheses in '" + text + "'");
  flush();
  return call;
}

const std::string* SpecCall::find(std::size_t i, const std::string& key) const {
  for (std::size_t k = 0; k < args.size(); ++k)
    if (!key.empty() && keys[k] == key) return &args[k];
  std::size_t seen = 0;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!keys[k].empty()) continue;
    if (seen++ == i) return &args[k];
  }
  return nullptr;
}

double SpecCall::number(std::size_t i, const std::string& key) const {
  const std::string* s = find(i, key);
  if (!s) throw SpecError(name + "(): missing argument '" + key + "'");
  return parse_number(*s);
}

std::size_t SpecCall::positional() const {
  return static_cast<std::size_t>(std::count(keys.begin(), keys.end(), std::string()));
}

YoungFunction read_young_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open Young table '" + path + "'");
  std::vector<DensityVertex> v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw SpecError(path + ":" + std::to_string(lineno) + ": expected 't,a'");
    try {
      v.push_back({parse_number(line.substr(0, comma)), parse_number(line.substr(comma + 1))});
    } catch (const SpecError&) {
      if (v.empty() && lineno == 1) continue;  // header row
      throw SpecError(path + ":" + std::to_string(lineno) + ": not a number");
    }
  }
  if (v.size() < 2) throw SpecError(path + ": a table needs at least two vertices");
  if (v.front().t != 0.0) v.insert(v.begin(), DensityVertex{0.0, 0.0});
  const auto& p = v[v.size() - 2];
  const auto& q = v.back();
  const double slope = q.t > p.t ? (q.a - p.a) / (q.t - p.t) : 0.0;
  return YoungFunction::polyline(std::move(v), slope);
}

YoungFunction parse_young(const std::string& text) {
  const SpecCall c = SpecCall::parse(text);
  static const std::map<std::string, std::size_t> arity = {
      {"power", 1}, {"powerlog", 2}, {"powerlog0", 2}, {"exp", 0},
      {"linf", 1},  {"table", 1},    {"spliced", 3}};
  const auto it = arity.find(c.name);
  if (it == arity.end()) throw SpecError("unknown Young function '" + c.name + "'");
  if (c.args.size() != it->second)
    throw SpecError(c.name + "() takes " + std::to_string(it->second) + " argument(s)");
  if (c.name == "power") return YoungFunction::power(c.number(0, "p"));
  if (c.name == "powerlog") return YoungFunction::power_log(c.number(0, "p"), c.number(1, "alpha"));
  if (c.name == "powerlog0")
    return YoungFunction::power_log_zero(c.number(0, "p"), c.number(1, "alpha"));
  if (c.name == "exp") return YoungFunction::exponential();
  if (c.name == "linf") return YoungFunction::linf(c.number(0, "b"));
  if (c.name == "table") return read_young_table(c.args[0]);
  if (c.name == "spliced") {
    const std::string* zero = c.find(0, "zero");
    const std::string* inf = c.find(1, "inf");
    if (!zero || !inf) throw SpecError("spliced() needs zero= and inf=");
    return YoungFunction::spliced(parse_young(*zero), parse_young(*inf), c.number(2, "at"));
  }
  throw SpecError("unknown Young function '" + c.name + "'");
}

namespace {

struct Centre {
  double x = 0.0, y = 0.0, w = 1.0;
};

Centre centre_args(const SpecCall& c, int dim) {
  Centre r;
  const std::size_t n = c.args.size();
  if (n == 2) {
    r.x = c.number(0, "c");
    r.y = dim == 2 ? r.x : 0.0;
    r.w = c.number(1, "w");
  } else if (n == 3 && dim == 2) {
    r.x = c.number(0, "cx");
    r.y = c.number(1, "cy");
    r.w = c.number(2, "w");
  } else {
    throw SpecError(c.name + "() takes (c,w)" + (dim == 2 ? " or (cx,cy,w)" : ""));
  }
  if (!(r.w > 0.0) || !std::isfinite(r.w)) throw SpecError(c.name + "(): width must be positive");
  return r;
}

GridFunction trigpoly(const GridSpec& g, std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  struct Mode {
    double kx, ky, a, px, py;
  };
  std::vector<Mode> modes;
  const std::size_t ky_max = g.dim == 2 ? degree : 0;
  for (std::size_t ky = 0; ky <= ky_max; ++ky)
    for (std::size_t kx = 0; kx + ky <= degree; ++kx) {
      const double a = normal(rng) / (1.0 + static_cast<double>(kx + ky));
      modes.push_back({static_cast<double>(kx), static_cast<double>(ky), a, phase(rng), phase(rng)});
    }
  const double w = M_PI / g.L;
  return GridFunction::sample(g.dim, g.N, g.L, [&](double x, double y) {
    double s = 0.0;
    for (const Mode& m : modes)
      s += m.a * std::cos(w * m.kx * x + m.px) * (g.dim == 2 ? std::cos(w * m.ky * y + m.py) : 1.0);
    return s;
  });
}

GridFunction step(const GridSpec& g, std::size_t breaks, std::uint64_t seed) {
  if (breaks < 2) throw SpecError("step(): needs at least two breaks");
  std::mt19937_64 rng(seed);
  const double lo = g.dim == 1 ? -0.5 * g.L : 0.0;
  std::uniform_real_distribution<double> where(lo, 0.5 * g.L);
  std::normal_distribution<double> normal;
  std::vector<double> b(breaks);
  for (double& x : b) x = where(rng);
  std::sort(b.begin(), b.end());
  std::vector<double> val(breaks - 1);
  for (double& v : val) v = normal(rng);
  return GridFunction::sample(g.dim, g.N, g.L, [&](double x, double y) {
    const double r = g.dim == 1 ? x : std::hypot(x, y);
    if (r < b.front() || r >= b.back()) return 0.0;
    const auto k = std::upper_bound(b.begin(), b.end(), r) - b.begin() - 1;
    return val[static_cast<std::size_t>(k)];
  });
}

}  // namespace

GridFunction parse_function(const std::string& text, const GridSpec& g) {
  if (g.dim != 1 && g.dim != 2) throw SpecError("dimension must be 1 or 2");
  if (text.find('(') == std::string::npos || std::filesystem::exists(text)) return load_grid(text);
  const SpecCall c = SpecCall::parse(text);
  if (c.name == "gaussian" || c.name == "bump" || c.name == "hat") {
    const Centre ct = centre_args(c, g.dim);
    const int kind = c.name == "gaussian" ? 0 : c.name == "bump" ? 1 : 2;
    return GridFunction::sample(g.dim, g.N, g.L, [&](double x, double y) {
      const double r2 = ((x - ct.x) * (x - ct.x) + (g.dim == 2 ? (y - ct.y) * (y - ct.y) : 0.0)) /
                        (ct.w * ct.w);
      if (kind == 0) return std::exp(-r2);
      if (r2 >= 1.0) return 0.0;
      return kind == 1 ? std::exp(1.0 - 1.0 / (1.0 - r2)) : 1.0 - std::sqrt(r2);
    });
  }
  if (c.name == "trigpoly" || c.name == "step") {
    if (c.args.size() != 2) throw SpecError(c.name + "() takes two arguments");
    const std::string* seed = c.find(1, "seed");
    if (c.name == "trigpoly")
      return trigpoly(g, parse_count(c.args[0], "degree"), parse_seed(*seed));
    return step(g, parse_count(c.args[0], "breaks"), parse_seed(*seed));
  }
  throw SpecError("unknown function '" + c.name + "'");
}

}  // namespace orlicz

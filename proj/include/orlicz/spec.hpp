#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parsed `name(arg, key=value, ...)` expression. Arguments keep their raw
/// text; nested calls are parsed on demand.
struct SpecCall {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::string> keys;  // empty string for positional arguments

  static SpecCall parse(const std::string& text);
  /// Positional argument `i` or the keyword argument `key`, whichever exists.
  const std::string* find(std::size_t i, const std::string& key) const;
  double number(std::size_t i, const std::string& key) const;
  std::size_t positional() const;
};

/// Young function from its textual form:
///   power(p) | powerlog(p,alpha) | powerlog0(p,alpha) | exp() | linf(b)
///   spliced(zero=<spec>,inf=<spec>,at=<t>) | table(<csv path>)
YoungFunction parse_young(const std::string& text);

/// Density vertices `t,a(t)` read from CSV; the tail keeps the slope of the
/// last segment.
YoungFunction read_young_table(const std::string& path);

/// Sampling box for generated functions: [-L, L)^dim with N points per axis.
struct GridSpec {
  int dim = 1;
  std::size_t N = 1024;
  double L = 8.0;
};

/// Test function from its textual form, or a grid file when `text` names one:
///   gaussian(c,w) | bump(c,w) | hat(c,w)   (centre c on every axis, or
///                                           gaussian(cx,cy,w) in 2D)
///   trigpoly(degree,seed) | step(breaks,seed)
GridFunction parse_function(const std::string& text, const GridSpec& grid);

/// Parses a decimal number, rejecting trailing garbage.
double parse_number(const std::string& text);

}  // namespace orlicz

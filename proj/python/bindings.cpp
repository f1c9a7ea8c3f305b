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
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orlicz/conjugate_target.hpp"
#include "orlicz/harness.hpp"
#include "orlicz/littlewood_paley.hpp"
#include "orlicz/seminorms.hpp"
#include "orlicz/spec.hpp"
#include "orlicz/young.hpp"

namespace py = pybind11;
using namespace orlicz;

namespace {

py::array_t<double> to_array(const GridFunction& u) {
  const auto v = u.values();
  py::array_t<double> out(u.dim() == 1 ? std::vector<py::ssize_t>{static_cast<py::ssize_t>(u.points())}
                                       : std::vector<py::ssize_t>{static_cast<py::ssize_t>(u.points()),
                                                                  static_cast<py::ssize_t>(u.points())});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

// Row index is y, column index is x, matching the storage order.
GridFunction from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a, double L) {
  if (a.ndim() != 1 && a.ndim() != 2) throw GridError("values must be a 1-D or square 2-D array");
  const auto N = static_cast<std::size_t>(a.shape(0));
  if (a.ndim() == 2 && static_cast<std::size_t>(a.shape(1)) != N) throw GridError("2-D values must be square");
  std::vector<double> v(a.data(), a.data() + a.size());
  const double h = 2.0 * L / static_cast<double>(N);
  return GridFunction(static_cast<int>(a.ndim()), N, h, -L, std::move(v));
}

py::object vectorize(const YoungFunction& A, py::object t, double (YoungFunction::*f)(double) const) {
  if (py::isinstance<py::float_>(t) || py::isinstance<py::int_>(t)) return py::float_((A.*f)(t.cast<double>()));
  auto in = py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(t);
  if (!in) throw py::type_error("expected a number or an array of numbers");
  py::array_t<double> out(std::vector<py::ssize_t>(in.shape(), in.shape() + in.ndim()));
  const double* src = in.data();
  double* dst = out.mutable_data();
  for (py::ssize_t k = 0; k < in.size(); ++k) dst[k] = (A.*f)(src[k]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orlicz and fractional Orlicz-Sobolev norms on grids";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<YoungError>(m, "YoungError", PyExc_ValueError);
  py::register_exception<GridError>(m, "GridError", PyExc_ValueError);

  py::class_<YoungFunction>(m, "YoungFunction")
      .def_static("parse", &parse_young, py::arg("spec"))
      .def_static("power", &YoungFunction::power, py::arg("p"))
      .def_static("power_log", &YoungFunction::power_log, py::arg("p"), py::arg("alpha"))
      .def_static("power_log_zero", &YoungFunction::power_log_zero, py::arg("p"), py::arg("alpha"))
      .def_static("exponential", &YoungFunction::exponential)
      .def_static("linf", &YoungFunction::linf, py::arg("b"))
      .def_static("spliced", &YoungFunction::spliced, py::arg("zero"), py::arg("inf"), py::arg("at"))
      .def("__call__", [](const YoungFunction& A, py::object t) { return vectorize(A, t, &YoungFunction::eval); })
      .def("log_eval", [](const YoungFunction& A, py::object t) { return vectorize(A, t, &YoungFunction::log_eval); })
      .def("inverse", [](const YoungFunction& A, py::object r) { return vectorize(A, r, &YoungFunction::inverse); })
      .def("density", &YoungFunction::density, py::arg("t"))
      .def("conjugate", &YoungFunction::conjugate)
      .def("scaled", &YoungFunction::scaled, py::arg("M"))
      .def("tabulate", [](const YoungFunction& A) { return tabulate(A); })
      .def("check_axioms",
           [](const YoungFunction& A) {
             const auto c = check_axioms(A);
             return py::make_tuple(c.ok, c.reason);
           })
      .def("__repr__", [](const YoungFunction& A) { return "YoungFunction(" + A.describe() + ")"; })
      .def("__str__", &YoungFunction::describe);

  m.def("target",
        [](const YoungFunction& A, int n, double sigma) { return target(A, SmoothnessParams(n, sigma)); },
        py::arg("A"), py::arg("n"), py::arg("sigma"), "Optimal target Young function A_{n/sigma}.");
  m.def("t_infinity",
        [](const YoungFunction& A, int n, double sigma) { return t_infinity(A, SmoothnessParams(n, sigma)); },
        py::arg("A"), py::arg("n"), py::arg("sigma"));
  m.def("admissible",
        [](const YoungFunction& A, int n, double sigma) { return admissible(A, SmoothnessParams(n, sigma)); },
        py::arg("A"), py::arg("n"), py::arg("sigma"));

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init(&from_array), py::arg("values"), py::arg("L"),
           "Samples on [-L, L)^n; 2-D arrays are indexed [y, x].")
      .def_static("parse",
                  [](const std::string& spec, int dim, std::size_t N, double L) {
                    return parse_function(spec, GridSpec{dim, N, L});
                  },
                  py::arg("spec"), py::arg("dim") = 1, py::arg("N") = 1024, py::arg("L") = 8.0)
      .def_property_readonly("dim", &GridFunction::dim)
      .def_property_readonly("points", &GridFunction::points)
      .def_property_readonly("spacing", &GridFunction::spacing)
      .def_property_readonly("origin", &GridFunction::origin)
      .def_property_readonly("L", &GridFunction::half_width)
      .def_property_readonly("values", &to_array)
      .def("translated", &GridFunction::translated, py::arg("dx"), py::arg("dy") = 0)
      .def("scaled", &GridFunction::scaled, py::arg("c"))
      .def("lp_norm", &GridFunction::lp_norm, py::arg("p"))
      .def("__repr__", [](const GridFunction& u) {
        return "GridFunction(dim=" + std::to_string(u.dim()) + ", points=" + std::to_string(u.points()) + ")";
      });

  m.def("luxemburg_norm", py::overload_cast<const YoungFunction&, const GridFunction&, double>(&luxemburg_norm),
        py::arg("A"), py::arg("u"), py::arg("rel_tol") = 1e-10);
  m.def("norm",
        [](const std::string& space, const YoungFunction& A, double s, const GridFunction& u) {
          py::gil_scoped_release release;
          return full_norm(parse_space(space), A, FractionalOrder(s), u);
        },
        py::arg("space"), py::arg("A"), py::arg("s"), py::arg("u"),
        "Full norm in LA, W, B, O or F.");
  m.def("blocks",
        [](const GridFunction& u) {
          const DyadicPartition P(u);
          return blocks_with_remainder(P, u);
        },
        py::arg("u"), "Littlewood-Paley blocks followed by the remainder.");

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& name, std::uint64_t seed, std::size_t cases, std::size_t N, const std::string& sub,
           unsigned threads) {
          SuiteConfig cfg;
          cfg.seed = seed;
          cfg.cases = cases;
          cfg.N = N;
          cfg.sub = sub;
          cfg.threads = threads;
          std::string text;
          {
            py::gil_scoped_release release;
            text = report_json(run_suite(name, cfg));
          }
          return py::module_::import("json").attr("loads")(text);
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("cases") = 0, py::arg("N") = 0, py::arg("sub") = "",
        py::arg("threads") = 1, "Run a verification suite and return its report as a dict.");
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "shellrange/cli.hpp"
#include "shellrange/errors.hpp"
#include "shellrange/io.hpp"
#include "shellrange/oracle.hpp"

namespace py = pybind11;
using namespace shellrange;

namespace {

Model spatial(Model m) {
  if (m == Model::PH2) throw ModelDimensionMismatch("the shell has no half-space model here; use bck or pck");
  return m == Model::PCK2 ? Model::PCK3 : Model::BCK3;
}

std::string verify_json(const Mat2C& a, const std::string& model, std::size_t samples, std::uint64_t seed,
                        double tolerance) {
  RunConfig cfg;
  cfg.subcommand = Subcommand::Verify;
  cfg.model = model_from_string(model);
  cfg.samples = samples;
  cfg.samples_given = true;
  cfg.seed = seed;
  cfg.tolerance = tolerance;
  std::ostringstream out;
  run(cfg, a, out);
  return out.str();
}

py::array_t<double> sample_points(const Mat2C& a, const std::string& target, const std::string& model,
                                  std::size_t n, std::uint64_t seed) {
  const Target t = target == "shell"   ? Target::Shell3D
                   : target == "range" ? Target::ConformalRange2D
                   : target == "nr"    ? Target::NumericalRange2D
                                       : throw std::invalid_argument("target must be shell, range or nr");
  Model m = model_from_string(model);
  if (t == Target::Shell3D) m = spatial(m);
  const SampleCloud c = sample(a, t, m, n, seed);
  if (t == Target::NumericalRange2D) {
    py::array_t<double> out({c.values.size(), std::size_t{2}});
    auto r = out.mutable_unchecked<2>();
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      r(k, 0) = c.values[k].real();
      r(k, 1) = c.values[k].imag();
    }
    return out;
  }
  py::array_t<double> out({c.points.size(), std::size_t{3}});
  auto r = out.mutable_unchecked<2>();
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    const HPoint& p = c.points[k];
    r(k, 0) = p.at_infinity ? inf : p.x;
    r(k, 1) = p.at_infinity ? inf : p.y;
    r(k, 2) = p.at_infinity ? inf : p.z;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_shellrange, m) {
  m.doc() = "JSON-level bindings; the shellrange package wraps them";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NonFiniteEntry>(m, "NonFiniteEntry", PyExc_ValueError);
  py::register_exception<ModelDimensionMismatch>(m, "ModelDimensionMismatch", PyExc_ValueError);

  m.def("parse", [](const std::string& text) { return Mat2C(parse_matrix(text)); }, py::arg("text"));
  m.def("classify", [](const Mat2C& a) { return classification_to_json(a).dump(); }, py::arg("a"));
  m.def(
      "range",
      [](const Mat2C& a, const std::string& model) {
        return range_to_json(conformal_range(a), model_from_string(model)).dump();
      },
      py::arg("a"), py::arg("model") = "bck");
  m.def(
      "shell",
      [](const Mat2C& a, const std::string& model) {
        return shell_to_json(dw_shell(a), spatial(model_from_string(model))).dump();
      },
      py::arg("a"), py::arg("model") = "bck");
  m.def("nr", [](const Mat2C& a) { return numerical_range_to_json(numerical_range(a)).dump(); }, py::arg("a"));
  m.def("verify", &verify_json, py::arg("a"), py::arg("model") = "bck", py::arg("samples") = 100000,
        py::arg("seed") = 0, py::arg("tolerance") = 1e-8);
  m.def("sample", &sample_points, py::arg("a"), py::arg("target") = "range", py::arg("model") = "bck",
        py::arg("n") = 10000, py::arg("seed") = 0);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "medianlab/cli.hpp"
#include "medianlab/cubes.hpp"
#include "medianlab/dynamics.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/factorization.hpp"
#include "medianlab/io.hpp"
#include "medianlab/measures.hpp"
#include "medianlab/walls.hpp"

namespace py = pybind11;
using namespace medianlab;

namespace {

// Fractions cross the boundary as "p/q" strings; the Python package wraps
// them in fractions.Fraction.
Measure measure_from(const std::vector<std::string>& weights) {
  std::vector<Rational> w;
  for (const auto& s : weights) w.push_back(parse_rational(s));
  return Measure::checked(std::move(w));
}

std::vector<std::string> strings_of(const Measure& eta) {
  std::vector<std::string> out;
  for (const auto& w : eta.weights()) out.push_back(format_rational(w));
  return out;
}

MedianAlgebra from_embedding(const std::vector<std::string>& rows) {
  std::vector<PointSet> coords;
  for (const auto& r : rows) coords.push_back(from_bitstring(r));
  return MedianAlgebra::from_embedding(std::move(coords));
}

}  // namespace

PYBIND11_MODULE(_medianlab, m) {
  m.doc() = "Finite median algebras: walls, cubes, cubical factors, balanced and stationary measures";

  static py::exception<MedianError> error(m, "MedianError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MedianError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<MedianAlgebra>(m, "MedianAlgebra")
      .def_static("from_embedding", &from_embedding, py::arg("rows"),
                  "Subalgebra of {0,1}^k spanned by bit-string rows.")
      .def_static("from_table", &MedianAlgebra::from_table, py::arg("n"), py::arg("table"))
      .def_static("cube", &MedianAlgebra::cube, py::arg("dim"))
      .def_static("from_json", [](const std::string& text) { return io::algebra_from_json(io::Json::parse(text)); })
      .def("to_json", [](const MedianAlgebra& a) { return io::algebra_to_json(a).dump(); })
      .def("median", &MedianAlgebra::median)
      .def("table", &MedianAlgebra::table)
      .def("__len__", &MedianAlgebra::size)
      .def("__eq__", [](const MedianAlgebra& a, const MedianAlgebra& b) { return a == b; });

  m.def("walls", [](const MedianAlgebra& a) {
    std::vector<std::vector<Point>> out;
    for (const auto& w : enumerate_walls(a)) out.push_back(members(w.canonical_side()));
    return out;
  }, "Canonical side (the one holding point 0) of every wall.");

  m.def("cubes", [](const MedianAlgebra& a, bool maximal) {
    std::vector<std::vector<Point>> out;
    for (const auto& c : enumerate_cubes(a, maximal)) out.push_back(c.points);
    return out;
  }, py::arg("algebra"), py::arg("maximal") = false);

  m.def("decompose", [](const MedianAlgebra& a) {
    const Decomposition d = cubical_factor(a);
    py::dict out;
    out["dim"] = d.dim();
    out["m_prime"] = d.m_prime;
    out["to_prime"] = d.to_prime;
    out["to_cube"] = d.to_cube;
    return out;
  });

  m.def("phi", [](const MedianAlgebra& a, const std::vector<std::string>& eta) {
    return strings_of(phi(a, measure_from(eta)));
  });
  m.def("is_balanced", [](const MedianAlgebra& a, const std::vector<std::string>& eta) {
    return is_balanced(a, measure_from(eta));
  });

  m.def("stationary", [](const MedianAlgebra& a, const std::string& action_json) {
    const auto af = io::action_from_json(a, io::Json::parse(action_json));
    if (!af.mu) throw MedianError(ErrorCode::InvalidInput, "action has no \"mu\"");
    std::vector<std::vector<std::string>> out;
    for (const auto& v : stationary_polytope(af.action, *af.mu)) out.push_back(strings_of(v));
    return out;
  });

  m.def("minimal", [](const MedianAlgebra& a, const std::string& action_json) {
    const auto rep = is_minimal(io::action_from_json(a, io::Json::parse(action_json)).action);
    std::optional<std::vector<Point>> witness;
    if (rep.witness) witness = members(*rep.witness);
    return std::make_pair(rep.minimal, witness);
  });

  m.def("run", [](const std::string& command, const std::vector<std::string>& inputs,
                  const std::string& action, const std::string& format, std::uint64_t seed) {
    cli::RunConfig c;
    c.command = command;
    c.inputs = inputs;
    c.action_path = action;
    c.format = format;
    c.seed = seed;
    const auto r = cli::dispatch(c);
    return py::make_tuple(r.exit_code, r.output, r.error);
  }, py::arg("command"), py::arg("inputs") = std::vector<std::string>{}, py::arg("action") = "",
     py::arg("format") = "json", py::arg("seed") = kDefaultSeed,
     "Same dispatch as the medianlab command line; returns (exit_code, output, error).");
}

// Python bindings: problem documents in, trace documents out, both as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logres/errors.hpp"
#include "logres/io.hpp"

namespace py = pybind11;
using namespace logres;

namespace {

struct Loaded {
  ProblemSpec spec;
  Chart chart;
  std::vector<Polynomial> ideal;
  EngineConfig config;
};

Loaded load(const std::string& problem) {
  Loaded l;
  l.spec = parse_problem(problem);
  l.chart = problem_chart(l.spec);
  l.ideal = problem_ideal(l.spec, l.chart);
  l.config.max_depth = l.spec.max_depth;
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Logarithmic principalization on toroidal charts";

  py::exception<LogresError>(m, "LogresError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LogresError& e) {
      py::object type = py::module_::import("logres._core").attr("LogresError");
      py::object exc = type(e.what());
      exc.attr("kind") = e.kind();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def(
      "principalize",
      [](const std::string& problem) {
        Loaded l = load(problem);
        return emit_trace(trace_document(principalize(l.chart, l.ideal, l.config)));
      },
      py::arg("problem"), "Principalize the ideal; returns the trace document.");
  m.def(
      "order_reduce",
      [](const std::string& problem) {
        Loaded l = load(problem);
        return emit_trace(trace_document(order_reduce(l.chart, l.ideal, l.spec.mark, l.config)));
      },
      py::arg("problem"), "Reduce the order of the marked ideal below its mark; returns the trace document.");
  m.def(
      "resolve",
      [](const std::string& problem, std::optional<int> codim) {
        Loaded l = load(problem);
        int c = codim.value_or(l.spec.codim.value_or(1));
        return emit_trace(resolution_document(resolve_embedded(l.chart, l.ideal, c, l.config)));
      },
      py::arg("problem"), py::arg("codim") = py::none(), "Embedded resolution; returns the trace document.");
  m.def(
      "invariant",
      [](const std::string& problem, int k0) {
        Loaded l = load(problem);
        return invariant_to_string(invariant(l.chart, l.ideal, l.spec.mark, k0));
      },
      py::arg("problem"), py::arg("k0") = 0, "Invariant string of the marked ideal.");
  m.def(
      "monomial_saturation",
      [](const std::string& problem) {
        Loaded l = load(problem);
        return center_to_string(l.chart, KummerCenter{{}, monomial_saturation(l.chart, l.ideal), 1});
      },
      py::arg("problem"), "Smallest monomial ideal containing the ideal.");
  m.def(
      "dot",
      [](const std::string& problem) {
        Loaded l = load(problem);
        return emit_dot(principalize(l.chart, l.ideal, l.config));
      },
      py::arg("problem"), "Principalization tree in DOT format.");
  m.def(
      "normalize_problem", [](const std::string& problem) { return emit_problem(parse_problem(problem)); },
      py::arg("problem"), "Validate a problem document and return its canonical form.");
}

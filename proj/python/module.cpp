#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spancat/axioms.hpp"
#include "spancat/comonads.hpp"
#include "spancat/direct_sums.hpp"
#include "spancat/local.hpp"
#include "spancat/span_equiv.hpp"

namespace py = pybind11;
using namespace spancat;

namespace {

py::dict report_dict(const AxiomReport& r) {
  py::dict d;
  d["subject"] = r.subject;
  d["holds"] = r.holds;
  d["bounded"] = r.bounded;
  if (r.witness) d["witness"] = r.witness->map.table;
  if (r.counterexample) d["counterexample"] = *r.counterexample;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spancat, m) {
  m.doc() = "spans of finite sets: composition, tabulation and checkers";

  py::class_<FiniteSet>(m, "FiniteSet")
      .def(py::init<int>(), py::arg("size"))
      .def_readonly("size", &FiniteSet::size)
      .def("__eq__", [](const FiniteSet& a, const FiniteSet& b) {
        return a == b;
      })
      .def("__repr__", [](const FiniteSet& a) {
        return "FiniteSet(" + std::to_string(a.size) + ")";
      });

  py::class_<FiniteFunction>(m, "FiniteFunction")
      .def(py::init<FiniteSet, FiniteSet, std::vector<int>>(), py::arg("dom"),
           py::arg("cod"), py::arg("table"))
      .def_readonly("dom", &FiniteFunction::dom)
      .def_readonly("cod", &FiniteFunction::cod)
      .def_readonly("table", &FiniteFunction::table)
      .def("__call__", [](const FiniteFunction& f, int x) { return f(x); });

  py::class_<Span>(m, "Span")
      .def(py::init<FiniteFunction, FiniteFunction>(), py::arg("left"),
           py::arg("right"))
      .def_readonly("left", &Span::left)
      .def_readonly("right", &Span::right)
      .def_property_readonly("apex", &Span::apex)
      .def("__eq__", [](const Span& a, const Span& b) { return a == b; });

  py::class_<SpanMorphism>(m, "SpanMorphism")
      .def_readonly("source", &SpanMorphism::source)
      .def_readonly("target", &SpanMorphism::target)
      .def_readonly("map", &SpanMorphism::map)
      .def("is_iso", &SpanMorphism::is_iso);

  m.def("identity_fn", &identity_fn);
  m.def("compose_fn", &compose_fn);
  m.def("id_span", &id_span);
  m.def("compose_spans", &compose_spans);
  m.def("opposite", &opposite);
  m.def("tensor", &tensor);
  m.def("is_map", &is_map);
  m.def("map_from_function", &map_from_function);
  m.def("function_from_map", &function_from_map);
  m.def("find_iso", [](const Span& r, const Span& s) -> py::object {
    auto iso = find_iso(r, s);
    if (!iso) return py::none();
    return py::cast(iso->cell);
  });
  m.def("count_two_cells", &count_two_cells);

  m.def("tabulate", [](const Span& r) {
    Tabulation tb = tabulate(r);
    py::dict d;
    d["apex"] = tb.apex_object.size;
    d["u"] = function_from_map(tb.u).table;
    d["v"] = function_from_map(tb.v).table;
    return d;
  });
  m.def("em_object", [](const Span& g) {
    Comonad c = comonad_on(g);
    EMObject em = em_object(c);
    py::dict d;
    d["object"] = em.object.size;
    d["projection"] = function_from_map(em.projection).table;
    return d;
  });

  m.def("check_separable",
        [](int n) { return report_dict(check_separable(FiniteSet(n))); });
  m.def("check_frobenius",
        [](int n) { return report_dict(check_frobenius(FiniteSet(n))); });
  m.def("check_beck_pullback", [](const Span& a, const Span& b) {
    return report_dict(check_beck_pullback(a, b));
  });
  m.def("check_maps_comonadic", [](const Span& g) {
    return report_dict(check_maps_comonadic(g));
  });
  m.def("check_roundtrips", [](const Span& r) {
    return report_dict(check_roundtrips(r, functor_f(r)));
  });
}

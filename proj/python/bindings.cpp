// Python module: elements as opaque values, plus an Engine that owns a memo table.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skeintorus/check.hpp"
#include "skeintorus/discrepancy.hpp"
#include "skeintorus/expr.hpp"
#include "skeintorus/mapping.hpp"
#include "skeintorus/oracle.hpp"

namespace py = pybind11;
namespace st = skeintorus;

namespace {

struct Engine {
  st::MemoTable table;

  st::SkeinElement parse(const std::string& text) { return st::parse_element(text, table); }
  st::SkeinElement product(const st::SkeinElement& x, const st::SkeinElement& y) {
    return st::multiply(x, y, table);
  }
  st::SkeinElement disc(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return st::discrepancy(p, q, r, s, table);
  }
};

st::SkeinElement coerce(const py::object& o) {
  if (py::isinstance<st::SkeinElement>(o)) return o.cast<st::SkeinElement>();
  if (py::isinstance<py::str>(o)) return st::parse_element(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) return st::scalar_element(st::Integer(o.cast<long long>()));
  throw py::type_error("expected Element, str or int");
}

}  // namespace

PYBIND11_MODULE(_skeintorus, m) {
  m.doc() = "Kauffman bracket skein algebra of the one-holed torus";

  py::register_exception<st::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<st::oracle::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<st::CacheError>(m, "CacheError", PyExc_OSError);

  py::class_<st::SkeinElement>(m, "Element")
      .def(py::init([](const py::object& o) { return coerce(o); }), py::arg("value") = 0)
      .def("__str__", [](const st::SkeinElement& x) { return st::to_string(x); })
      .def("__repr__", [](const st::SkeinElement& x) { return "Element('" + st::to_string(x) + "')"; })
      .def("__eq__", [](const st::SkeinElement& x, const py::object& y) { return x == coerce(y); })
      .def("__add__", [](const st::SkeinElement& x, const py::object& y) { return x + coerce(y); })
      .def("__radd__", [](const st::SkeinElement& x, const py::object& y) { return coerce(y) + x; })
      .def("__sub__", [](const st::SkeinElement& x, const py::object& y) { return x - coerce(y); })
      .def("__neg__", [](const st::SkeinElement& x) { return -x; })
      .def("__mul__", [](const st::SkeinElement& x, const py::object& y) { return st::multiply(x, coerce(y)); })
      .def("__rmul__", [](const st::SkeinElement& x, const py::object& y) { return st::multiply(coerce(y), x); })
      .def("__bool__", [](const st::SkeinElement& x) { return !x.is_zero(); })
      .def("__len__", &st::SkeinElement::size)
      .def("multicurve", [](const st::SkeinElement& x) { return st::to_string(st::to_multicurve(x)); },
           "Rendering in the multicurve basis.")
      .def("latex", [](const st::SkeinElement& x) { return st::to_latex(x); })
      .def("to_json", [](const st::SkeinElement& x) { return st::to_json(x).dump(); })
      .def_static("from_json", [](const std::string& s) { return st::skein_from_json(nlohmann::json::parse(s)); })
      .def("conjugate", &st::SkeinElement::conjugated)
      .def("is_positive", [](const st::SkeinElement& x) { return st::check::is_positive(x); });

  m.def("T", [](std::int64_t p, std::int64_t q) { return st::chebyshev_element(p, q); }, py::arg("p"), py::arg("q"));
  m.def("parse", [](const std::string& s) { return st::parse_element(s); });
  m.def("discrepancy", [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return st::discrepancy(p, q, r, s);
  });
  m.def("tw", [](const st::SkeinElement& x, std::int64_t n) { return st::tw_pow(x, n); },
        py::arg("x"), py::arg("n") = 1);
  m.def("opp", &st::opp);
  m.def("rev", &st::rev);
  m.def("oracle_product",
        [](const py::object& x, const py::object& y, int budget, std::uint64_t seed) {
          const auto a = coerce(x), b = coerce(y);
          py::gil_scoped_release release;
          return st::from_multicurve(st::oracle::oracle_multiply(a, b, budget, seed));
        },
        py::arg("x"), py::arg("y"), py::arg("budget") = st::oracle::kDefaultBudget, py::arg("seed") = 0);

  py::class_<Engine>(m, "Engine")
      .def(py::init<>())
      .def("parse", &Engine::parse)
      .def("product", [](Engine& e, const py::object& x, const py::object& y) {
        return e.product(coerce(x), coerce(y));
      })
      .def("discrepancy", &Engine::disc)
      .def_property_readonly("table_size", [](const Engine& e) { return e.table.size(); })
      .def("save", [](const Engine& e, const std::string& path) { st::save_table(e.table, path); })
      .def_static("load", [](const std::string& path) {
        Engine e;
        e.table = st::load_table(path);
        return e;
      });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "species/arrows.hpp"
#include "species/errors.hpp"
#include "species/json_io.hpp"
#include "species/tits.hpp"
#include "species/verify.hpp"

namespace py = pybind11;
using namespace species;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(rational_string(q));
}

Rational rational_from_py(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw DomainError("expected a rational, got bool");
  if (py::isinstance<py::int_>(h)) return Rational(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator") && !py::isinstance<py::float_>(h)) {
    return Rational(mpz_class(py::str(h.attr("numerator")).cast<std::string>()),
                    mpz_class(py::str(h.attr("denominator")).cast<std::string>()));
  }
  throw DomainError("expected an int, a Fraction or a 'p/q' string");
}

// int, Fraction, "p/q", or a pair (re, im) of those.
Scalar scalar_from_py(const py::handle& h) {
  if (py::isinstance<py::tuple>(h)) {
    auto t = h.cast<py::tuple>();
    if (t.size() != 2) throw DomainError("a complex coefficient is a pair (re, im)");
    return Scalar(rational_from_py(t[0]), rational_from_py(t[1]));
  }
  return Scalar(rational_from_py(h));
}

// Fraction when real, else (re, im).
py::object scalar_to_py(const Scalar& s) {
  if (s.is_real()) return fraction(s.re());
  return py::make_tuple(fraction(s.re()), fraction(s.im()));
}

LabelSet labels_from_py(const py::handle& h) { return LabelSet(h.cast<std::vector<Label>>()); }

py::tuple labels_to_py(const LabelSet& s) { return py::tuple(py::cast(s.elements())); }

Composition comp_from_py(const py::handle& h) {
  std::vector<LabelSet> lumps;
  for (const auto& lump : h) lumps.push_back(labels_from_py(lump));
  return Composition(std::move(lumps));
}

py::tuple comp_to_py(const Composition& f) {
  py::list lumps;
  for (const auto& lump : f) lumps.append(labels_to_py(lump));
  return py::tuple(lumps);
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json json_from_py(const py::handle& h) {
  return Json::parse(py::module_::import("json").attr("dumps")(h).cast<std::string>());
}

template <class F>
py::object report(F&& f) {
  std::optional<RunReport> r;
  {
    py::gil_scoped_release release;
    r.emplace(f());
  }
  return json_to_py(r->to_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the Hopf monoid of set compositions";

  py::class_<SigmaElem>(m, "SigmaElem")
      .def(py::init([](const py::object& ground, const std::string& basis) {
             if (basis != "H" && basis != "Q") throw DomainError("basis must be 'H' or 'Q'");
             return SigmaElem(labels_from_py(ground), basis == "H" ? Basis::H : Basis::Q);
           }),
           py::arg("ground"), py::arg("basis") = "H", "The zero element of Sigma[ground]")
      .def_static(
          "H", [](const py::object& f, const py::object& c) { return SigmaElem::H(comp_from_py(f), scalar_from_py(c)); },
          py::arg("composition"), py::arg("coeff") = 1)
      .def_static(
          "Q", [](const py::object& f, const py::object& c) { return SigmaElem::Q(comp_from_py(f), scalar_from_py(c)); },
          py::arg("composition"), py::arg("coeff") = 1)
      .def_static("unit", &SigmaElem::unit)
      .def_static("from_dict", [](const py::object& d) { return sigma_from_json(json_from_py(d)); })
      .def_property_readonly("ground", [](const SigmaElem& a) { return labels_to_py(a.ground()); })
      .def_property_readonly("basis", [](const SigmaElem& a) { return to_string(a.basis()); })
      .def("terms",
           [](const SigmaElem& a) {
             py::dict out;
             for (const auto& [f, c] : a) out[comp_to_py(f)] = scalar_to_py(c);
             return out;
           })
      .def("coeff", [](const SigmaElem& a, const py::object& f) { return scalar_to_py(a.coeff(comp_from_py(f))); })
      .def("is_zero", &SigmaElem::is_zero)
      .def("to_dict", [](const SigmaElem& a) { return json_to_py(to_json(a)); })
      .def("__add__", [](const SigmaElem& a, const SigmaElem& b) { return a + b; })
      .def("__sub__", [](const SigmaElem& a, const SigmaElem& b) { return a - b; })
      .def("__neg__", [](const SigmaElem& a) { return -a; })
      .def("__mul__", [](const SigmaElem& a, const py::object& c) { return scalar_from_py(c) * a; })
      .def("__rmul__", [](const SigmaElem& a, const py::object& c) { return scalar_from_py(c) * a; })
      .def("__eq__", [](const SigmaElem& a, const SigmaElem& b) { return a == b; })
      .def("__len__", &SigmaElem::size)
      .def("__repr__", [](const SigmaElem& a) { return to_string(a); });

  py::class_<Cell>(m, "Cell")
      .def(py::init([](const py::object& ground, const py::object& positive) {
             std::vector<LabelSet> sides;
             for (const auto& s : positive) sides.push_back(labels_from_py(s));
             return Cell::from_positive(labels_from_py(ground), sides);
           }),
           py::arg("ground"), py::arg("positive"))
      .def_property_readonly("ground", [](const Cell& c) { return labels_to_py(c.ground()); })
      .def("positive_sides",
           [](const Cell& c) {
             py::list out;
             for (const auto& s : c.positive_sides()) out.append(labels_to_py(s));
             return out;
           })
      .def("contains", [](const Cell& c, const py::object& s) { return c.contains(labels_from_py(s)); })
      .def("flipped", [](const Cell& c, const py::object& s) { return c.flipped(labels_from_py(s)); })
      .def("witness",
           [](const Cell& c) -> py::object {
             const auto w = is_cell(c);
             if (!w) return py::none();
             py::list out;
             for (const auto& q : *w) out.append(fraction(q));
             return out;
           },
           "An exact point of the open cell, or None if the family is not realizable")
      .def("to_dict", [](const Cell& c) { return json_to_py(to_json(c)); })
      .def("__eq__", [](const Cell& a, const Cell& b) { return a == b; })
      .def("__repr__", [](const Cell& c) { return to_string(c); });

  m.def("mu", py::overload_cast<const SigmaElem&, const SigmaElem&>(&mu), "Concatenation product");
  m.def(
      "delta",
      [](const py::object& s, const py::object& t, const SigmaElem& a) { return delta(labels_from_py(s), labels_from_py(t), a); },
      "Comultiplication as a list of pure tensors");
  m.def("counit", [](const SigmaElem& a) { return scalar_to_py(counit(a)); });
  m.def("antipode", py::overload_cast<const SigmaElem&>(&antipode));
  m.def("takeuchi_antipode", &takeuchi_antipode);
  m.def("to_h", &to_h);
  m.def("to_q", &to_q);
  m.def("is_primitive", &is_primitive);
  m.def("primitive_basis", [](int n) { return primitive_part_basis(n, static_cast<std::size_t>(std::max(n, 5))); });
  m.def("zie_dimension", &zie_dimension);
  m.def("tits", py::overload_cast<const SigmaElem&, const SigmaElem&>(&tits), "Tits product");
  m.def("commutator", &commutator);

  m.def(
      "cells", [](int n) { return enumerate_cells(n == 0 ? LabelSet() : LabelSet::range(n), std::max(n, 6)); },
      py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def("dynkin", &dynkin);
  m.def("glz_check", [](int n, Label a, Label b) { return glz_check(LabelSet::range(n), a, b); });
  m.def("arrow_down", [](const py::object& y, const SigmaElem& x) { return arrow_down(labels_from_py(y), x); });
  m.def("arrow_up", [](const py::object& y, const SigmaElem& x) { return arrow_up(labels_from_py(y), x); });
  m.def("retarded_element",
        [](const py::object& y, const py::object& i) { return retarded_element(labels_from_py(y), labels_from_py(i)); });
  m.def("advanced_element",
        [](const py::object& y, const py::object& i) { return advanced_element(labels_from_py(y), labels_from_py(i)); });

  m.def("hopf_check", [](int n) { return report([=] { return hopf_check(n); }); }, py::arg("n") = 4);
  m.def("cells_count", [](int n) { return report([=] { return cells_count_report(n); }); }, py::arg("n") = 4);
  m.def("dynkin_rank", [](int n) { return report([=] { return dynkin_report(n); }); }, py::arg("n") = 4);
  m.def("steinmann_verify", [](int n) { return report([=] { return steinmann_report(n); }); }, py::arg("n") = 4);
  m.def("ruelle_verify", [](int n) { return report([=] { return ruelle_report(n); }); }, py::arg("n") = 4);
  m.def("glz_verify", [](int n) { return report([=] { return glz_report(n); }); }, py::arg("n") = 4);
  m.def("lie_verify", [](int n) { return report([=] { return jacobi_report(n); }); }, py::arg("n") = 4);
  m.def("arrows_verify", [](int n) { return report([=] { return arrows_report(n); }); }, py::arg("n") = 3);
  m.def("series_identities", [](unsigned order) { return report([=] { return series_report(order); }); },
        py::arg("order") = kDefaultOrder);
  m.def("causal_suite", [](int n, unsigned order) { return report([=] { return causal_report(n, order); }); },
        py::arg("n") = 4, py::arg("order") = 2);
  m.def(
      "toy_demo",
      [](const py::object& model, unsigned order) {
        const Model mdl = model_from_json(json_from_py(model));
        return report([&] { return toy_demo(mdl, order); });
      },
      py::arg("model"), py::arg("order") = 2);
  m.def(
      "toy_bogoliubov",
      [](const py::object& model, unsigned order) {
        const Model mdl = model_from_json(json_from_py(model));
        return report([&] { return toy_bogoliubov(mdl, order); });
      },
      py::arg("model"), py::arg("order") = 2);
}

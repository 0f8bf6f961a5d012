// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfint/cz.hpp"
#include "pfint/linearize.hpp"
#include "pfint/numcheck.hpp"
#include "pfint/parse.hpp"
#include "pfint/remarkable.hpp"

namespace py = pybind11;
using namespace pfint;

namespace {

BiPoly to_poly(const py::handle& h) {
  if (py::isinstance<BiPoly>(h)) return h.cast<BiPoly>();
  if (py::isinstance<py::int_>(h)) return BiPoly(Rat(h.cast<long>()));
  return parse_bipoly(h.cast<std::string>());
}

FactoredIntegral to_integral(const py::iterable& factors) {
  std::vector<Factor> out;
  for (const auto& item : factors) {
    auto t = item.cast<py::tuple>();
    if (t.size() != 2) throw py::value_error("factors are (polynomial, exponent) pairs");
    out.push_back({to_poly(t[0]), t[1].cast<unsigned>()});
  }
  return FactoredIntegral(std::move(out));
}

py::dict check_dict(const CheckResult& r) {
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["reason"] = r.reason;
  if (r.witness) {
    const Witness& w = *r.witness;
    py::dict wd;
    if (w.x) wd["x"] = w.x->str();
    if (w.y) wd["y"] = w.y->str();
    if (w.common_factor) wd["common_factor"] = to_string(*w.common_factor);
    if (w.x_box) wd["x_box"] = py::make_tuple(w.x_box->re_mid(), w.x_box->im_mid());
    if (w.y_box) wd["y_box"] = py::make_tuple(w.y_box->re_mid(), w.y_box->im_mid());
    if (!w.note.empty()) wd["note"] = w.note;
    d["witness"] = wd;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_pfint, m) {
  m.doc() = "Exact planar polynomial vector fields with polynomial first integrals";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<BiPoly>(m, "BiPoly")
      .def(py::init([](const std::string& s) { return parse_bipoly(s); }))
      .def_static("x", &BiPoly::x)
      .def_static("y", &BiPoly::y)
      .def("total_degree", &BiPoly::total_degree)
      .def("is_zero", &BiPoly::is_zero)
      .def("evaluate", [](const BiPoly& f, const std::string& x0, const std::string& y0) {
        return evaluate(f, Rat::parse(x0), Rat::parse(y0)).str();
      })
      .def("__str__", [](const BiPoly& f) { return to_string(f); })
      .def("__repr__", [](const BiPoly& f) { return "BiPoly('" + to_string(f) + "')"; })
      .def("__eq__", [](const BiPoly& a, const py::handle& b) { return a == to_poly(b); })
      .def("__add__", [](const BiPoly& a, const py::handle& b) { return a + to_poly(b); })
      .def("__sub__", [](const BiPoly& a, const py::handle& b) { return a - to_poly(b); })
      .def("__mul__", [](const BiPoly& a, const py::handle& b) { return a * to_poly(b); })
      .def("__neg__", [](const BiPoly& a) { return -a; })
      .def("__pow__", [](const BiPoly& a, unsigned e) { return a.pow(e); });

  py::class_<VectorField>(m, "VectorField")
      .def(py::init([](const py::handle& p, const py::handle& q) { return VectorField(to_poly(p), to_poly(q)); }))
      .def_property_readonly("P", &VectorField::P)
      .def_property_readonly("Q", &VectorField::Q)
      .def("degree", &VectorField::degree)
      .def("__repr__", [](const VectorField& v) {
        return "VectorField('" + to_string(v.P()) + "', '" + to_string(v.Q()) + "')";
      });

  m.def("parse", &parse_bipoly, py::arg("text"));
  m.def("gcd", [](const py::handle& a, const py::handle& b) { return gcd(to_poly(a), to_poly(b)); });
  m.def("resultant", [](const py::handle& a, const py::handle& b, const std::string& var) {
    return resultant(to_poly(a), to_poly(b), var == "x" ? Var::X : Var::Y);
  }, py::arg("f"), py::arg("g"), py::arg("var") = "y");

  m.def("expand", [](const py::iterable& f) { return expand(to_integral(f)); }, py::arg("factors"));
  m.def("construct_field", [](const py::iterable& f) { return construct_field(to_integral(f)); },
        py::arg("factors"));
  m.def("lie_derivative", [](const VectorField& x, const py::handle& h) { return lie_derivative(x, to_poly(h)); });
  m.def("reduce_field", [](const VectorField& x) {
    ReducedField r = reduce_field(x);
    return py::make_tuple(r.field, r.multiplier);
  });
  m.def("quotient_multiplier", &quotient_multiplier, py::arg("x2"), py::arg("x1"));
  m.def("is_hamiltonian", &is_hamiltonian);

  m.def("critical_remarkable_values", [](const py::handle& h) {
    CriticalValues cv = critical_remarkable_values(to_poly(h));
    py::dict d;
    py::list rat;
    for (const auto& c : cv.rational) rat.append(c.str());
    d["rational"] = rat;
    d["count"] = cv.count;
    d["residual"] = cv.residual ? py::object(py::str(to_string(*cv.residual, 'c'))) : py::object(py::none());
    return d;
  });

  m.def("variety_empty", [](const std::vector<py::handle>& polys) {
    std::vector<BiPoly> ps;
    for (const auto& p : polys) ps.push_back(to_poly(p));
    return check_dict(variety_empty(ps));
  });
  m.def("cz_report", [](const py::iterable& f) {
    CZReport r = cz_report(to_integral(f));
    py::dict d;
    d["i"] = check_dict(r.condition_i);
    d["ii"] = check_dict(r.condition_ii);
    d["iii"] = check_dict(r.condition_iii);
    d["iv"] = check_dict(r.condition_iv);
    d["overall"] = check_dict(r.overall);
    return d;
  });

  m.def("linearize", [](const py::iterable& f, const VectorField& x, std::optional<std::size_t> pivot) {
    FactoredIntegral fi = to_integral(f);
    LinearizationCertificate c = linearize(fi, x, pivot.value_or(fi.size()));
    py::dict d;
    d["u"] = c.u_expr;
    d["v"] = c.v_expr;
    d["K"] = py::make_tuple(c.K1, c.K2, c.K3, c.K4);
    d["D"] = c.D;
    d["G"] = c.G;
    d["pivot"] = c.pivot;
    d["hamiltonian"] = c.hamiltonian;
    d["verified"] = c.verified();
    return d;
  }, py::arg("factors"), py::arg("field"), py::arg("pivot") = py::none());

  m.def("integrate_orbit", [](const VectorField& x, double x0, double y0, double step, unsigned n) {
    return integrate_orbit(x, x0, y0, step, n).points;
  }, py::arg("field"), py::arg("x0"), py::arg("y0"), py::arg("step"), py::arg("n"));
  m.def("conservation_drift", [](const py::handle& h, const VectorField& x, double x0, double y0, double step,
                                 unsigned n) {
    return conservation_drift(to_poly(h), integrate_orbit(x, x0, y0, step, n));
  }, py::arg("H"), py::arg("field"), py::arg("x0"), py::arg("y0"), py::arg("step"), py::arg("n"));
}

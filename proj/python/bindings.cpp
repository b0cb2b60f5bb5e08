#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "menhir/menhir.hpp"

namespace py = pybind11;
using namespace menhir;

namespace {

std::vector<double> to_list(std::span<const double> s) { return {s.begin(), s.end()}; }

template <class T>
std::string repr(const char* type, const T& value) {
  std::ostringstream os;
  os << type << value;
  return os.str();
}

py::dict report_dict(const IdentityCandidate& c, const TestReport& r) {
  py::dict d;
  d["identity"] = render_text(c);
  d["name"] = c.name.empty() ? py::object(py::none()) : py::object(py::str(c.name));
  d["holds"] = r.holds;
  d["verdict"] = std::string(verdict_name(r.verdict));
  d["max_residual"] = r.max_residual;
  d["samples"] = r.samples;
  d["seed"] = r.seed;
  if (r.witness) {
    py::list w;
    for (const auto& p : *r.witness) w.append(to_list(p.value().coeffs()));
    d["witness"] = w;
    d["witness_residual"] = r.witness_residual;
  } else {
    d["witness"] = py::none();
    d["witness_residual"] = py::none();
  }
  return d;
}

LoopProduct product_for(int k) {
  if (k == 1) return LoopProduct::menhir();
  if (k == 2) return LoopProduct::relativistic();
  return LoopProduct::deformed(k);
}

TestOptions options_for(Algebra alg, int k, std::size_t samples, double tol, std::uint64_t seed) {
  TestOptions t;
  t.algebra = alg;
  t.product = product_for(k);
  t.samples = samples;
  t.tol = tol;
  t.seed = seed;
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Menhir loop, its k-deformations and relativistic velocity composition over R, C, H, O";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  (void)domain_error;

  py::enum_<Algebra>(m, "Algebra")
      .value("real", Algebra::real)
      .value("complex", Algebra::complex)
      .value("quaternion", Algebra::quaternion)
      .value("octonion", Algebra::octonion);

  py::class_<AlgebraElement>(m, "AlgebraElement")
      .def(py::init([](Algebra alg, const std::vector<double>& c) { return AlgebraElement(alg, c); }),
           py::arg("algebra"), py::arg("coeffs"))
      .def_property_readonly("algebra", &AlgebraElement::algebra)
      .def_property_readonly("coeffs", [](const AlgebraElement& a) { return to_list(a.coeffs()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def("__repr__", [](const AlgebraElement& a) { return repr("AlgebraElement", a); });

  py::class_<DiskPoint>(m, "DiskPoint")
      .def(py::init<const AlgebraElement&>(), py::arg("value"))
      .def(py::init([](Algebra alg, const std::vector<double>& c) { return DiskPoint(AlgebraElement(alg, c)); }),
           py::arg("algebra"), py::arg("coeffs"))
      .def_property_readonly("value", &DiskPoint::value)
      .def_property_readonly("algebra", &DiskPoint::algebra)
      .def_property_readonly("coeffs", [](const DiskPoint& a) { return to_list(a.value().coeffs()); })
      .def("__repr__", [](const DiskPoint& a) { return repr("DiskPoint", a); });

  m.def("multiply", &multiply);
  m.def("conjugate", &conjugate);
  m.def("norm_sq", &norm_sq);
  m.def("inverse", &inverse);

  m.def("boxplus", &boxplus, "Menhir product (a + b)(1 + conj(a) b)^-1");
  m.def("neg", &neg);
  m.def("left_divide", &left_divide, "x with boxplus(a, x) == b");
  m.def("right_divide", &right_divide, "x with boxplus(x, a) == b");

  m.def("box_double", &box_double);
  m.def("box_half", &box_half);
  m.def("box_scale", &box_scale, py::arg("k"), py::arg("a"));
  m.def("box_unscale", &box_unscale, py::arg("k"), py::arg("a"));
  m.def("to_rapidity", [](const DiskPoint& a) { return to_rapidity(a).vec; });
  m.def("from_rapidity", [](const AlgebraElement& rho) { return from_rapidity({rho}); });

  m.def("mu", &mu);
  m.def("mu_inv", &mu_inv);
  m.def("relativistic_add", &relativistic_add);
  m.def("k_add", &k_add, py::arg("k"), py::arg("a"), py::arg("b"));
  m.def("limit_add", &limit_add);

  m.def("moller_add", [](const std::vector<double>& v, const std::vector<double>& u) {
    return to_list(moller_add(VelocityVector(v), VelocityVector(u)).components());
  });
  m.def("poincare_add", &poincare_add);
  m.def("embed", [](const std::vector<double>& v) { return embed(VelocityVector(v)); });
  m.def("project", [](const DiskPoint& a, std::size_t n) { return to_list(project(a, n).components()); });

  m.def("enumerate_trees", [](std::size_t n) {
    std::vector<std::string> out;
    std::string letters;
    for (std::size_t i = 0; i < n; ++i) letters.push_back(static_cast<char>('a' + i));
    for (const auto& t : enumerate_trees(n)) out.push_back(t.render(letters));
    return out;
  });
  m.def("builtin_candidates", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : builtin_candidates()) out.emplace_back(c.name, render_text(c));
    return out;
  });
  m.def(
      "test_identity",
      [](const std::string& identity, Algebra alg, int k, std::size_t samples, double tol, std::uint64_t seed) {
        const auto c = parse_candidate(identity);
        return report_dict(c, test_identity(c, options_for(alg, k, samples, tol, seed)));
      },
      py::arg("identity"), py::arg("algebra"), py::arg("k") = 1, py::arg("samples") = 10000, py::arg("tol") = 1e-9,
      py::arg("seed") = 0);
  m.def(
      "survey_identities",
      [](std::size_t n, Algebra alg, int k, std::size_t samples, double tol, std::uint64_t seed) {
        const auto s = survey_identities(n, options_for(alg, k, samples, tol, seed));
        py::list holders;
        for (const auto& h : s.holders) {
          auto d = report_dict(h.candidate, h.report);
          d["derivation"] = std::string(derivation_name(h.derivation));
          holders.append(d);
        }
        return py::make_tuple(s.tested, holders);
      },
      py::arg("n"), py::arg("algebra"), py::arg("k") = 1, py::arg("samples") = 10000, py::arg("tol") = 1e-9,
      py::arg("seed") = 0);
}

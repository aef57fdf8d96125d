#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgv/divisor.hpp"
#include "cgv/genus.hpp"
#include "cgv/number_field.hpp"
#include "cgv/parser.hpp"
#include "cgv/suites.hpp"

namespace py = pybind11;

namespace {

cgv::NFElem field_element(const std::string& text) {
  const auto p = cgv::parse_poly(text);
  if (!p.is_constant()) throw py::value_error("not an element of Q(r): " + text);
  return p.constant_term();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks over Q(r), r^3 + r^2 - 1 = 0";

  py::register_exception<cgv::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cgv::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<cgv::InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

  m.def("eval_expr", [](const std::string& text) { return cgv::eval_expr(text); }, py::arg("text"),
        "Canonical form of a polynomial expression in X, Y, Z, T, m over Q(r).");

  m.def(
      "run_suite",
      [](const std::string& name, std::optional<std::string> m_expr, std::uint64_t seed, std::size_t survey,
         long bound, const std::string& format) {
        cgv::RunConfig config;
        config.m = std::move(m_expr);
        config.seed = seed;
        config.survey = survey;
        config.bound = bound;
        const auto report = cgv::run_suite(name, config);
        if (format == "json") return cgv::to_json(report);
        if (format == "text") return cgv::to_text(report);
        throw py::value_error("format must be 'json' or 'text'");
      },
      py::arg("name"), py::arg("m") = py::none(), py::arg("seed") = 1, py::arg("survey") = 100,
      py::arg("bound") = 5, py::arg("format") = "json");

  m.def("nf_inverse", [](const std::string& a) { return cgv::nf_invert(field_element(a)).to_string(); },
        py::arg("a"));
  m.def(
      "nf_reduce",
      [](const std::vector<long>& coefficients) {
        std::vector<cgv::BigRational> c(coefficients.begin(), coefficients.end());
        return cgv::nf_reduce(cgv::UPoly<cgv::BigRational>(std::move(c))).to_string();
      },
      py::arg("coefficients"), "Reduces sum c_i r^i, coefficients lowest degree first.");

  m.def("ci_genus", &cgv::ci_genus, py::arg("d1"), py::arg("d2"));
  m.def("rh_relation", &cgv::rh_relation, py::arg("p_cover"), py::arg("p_quotient"));
  m.def("exceptional_multiplicity", [](long n) { return cgv::exceptional_multiplicity(n); }, py::arg("n"));
  m.def(
      "quotient_feasibility",
      [](long p_a, long fibers, long ram_deg) {
        const auto r = cgv::quotient_feasibility({p_a, fibers, ram_deg});
        py::dict out;
        out["feasible"] = r.feasible;
        out["s_q"] = r.s_q ? py::object(py::int_(*r.s_q)) : py::object(py::none());
        out["obstruction"] = r.obstruction;
        return out;
      },
      py::arg("p_a"), py::arg("fibers") = 4, py::arg("ram_deg") = 2);
  m.def(
      "distinct_points",
      [](const std::string& form) { return cgv::distinct_points(cgv::BinaryForm::from_poly(cgv::parse_poly(form))); },
      py::arg("form"), "Distinct roots on P^1 of a binary form in X, Y.");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgn/arith.hpp"
#include "mgn/characters.hpp"
#include "mgn/confspace.hpp"
#include "mgn/cyclic.hpp"
#include "mgn/error.hpp"
#include "mgn/moduli.hpp"
#include "mgn/selftest.hpp"
#include "mgn/serialize.hpp"

namespace py = pybind11;
using namespace mgn;

namespace {

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

py::object to_py(const BigInt& n) { return py::module_::import("builtins").attr("int")(to_string(n)); }

Rational rational_from_py(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

FormulaOptions options_from(const std::vector<std::string>& printed_forms) {
  FormulaOptions options;
  for (const auto& name : printed_forms) enable_printed_form(options, name);
  return options;
}

py::tuple partition_tuple(const Partition& p) { return py::cast(p.parts()); }

// {cycle type: Fraction}
py::dict polynomial_to_py(const PPolynomial& f) {
  py::dict out;
  for (const auto& [m, c] : f.terms()) out[partition_tuple(m.to_partition())] = to_py(c);
  return out;
}

PPolynomial polynomial_from_py(const py::dict& terms) {
  PPolynomial f;
  for (const auto& [key, value] : terms) {
    f += PPolynomial(PMonomial::from_partition(Partition(key.cast<std::vector<int>>())), rational_from_py(value));
  }
  return f;
}

py::list series_to_py(const TruncatedSeries& s) {
  py::list out;
  for (int n = 0; n <= s.order(); ++n) out.append(polynomial_to_py(s[n]));
  return out;
}

py::dict signature_to_py(const moduli::Signature& sig) {
  py::dict d;
  d["genus"] = sig.genus;
  d["order"] = sig.ord;
  d["exponents"] = sig.exponents;
  d["quotient_genus"] = sig.quotient_genus;
  d["branch_points"] = sig.branch_points;
  d["classes"] = sig.classes;
  return d;
}

py::dict record_to_py(const moduli::CoefficientRecord& rec) {
  py::dict d;
  d["signature"] = signature_to_py(rec.signature);
  d["coefficient"] = to_py(rec.coefficient);
  d["chi_orb"] = to_py(rec.chi_orb);
  d["monodromy_count"] = to_py(rec.monodromy_count);
  d["n_value"] = to_py(rec.n_value);
  d["denominator"] = to_py(rec.denominator);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact S_n-equivariant Euler characteristics of moduli spaces of pointed curves";
  m.attr("__version__") = MGN_VERSION;

  // translators registered later are tried first, so bases come before subclasses
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnstableError>(m, "UnstableError", domain.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.def("printed_form_names", &printed_form_names);

  m.def("mobius", &arith::mobius, py::arg("n"));
  m.def("euler_phi", &arith::euler_phi, py::arg("n"));
  m.def("divisors", &arith::divisors, py::arg("n"));
  m.def("bernoulli", [](int n) { return to_py(arith::bernoulli(n)); }, py::arg("n"));

  m.def("c_sum", &cyclic::c_sum, py::arg("k"), py::arg("l"), py::arg("d"));
  m.def(
      "count_residue_tuples",
      [](std::int64_t k, const std::vector<std::int64_t>& classes, bool bruteforce) {
        const cyclic::ResidueConstraint rc{k, classes};
        return to_py(bruteforce ? cyclic::count_residue_tuples_bruteforce(rc) : cyclic::count_residue_tuples(rc));
      },
      py::arg("k"), py::arg("classes"), py::arg("bruteforce") = false);
  m.def(
      "count_connected_monodromies",
      [](std::int64_t ord, int h, std::int64_t L, bool bruteforce, const std::vector<std::string>& printed_forms) {
        if (bruteforce) return to_py(cyclic::count_connected_monodromies_bruteforce(ord, h, L));
        return to_py(cyclic::count_connected_monodromies(ord, h, L, options_from(printed_forms)));
      },
      py::arg("order"), py::arg("h"), py::arg("L"), py::arg("bruteforce") = false,
      py::arg("printed_forms") = std::vector<std::string>{});

  m.def("orb_chi", [](int h, int s) { return to_py(moduli::orb_chi_moduli(h, s)); }, py::arg("h"), py::arg("s"));
  m.def(
      "signatures",
      [](int genus) {
        py::list out;
        for (const auto& sig : moduli::enumerate_signatures(genus)) out.append(signature_to_py(sig));
        return out;
      },
      py::arg("genus"));
  m.def(
      "coefficient_table",
      [](int genus) {
        py::list out;
        for (const auto& rec : moduli::coefficient_table(genus)) out.append(record_to_py(rec));
        return out;
      },
      py::arg("genus"));
  m.def(
      "mgn_series", [](int genus, int max_points) { return series_to_py(moduli::mgn_series(genus, max_points)); },
      py::arg("genus"), py::arg("max_points"));

  m.def(
      "mn_character",
      [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return mn_character(Partition(lambda), Partition(mu));
      },
      py::arg("shape"), py::arg("cycle_type"));
  m.def(
      "p_to_schur",
      [](const py::dict& terms, int n) {
        py::dict out;
        for (const auto& [lambda, mult] : p_to_schur(polynomial_from_py(terms), n)) out[partition_tuple(lambda)] = to_py(mult);
        return out;
      },
      py::arg("terms"), py::arg("n"));

  m.def(
      "config_series_json",
      [](const std::string& document, int max_points) {
        const auto json = io::Json::parse(document);
        if (json.is_object() && json.contains("strata")) {
          return series_to_py(confspace::strata_combine(io::strata_from_json(json), max_points));
        }
        return series_to_py(confspace::equivariant_config_series(io::group_action_from_json(json), max_points));
      },
      py::arg("document"), py::arg("max_points"));

  m.def(
      "selftest",
      [](const std::vector<std::string>& printed_forms) {
        const auto report = selftest::run(options_from(printed_forms));
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          d["seconds"] = c.seconds;
          checks.append(d);
        }
        return py::make_tuple(report.passed(), checks);
      },
      py::arg("printed_forms") = std::vector<std::string>{});
}

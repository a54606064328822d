#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uhsl2/algebra.hpp"
#include "uhsl2/cli.hpp"
#include "uhsl2/combinatorics.hpp"
#include "uhsl2/expression.hpp"
#include "uhsl2/rewrite.hpp"
#include "uhsl2/serialize.hpp"
#include "uhsl2/species.hpp"
#include "uhsl2/verify.hpp"

namespace py = pybind11;
using namespace uhsl2;

namespace {

using Exponents = std::tuple<unsigned, unsigned, unsigned, unsigned>;

NormalMonomial mono(const Exponents& e) {
  return {std::get<0>(e), std::get<1>(e), std::get<2>(e), std::get<3>(e)};
}

py::object to_py(const Integer& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& n) { return Integer(std::string(py::str(n))); }

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(q)), to_py(denominator(q)));
}

// {(a, b, c, d): Fraction}
py::dict to_py(const Element& f) {
  py::dict out;
  for (const auto& [m, c] : f.terms()) out[py::make_tuple(m.x, m.y, m.z, m.h)] = to_py(c);
  return out;
}

Element eval_text(const std::string& text, std::optional<unsigned> cap) {
  return eval(*parse(text), cap);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact products in the homogeneous enveloping algebra of sl2.";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception<IntegralityViolation>(m, "IntegralityViolation", PyExc_ArithmeticError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    }
  });

  m.def(
      "star",
      [](const std::string& expr, std::optional<unsigned> cap) {
        return to_py(eval_text(expr, cap));
      },
      py::arg("expr"), py::arg("cap") = py::none(),
      "Evaluate an expression such as 'z * m(2,0,0,0)' to {(a,b,c,d): Fraction}.");
  m.def(
      "star_json",
      [](const std::string& expr, std::optional<unsigned> cap) {
        return to_json(eval_text(expr, cap));
      },
      py::arg("expr"), py::arg("cap") = py::none());
  m.def(
      "pretty",
      [](const std::string& expr, std::optional<unsigned> cap) {
        return to_pretty(eval_text(expr, cap));
      },
      py::arg("expr"), py::arg("cap") = py::none());
  m.def(
      "roundtrip_json", [](const std::string& text) { return to_json(from_json(text)); },
      py::arg("text"), "Parse and re-emit an element document.");
  m.def(
      "normalize_expression",
      [](const std::string& text) { return to_string(*parse(text)); }, py::arg("expr"),
      "Canonical text of the parsed expression.");

  m.def(
      "coeff",
      [](const Exponents& l, const Exponents& r, const Exponents& out) {
        return to_py(structural_coefficient(mono(l), mono(r), mono(out)));
      },
      py::arg("left"), py::arg("right"), py::arg("out"));
  m.def(
      "mono_star_mono",
      [](const Exponents& l, const Exponents& r) { return to_py(mono_star_mono(mono(l), mono(r))); },
      py::arg("left"), py::arg("right"));
  m.def(
      "oracle_star",
      [](const Exponents& l, const Exponents& r) { return to_py(oracle_star(mono(l), mono(r))); },
      py::arg("left"), py::arg("right"));
  m.def(
      "normalize_word",
      [](const std::string& word) {
        py::dict out;
        const WordSum normal = normalize(FreeWord(word));
        for (const auto& [w, c] : normal.terms()) out[py::str(w.letters())] = to_py(c);
        return out;
      },
      py::arg("word"), "Normal-order a plain word in X, Y, Z, H by rewriting.");

  m.def("normal_order_zy", [](unsigned a, unsigned b) { return to_py(normal_order_zy(a, b)); });
  m.def("normal_order_yx", [](unsigned a, unsigned b) { return to_py(normal_order_yx(a, b)); });
  m.def("normal_order_zx", [](unsigned a, unsigned b) { return to_py(normal_order_zx(a, b)); });

  m.def(
      "shifted_elem",
      [](const py::int_& a, unsigned s, unsigned n) { return to_py(shifted_elem(from_py(a), s, n)); },
      py::arg("a"), py::arg("s"), py::arg("n"));

  m.def(
      "species_count",
      [](const std::string& f, const std::string& g, const Exponents& sizes) {
        const auto [a, b, c, d] = sizes;
        return to_py(star_species(parse_functor(f), parse_functor(g), {a, b, c, d}));
      },
      py::arg("left"), py::arg("right"), py::arg("sizes"));
  m.def(
      "species_check",
      [](const std::string& f, const std::string& g, unsigned max_total) {
        const SpeciesReport r = species_coefficient_check(parse_functor(f), parse_functor(g), max_total);
        py::list mismatches;
        for (const auto& mm : r.mismatches) {
          const auto& s = mm.sizes;
          mismatches.append(py::make_tuple(py::make_tuple(s.nx, s.ny, s.nz, s.nh),
                                           to_py(mm.species_count), to_py(mm.algebra_coefficient)));
        }
        return py::make_tuple(r.checked, mismatches);
      },
      py::arg("left"), py::arg("right"), py::arg("max_total"),
      "Returns (sizes checked, [(sizes, species count, algebra coefficient), ...]).");

  m.def(
      "verify",
      [](unsigned max_exp, unsigned threads) {
        OracleSweepReport r;
        {
          py::gil_scoped_release release;
          r = oracle_sweep(max_exp, threads);
        }
        py::dict out;
        out["pairs"] = r.pairs;
        out["coefficients"] = r.coefficients;
        out["mismatches"] = r.mismatch_count;
        out["integrality_violations"] = r.integrality_violations;
        return out;
      },
      py::arg("max_exp"), py::arg("threads") = 0);
  m.def("identities", [] {
    py::list out;
    for (const CheckResult& c : identity_catalog()) out.append(py::make_tuple(c.name, c.passed, c.detail));
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command line; returns (exit code, stdout, stderr).");
}

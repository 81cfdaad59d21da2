#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lzeta/bernoulli.hpp"
#include "lzeta/cli.hpp"
#include "lzeta/coefficients.hpp"
#include "lzeta/error.hpp"
#include "lzeta/identity.hpp"
#include "lzeta/zeta_engine.hpp"

namespace py = pybind11;
using namespace lzeta;

namespace {

py::dict result_dict(const ConstantResult& r) {
  py::dict d;
  d["constant"] = r.constant_id;
  d["method"] = r.method_id;
  d["value"] = r.decimal_value;
  d["error_bound"] = r.error_bound.to_scientific();
  py::dict terms;
  for (const auto& [basis, n] : r.terms_used) terms[py::str(basis)] = n;
  d["terms_used"] = terms;
  return d;
}

std::string table_json(CoefficientTable t, bool rewrite) {
  if (rewrite) t = negative_q_rewrite(t);
  return to_json(t);
}

}  // namespace

PYBIND11_MODULE(_lzeta, m) {
  m.doc() = "Lambert-series evaluation of odd zeta values, odd powers of pi and small-prime logs";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("bernoulli", [](long n) { return bernoulli(n).get_str(); }, py::arg("n"), "B_n as an exact 'p/q' string.");

  m.def(
      "zeta_odd",
      [](long s, const std::string& method, long digits) { return result_dict(zeta_odd(s, method, make_context(digits))); },
      py::arg("s"), py::arg("method") = "auto", py::arg("digits") = 50);
  m.def(
      "pi_power",
      [](long n, const std::string& method, long digits) {
        const std::string m = method == "auto" ? pi_methods(n).front() : method;
        return result_dict(pi_power(n, m, make_context(digits)));
      },
      py::arg("n"), py::arg("method") = "auto", py::arg("digits") = 50);
  m.def(
      "log_prime", [](long p, long digits) { return result_dict(log_prime(p, make_context(digits))); }, py::arg("p"),
      py::arg("digits") = 50);
  m.def(
      "zeta3_first_order", [](long digits) { return zeta3_first_order(make_context(digits)).to_decimal(digits); },
      py::arg("digits") = 50);
  m.def(
      "oracle", [](const std::string& id, long digits) { return oracle_constant(id, make_context(digits)).to_decimal(digits); },
      py::arg("constant"), py::arg("digits") = 50, "Reference value of 'zeta(n)', 'pi^n' or 'log(p)'.");

  m.def(
      "coeffs_zeta", [](long s, const std::string& method, bool rewrite) { return table_json(coeffs_zeta(s, method), rewrite); },
      py::arg("s"), py::arg("method") = "auto", py::arg("rewrite_positive_q") = false);
  m.def(
      "coeffs_pi", [](long power, const std::string& method) { return table_json(coeffs_pi(method, power), false); },
      py::arg("power"), py::arg("method"));
  m.def(
      "coeffs_log", [](long p) { return table_json(coeffs_log(p), false); }, py::arg("p"));
  m.def("zeta_methods", &zeta_methods, py::arg("s"));

  m.def(
      "convergence_profile",
      [](long s, const std::string& method, long max_terms) {
        const ConvergenceProfile p = convergence_profile(coeffs_zeta(s, method), max_terms);
        py::dict d;
        d["constant"] = p.constant_id;
        d["method"] = p.method_id;
        d["rate"] = p.rate;
        py::list pts;
        for (const auto& pt : p.points) pts.append(py::make_tuple(pt.terms, pt.correct_digits));
        d["points"] = pts;
        d["slope"] = p.slope;
        return d;
      },
      py::arg("s"), py::arg("method"), py::arg("max_terms") = 15);

  m.def(
      "check_multisection", [](long p, long s, long order) { return check_multisection(p, s, order).get_str(); },
      py::arg("p"), py::arg("s"), py::arg("order") = 50, "Largest coefficient difference as an exact string.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}

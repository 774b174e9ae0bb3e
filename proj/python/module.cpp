#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padicverify/engine.hpp"
#include "padicverify/gamma.hpp"
#include "padicverify/precision.hpp"
#include "padicverify/report.hpp"
#include "padicverify/series.hpp"

namespace py = pybind11;
using namespace pv;

namespace {

std::string teichmuller_root(long p, long t, long digits) {
  return teichmuller(p, t, digits).str();
}

std::string gamma_value(long p, long num, long den, long gamma_digits,
                        long working) {
  if (gamma_digits <= 0) gamma_digits = default_gamma_digits(p);
  return morita_gamma(p, BigRat(num, den), gamma_digits, working).str();
}

std::string gauss_valuation(long p, long a, long digits) {
  TeichmullerTable table(p, digits);
  return cyclo_valuation(gauss_sum(a, table)).str();
}

std::string unit_log(long p, long u, long digits) {
  return iwasawa_log_scalar(PadicScalar::from_integer(p, u, digits)).str();
}

py::tuple l_values(long p, long exponent, long target) {
  PrecisionPolicy pol = PrecisionPolicy::make(p, target);
  TeichmullerTable table(p, pol.working());
  BernoulliCache bern(kl_truncation_index(p, pol.working()));
  Jet out = kubota_leopoldt(DirichletCharacter{p, exponent}, table, bern);
  return py::make_tuple(out.value.str(), out.deriv.str());
}

VerificationReport run(long p, long target, bool strict, bool skip_gamma) {
  ProtocolConfig cfg;
  cfg.p = p;
  cfg.target_digits = target;
  cfg.strict = strict;
  cfg.skip_gamma_check = skip_gamma;
  return run_protocol(cfg);
}

std::string verify_json(long p, long target, bool strict, bool skip_gamma) {
  return render_report_json(run(p, target, strict, skip_gamma));
}

py::tuple verify_csv(long p, long target, bool skip_gamma) {
  VerificationReport r = run(p, target, false, skip_gamma);
  return py::make_tuple(csv_header(), csv_row(r));
}

}  // namespace

PYBIND11_MODULE(_padicverify, m) {
  m.def("teichmuller", &teichmuller_root, py::arg("p"), py::arg("t"),
        py::arg("digits") = 30);
  m.def("gamma", &gamma_value, py::arg("p"), py::arg("num"), py::arg("den"),
        py::arg("gamma_digits") = 0, py::arg("working") = 30);
  m.def("gauss_valuation", &gauss_valuation, py::arg("p"), py::arg("a"),
        py::arg("digits") = 30);
  m.def("unit_log", &unit_log, py::arg("p"), py::arg("u"),
        py::arg("digits") = 30);
  m.def("l_values", &l_values, py::arg("p"), py::arg("exponent"),
        py::arg("digits") = 30);
  m.def("verify_json", &verify_json, py::arg("p"), py::arg("digits") = 100,
        py::arg("strict") = false, py::arg("skip_gamma_check") = false);
  m.def("verify_csv", &verify_csv, py::arg("p"), py::arg("digits") = 100,
        py::arg("skip_gamma_check") = false);
}

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loglab/identities.hpp"
#include "loglab/quadrature.hpp"
#include "loglab/report.hpp"
#include "loglab/series.hpp"
#include "loglab/specfun.hpp"
#include "loglab/verifier.hpp"

namespace py = pybind11;

namespace {

using loglab::Complex;
using loglab::Params;

Params to_params(const py::dict& d) {
  Params p;
  for (const auto& item : d) {
    p[item.first.cast<std::string>()] = item.second.cast<Complex>();
  }
  return p;
}

py::object value_out(Complex z, bool as_real) {
  if (as_real) return py::float_(z.real());
  return py::cast(z);
}

py::dict result_dict(const loglab::VerificationResult& r) {
  const bool as_real = loglab::identity(r.identity_id).value_kind == loglab::ValueKind::real;
  py::dict d;
  d["identity_id"] = r.identity_id;
  py::dict params;
  for (const auto& [name, value] : r.params) {
    params[name.c_str()] = value.imag() == 0.0 ? py::object(py::float_(value.real()))
                                               : py::object(py::cast(value));
  }
  d["params"] = params;
  if (r.lhs_quadrature) d["lhs_quadrature"] = value_out(*r.lhs_quadrature, as_real);
  d["rhs_closed"] = value_out(r.rhs_closed, as_real);
  if (r.series_value) d["series_value"] = value_out(*r.series_value, as_real);
  if (r.abs_error_qc) d["abs_error_qc"] = *r.abs_error_qc;
  if (r.abs_error_qs) d["abs_error_qs"] = *r.abs_error_qs;
  if (r.abs_error_cs) d["abs_error_cs"] = *r.abs_error_cs;
  d["threshold_qc"] = r.threshold_qc;
  d["threshold_series"] = r.threshold_series;
  d["evaluations"] = r.evaluations;
  d["elapsed"] = r.elapsed_seconds;
  d["verdict"] = loglab::to_string(r.verdict);
  if (!r.cause.empty()) d["cause"] = r.cause;
  return d;
}

loglab::QuadratureConfig make_cfg(double abs_tol, int max_level) {
  loglab::QuadratureConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.max_level = max_level;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical verification of the doubly logarithmic Gradshteyn-Ryzhik integrals";

  py::register_exception<loglab::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<loglab::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  // special functions
  m.def("gamma", &loglab::gamma_fn, py::arg("x"));
  m.def("log_gamma", &loglab::log_gamma, py::arg("x"));
  m.def("digamma", &loglab::digamma, py::arg("x"));
  m.def("zeta", &loglab::zeta, py::arg("s"));
  m.def("zeta_prime", &loglab::zeta_prime, py::arg("s"));
  m.def("zeta_laurent", &loglab::zeta_laurent, py::arg("s"), py::arg("order"));
  m.def("eta", &loglab::eta, py::arg("s"));
  m.def("eta_prime", &loglab::eta_prime, py::arg("s"));
  m.def("dirichlet_beta", &loglab::dirichlet_beta, py::arg("s"));
  m.def("dirichlet_beta_prime_half", &loglab::dirichlet_beta_prime_half);
  m.def(
      "kummer_log_gamma",
      [](double x, double tolerance, std::int64_t max_terms) {
        return loglab::kummer_log_gamma(x, {tolerance, max_terms});
      },
      py::arg("x"), py::arg("tolerance") = 1e-7, py::arg("max_terms") = 20000);
  m.def(
      "sawtooth_series",
      [](double x, double tolerance, std::int64_t max_terms) {
        return loglab::sawtooth_series(x, {tolerance, max_terms});
      },
      py::arg("x"), py::arg("tolerance") = 1e-7, py::arg("max_terms") = 20000);

  // series engines
  m.def(
      "sum_alternating",
      [](const std::function<double(std::int64_t)>& coeff, std::int64_t start, double tol) {
        auto r = loglab::sum_alternating({coeff, start}, tol);
        return py::make_tuple(r.value.real(), r.error_estimate, r.terms_used);
      },
      py::arg("coefficient"), py::arg("start_index"), py::arg("tol"),
      "Accelerated Sum (-1)^j a_{k0+j}; returns (value, error_estimate, terms_used)");
  m.def(
      "sum_phase",
      [](const std::function<double(std::int64_t)>& coeff, std::int64_t start, double theta,
         double tol) {
        auto r = loglab::sum_phase({coeff, start}, theta, tol);
        return py::make_tuple(r.value, r.error_estimate, r.terms_used);
      },
      py::arg("coefficient"), py::arg("start_index"), py::arg("theta"), py::arg("tol"));
  m.def("gr_4_325_2_series", &loglab::gr_4_325_2_series, py::arg("lam"), py::arg("tol") = 1e-10);
  m.def("gr_4_325_7_sine_series", &loglab::gr_4_325_7_sine_series, py::arg("t"),
        py::arg("tol") = 1e-10);
  m.def("gr_4_325_10_series", &loglab::gr_4_325_10_series, py::arg("tol") = 1e-10);

  // quadrature
  m.def(
      "integrate_01",
      [](const std::function<Complex(double, double)>& f, double abs_tol, int max_level) {
        auto r = loglab::integrate_01(f, make_cfg(abs_tol, max_level));
        return py::make_tuple(r.value, r.error_estimate, r.evaluations, r.level_reached);
      },
      py::arg("f"), py::arg("abs_tol") = 1e-12, py::arg("max_level") = 10,
      "tanh-sinh on (0,1); f receives (x, 1-x); returns (value, err, evals, level)");
  m.def(
      "integrate_halfline",
      [](const std::function<Complex(double)>& g, double abs_tol, int max_level) {
        auto r = loglab::integrate_halfline(g, make_cfg(abs_tol, max_level));
        return py::make_tuple(r.value, r.error_estimate, r.evaluations, r.level_reached);
      },
      py::arg("g"), py::arg("abs_tol") = 1e-12, py::arg("max_level") = 10);

  // registry
  m.def("list_identities", [] {
    py::list out;
    for (const auto& s : loglab::list_identities()) {
      py::dict d;
      d["id"] = s.id;
      d["summary"] = s.summary;
      d["kind"] = s.value_kind == loglab::ValueKind::real ? "real" : "complex";
      d["has_series_form"] = s.has_series_form;
      if (s.integration_domain) {
        d["integration_domain"] = py::make_tuple(s.integration_domain->lo,
                                                 s.integration_domain->hi);
      }
      out.append(d);
    }
    return out;
  });
  m.def(
      "closed_form",
      [](const std::string& id, const py::dict& params) {
        const Complex v = loglab::closed_form(id, to_params(params));
        return value_out(v, loglab::identity(id).value_kind == loglab::ValueKind::real);
      },
      py::arg("id"), py::arg("params") = py::dict());
  m.def(
      "integrand",
      [](const std::string& id, const py::dict& params, double x, double one_minus_x) {
        const Complex v = loglab::integrand(id, to_params(params), x, one_minus_x);
        return value_out(v, loglab::identity(id).value_kind == loglab::ValueKind::real);
      },
      py::arg("id"), py::arg("params"), py::arg("x"), py::arg("one_minus_x"));

  // verifier
  m.def(
      "verify",
      [](const std::string& id, const py::dict& params, double abs_tol, int max_level,
         std::optional<double> threshold) {
        const Params p = to_params(params);
        const double thr = threshold.value_or(loglab::default_threshold(id, p));
        return result_dict(loglab::verify(id, p, make_cfg(abs_tol, max_level), thr));
      },
      py::arg("id"), py::arg("params") = py::dict(), py::arg("abs_tol") = 1e-12,
      py::arg("max_level") = 10, py::arg("threshold") = std::nullopt);
  m.def(
      "verify_all",
      [](double abs_tol, int max_level, std::optional<double> threshold) {
        const auto report = loglab::full_matrix(make_cfg(abs_tol, max_level), threshold);
        py::dict d;
        py::list results;
        for (const auto& r : report.results) results.append(result_dict(r));
        d["results"] = results;
        py::dict summary;
        summary["pass"] = report.summary.pass;
        summary["fail"] = report.summary.fail;
        summary["skipped"] = report.summary.skipped;
        d["summary"] = summary;
        return d;
      },
      py::arg("abs_tol") = 1e-12, py::arg("max_level") = 10, py::arg("threshold") = std::nullopt);
}

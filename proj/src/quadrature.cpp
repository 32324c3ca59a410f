#include "loglab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "loglab/constants.hpp"

namespace loglab {

namespace {

constexpr double kPi = constants::pi;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

[[noreturn]] void throw_nonfinite(const char* rule, double where) {
  throw NonFiniteSampleError(std::string(rule) + ": integrand returned a non-finite value at " +
                             std::to_string(where));
}

double error_floor(Complex value) {
  return std::numeric_limits<double>::epsilon() * (1.0 + 4.0 * std::abs(value));
}

// Shared dyadic trapezoid driver. `sample` returns false for clipped
// abscissae. Levels refine h = 2^{3-L}; only odd multiples are new at L > 0.
template <typename Sample>
QuadratureResult refine(const Sample& sample, double t_max, const QuadratureConfig& cfg,
                        const char* rule) {
  Complex weighted_sum = 0.0;  // Sum of w(t) f(x(t)) over all abscissae so far
  Complex integral = 0.0;
  Complex previous = 0.0;
  long long evaluations = 0;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 0; level <= cfg.max_level; ++level) {
    const double h = std::ldexp(1.0, 3 - level);
    const long long j_max = static_cast<long long>(std::floor(t_max / h));
    for (long long j = -j_max; j <= j_max; ++j) {
      if (level > 0 && j % 2 == 0) continue;
      Complex contribution;
      if (sample(static_cast<double>(j) * h, &contribution)) {
        weighted_sum += contribution;
        ++evaluations;
      }
    }
    integral = h * weighted_sum;
    if (level >= 3) {
      err = std::max(std::abs(integral - previous), error_floor(integral));
      if (err <= cfg.abs_tol) {
        return {integral, err, evaluations, level};
      }
    }
    previous = integral;
  }
  throw QuadratureConvergenceError(
      std::string(rule) + ": refinement levels exhausted with error estimate " +
          std::to_string(err) + " above abs_tol",
      {integral, err, evaluations, cfg.max_level});
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
  if (cfg.max_level < 3 || cfg.max_level > 12) {
    throw DomainError("QuadratureConfig: max_level must lie in [3, 12]");
  }
  if (!(cfg.clip_epsilon > 0.0 && cfg.clip_epsilon <= 1e-10)) {
    throw DomainError("QuadratureConfig: clip_epsilon must lie in (0, 1e-10]");
  }
}

QuadratureResult integrate_01(const Integrand01& f, const QuadratureConfig& cfg) {
  validate(cfg);
  const double log_clip = std::log(1.0 / cfg.clip_epsilon);
  const double t_max = std::asinh(log_clip / kPi);
  auto sample = [&](double t, Complex* out) -> bool {
    const double u = 0.5 * kPi * std::sinh(t);
    // x = 1/(1+e^{-2u}), 1-x = 1/(1+e^{2u}); keep the small side exact.
    const double e = std::exp(-2.0 * std::fabs(u));
    const double small = e / (1.0 + e);
    const double big = 1.0 / (1.0 + e);
    if (small < cfg.clip_epsilon) return false;
    const double x = (u >= 0.0) ? big : small;
    const double one_minus_x = (u >= 0.0) ? small : big;
    // dx/dt = pi cosh(t) x (1-x)
    const double w = kPi * std::cosh(t) * x * one_minus_x;
    const Complex v = f(x, one_minus_x);
    if (!finite(v)) throw_nonfinite("integrate_01", x);
    *out = w * v;
    return true;
  };
  return refine(sample, t_max, cfg, "integrate_01");
}

QuadratureResult integrate_halfline(const HalflineIntegrand& g, const QuadratureConfig& cfg) {
  validate(cfg);
  const double log_clip = std::log(1.0 / cfg.clip_epsilon);
  const double t_max = std::asinh(2.0 * log_clip / kPi);
  auto sample = [&](double t, Complex* out) -> bool {
    const double a = 0.5 * kPi * std::sinh(t);
    const double u = std::exp(a);
    if (u < cfg.clip_epsilon || u > 1.0 / cfg.clip_epsilon || !std::isfinite(u)) return false;
    const double w = u * 0.5 * kPi * std::cosh(t);
    const Complex v = g(u);
    if (!finite(v)) throw_nonfinite("integrate_halfline", u);
    *out = w * v;
    return true;
  };
  return refine(sample, t_max, cfg, "integrate_halfline");
}

QuadratureResult integrate_interval(const IntervalIntegrand& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  if (!(a < b)) throw DomainError("integrate_interval: requires a < b");
  const double width = b - a;
  QuadratureConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol / width;
  auto mapped = [&](double s, double one_minus_s) {
    return f(a + width * s, width * s, width * one_minus_s);
  };
  try {
    QuadratureResult r = integrate_01(mapped, inner);
    r.value *= width;
    r.error_estimate *= width;
    return r;
  } catch (const QuadratureConvergenceError& e) {
    QuadratureResult partial = e.partial();
    partial.value *= width;
    partial.error_estimate *= width;
    throw QuadratureConvergenceError(e.what(), partial);
  }
}

Integrand01 on_real_axis(AnalyticIntegrand f) {
  return [f = std::move(f)](double x, double one_minus_x) {
    const double neg_log_x = one_minus_x < 0.5 ? -std::log1p(-one_minus_x) : -std::log(x);
    return f(Complex(x, 0.0), Complex(neg_log_x, 0.0));
  };
}

HalflineIntegrand transform_loglog(AnalyticIntegrand f, Complex mu) {
  if (!(mu.real() > 0.0)) {
    throw DomainError("transform_loglog: requires Re(mu) > 0");
  }
  return [f = std::move(f), mu](double u) -> Complex {
    // |e^{-u/mu}| = e^{-u Re(mu)/|mu|^2}; once that underflows past any
    // algebraic growth of f the whole product is zero to double precision.
    if (u * (mu.real() / std::norm(mu)) > 690.0) return Complex(0.0, 0.0);
    const Complex neg_log_x = u / mu;
    const Complex x = std::exp(-neg_log_x);
    return x / mu * f(x, neg_log_x);
  };
}

}  // namespace loglab

#pragma once

#include <complex>
#include <functional>

#include "loglab/errors.hpp"

namespace loglab {

using Complex = std::complex<double>;

struct QuadratureConfig {
  double abs_tol = 1e-12;
  int max_level = 10;          // dyadic refinement cap, 3..12
  double clip_epsilon = 1e-280;  // abscissae closer than this to an endpoint are dropped
};

void validate(const QuadratureConfig& cfg);

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;  // inter-level difference, floored at a few ulps
  long long evaluations = 0;
  int level_reached = 0;
};

// Carries the best available result when refinement levels are exhausted.
class QuadratureConvergenceError : public ConvergenceError {
 public:
  QuadratureConvergenceError(const std::string& what, QuadratureResult partial)
      : ConvergenceError(what, partial.error_estimate), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

// Integrand on (0,1). Receives the abscissa together with its complement;
// both are exact offsets from their respective endpoints, so -ln x near x = 1
// can be computed as -log1p(-one_minus_x) without cancellation.
using Integrand01 = std::function<Complex(double x, double one_minus_x)>;

// Integrand on (0, inf); must decay exponentially at infinity and have at
// worst a logarithmic or inverse-square-root singularity at 0.
using HalflineIntegrand = std::function<Complex(double u)>;

// Integrand on (a,b), given the abscissa plus exact offsets from both ends.
using IntervalIntegrand =
    std::function<Complex(double x, double x_minus_a, double b_minus_x)>;

// Integrand defined for complex abscissae, parameterized by x together with
// -ln x on the analytic branch. Needed by transform_loglog: its substitution
// x = e^{-u/mu} walks into the complex plane for complex mu, where the
// principal log of the computed x wraps mod 2pi and would pick the wrong
// branch. The transform supplies -ln x = u/mu exactly.
using AnalyticIntegrand = std::function<Complex(Complex x, Complex neg_log_x)>;

// Restriction of an analytic integrand to the real axis: computes -ln x from
// whichever of (x, 1-x) is the accurate side.
Integrand01 on_real_axis(AnalyticIntegrand f);

// tanh-sinh rule on (0,1): x = (1 + tanh((pi/2) sinh t))/2, level L has
// step h = 2^{3-L}. Handles logarithmic and inverse-square-root endpoint
// singularities. Samples are reduced in a fixed order; results are
// bit-reproducible for a given config.
QuadratureResult integrate_01(const Integrand01& f, const QuadratureConfig& cfg = {});

// exp-sinh rule on (0, inf): u = exp((pi/2) sinh t), same level scheme.
QuadratureResult integrate_halfline(const HalflineIntegrand& g,
                                    const QuadratureConfig& cfg = {});

// Affine map of (a,b) onto (0,1) followed by integrate_01.
QuadratureResult integrate_interval(const IntervalIntegrand& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

// Substitution u = -mu ln x: returns g(u) = (1/mu) e^{-u/mu} f(e^{-u/mu}, ...)
// with integral_0^1 f dx = integral_0^inf g du. Requires Re(mu) > 0.
// For f(x) = ln(-ln x) x^{mu-1} this gives g(u) = (1/mu) e^{-u} ln(u/mu).
HalflineIntegrand transform_loglog(AnalyticIntegrand f, Complex mu);

}  // namespace loglab

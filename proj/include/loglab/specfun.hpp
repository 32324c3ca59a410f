#pragma once

#include <cstdint>

#include "loglab/errors.hpp"

namespace loglab {

// Controls evaluation of the Fourier-series operations below.
struct FourierEvalConfig {
  double tolerance = 1e-7;
  std::int64_t max_terms = 20000;
};

// Gamma(x) for x > 0. Lanczos rational approximation (g = 7, 9 coefficients),
// relative error well under 1e-13 on (0, 20].
double gamma_fn(double x);

// ln Gamma(x) for x > 0; Stirling branch for large x, so it stays valid where
// gamma_fn would overflow.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// zeta(s) for s > 1. Euler-Maclaurin: direct sum to N = 20 plus tail
// corrections with Bernoulli numbers through B10.
double zeta(double s);

// zeta'(s) for s > 1, the same Euler-Maclaurin scheme differentiated
// analytically term by term (no finite differencing of zeta).
double zeta_prime(double s);

// Truncated Laurent expansion of zeta about s = 1:
// 1/(s-1) + gamma [- gamma_1 (s-1) at order 1]. Requires 0 < |s-1| <= 0.5.
double zeta_laurent(double s, int order);

// Dirichlet eta(s) for s > 0. Uses (1 - 2^{1-s}) zeta(s) for s > 1 and the
// accelerated alternating series on (0, 1], keeping the removable zeta pole
// out of the code path.
double eta(double s);

// eta'(s) for s >= 1. At s = 1 returns gamma ln 2 - (ln 2)^2/2 composed from
// constants; for s > 1 evaluates
// eta'(s) = 2^{1-s} (ln 2) zeta(s) + (1 - 2^{1-s}) zeta'(s).
double eta_prime(double s);

// Dirichlet beta(s) = Sum_{k>=0} (-1)^k/(2k+1)^s for s > 0, by alternating
// series acceleration (the series is conditionally convergent for s <= 1).
double dirichlet_beta(double s);

// beta'(1/2) via the closed form
// (-(1/2) ln(2/pi) - pi/4 + gamma/2 + ln 2) * beta(1/2).
double dirichlet_beta_prime_half();

// Kummer's Fourier series for ln Gamma(x) on (0,1):
// (1/2) ln(pi/sin(pi x)) + (1/pi) Sum_{k>=1} (gamma + ln 2pi + ln k) sin(2k pi x)/k,
// with the oscillatory tail summed by phase acceleration.
double kummer_log_gamma(double x, const FourierEvalConfig& cfg = {});

// (1/pi) Sum_{k>=1} sin(2k pi x)/k, which equals 1/2 - x on (0,1).
double sawtooth_series(double x, const FourierEvalConfig& cfg = {});

}  // namespace loglab

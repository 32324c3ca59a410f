#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "loglab/errors.hpp"

namespace loglab {

using Complex = std::complex<double>;

// Coefficient sequence a_k, defined for k >= start_index. Rules must be pure
// and return finite values over the queried range.
struct TermGenerator {
  std::function<double(std::int64_t)> coefficient;
  std::int64_t start_index = 0;
};

enum class SeriesMethod { direct, alternating_accelerated, phase_accelerated };

struct SeriesResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;  // 10x the last transformation step
  std::int64_t terms_used = 1;
  SeriesMethod method = SeriesMethod::direct;
};

inline constexpr std::int64_t kDefaultTermCap = 10000;

// Sum_{j>=0} (-1)^j a_{k0+j} (leading term positive), for a_k decreasing to
// zero. Chebyshev-weighted acceleration after Cohen, Rodriguez Villegas and
// Zagier; converges geometrically, so conditionally convergent series cost
// tens of terms instead of millions.
SeriesResult sum_alternating(const TermGenerator& terms, double tol,
                             std::int64_t term_cap = kDefaultTermCap);

// Sum_{k>=k0} a_k e^{ik theta} for a_k of bounded variation decreasing to
// zero. Levin u-transformation on partial sums, condensed over half-period
// blocks when the reduced phase is small. Throws ConvergenceError when the
// phase gives no usable cancellation (theta = 0 mod 2pi with non-summable
// coefficients) or the estimate stalls above tol within the term cap.
SeriesResult sum_phase(const TermGenerator& terms, double theta, double tol,
                       std::int64_t term_cap = kDefaultTermCap);

// Named conditionally convergent series bound to registry identities.
// The coefficient families start at k = 1 where ln 1 = 0, so the leading
// coefficient is exactly gamma.

// Sum_{k>=1} (-1)^k e^{-ik lambda} (gamma + ln k)/k, lambda in (-pi, pi).
// Diverges at lambda = +-pi, where the alternation cancels the phase.
Complex gr_4_325_2_series(double lambda, double tol);

// Sum_{k>=1} (-1)^k (gamma + ln k) sin(kt)/k, t in (-pi, pi).
double gr_4_325_7_sine_series(double t, double tol);

// sqrt(pi) Sum_{k>=0} (-1)^{k+1} [ln(2k+1) + 2 ln 2 + gamma]/sqrt(2k+1).
double gr_4_325_10_series(double tol);

}  // namespace loglab

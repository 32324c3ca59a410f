#include "loglab/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "loglab/constants.hpp"

namespace loglab {

namespace {

constexpr double kPi = constants::pi;

double fetch(const TermGenerator& g, std::int64_t k) {
  double a = g.coefficient(k);
  if (!std::isfinite(a)) {
    throw DomainError("series coefficient a_" + std::to_string(k) + " is not finite");
  }
  return a;
}

// Algorithm 1 of Cohen, Rodriguez Villegas, Zagier, "Convergence acceleration
// of alternating series", Exp. Math. 9 (2000): sums Sum (-1)^k a_k, k = 0..,
// from the first n coefficients with Chebyshev weights.
double crvz(const std::vector<double>& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[static_cast<std::size_t>(k)];
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

// Levin u-transformation table (recursive numerator/denominator form), on
// complex partial sums. Remainder estimates omega_n = (beta + n) * term_n.
class LevinU {
 public:
  Complex next(Complex partial_sum, Complex omega) {
    constexpr double beta = 1.0;
    if (std::abs(omega) == 0.0) omega = Complex(1e-300, 0.0);
    const int n = n_;
    const double term0 = 1.0 / (beta + n);
    num_.push_back(partial_sum / omega * term0);
    den_.push_back(term0 / omega);
    if (n > 0) {
      double term = term0;
      const double ratio = (beta + n - 1) * term0;
      for (int j = 1; j <= n; ++j) {
        const double fact = (n - j + beta) * term;
        num_[static_cast<std::size_t>(n - j)] =
            num_[static_cast<std::size_t>(n - j + 1)] - fact * num_[static_cast<std::size_t>(n - j)];
        den_[static_cast<std::size_t>(n - j)] =
            den_[static_cast<std::size_t>(n - j + 1)] - fact * den_[static_cast<std::size_t>(n - j)];
        term *= ratio;
      }
    }
    ++n_;
    return num_[0] / den_[0];
  }

 private:
  std::vector<Complex> num_, den_;
  int n_ = 0;
};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Direct summation fallback for phases without cancellation. Converges only
// for absolutely convergent tails; the Cauchy check at doubling indices turns
// everything else into a clean failure.
SeriesResult sum_phase_direct(const TermGenerator& g, double theta, double tol,
                              std::int64_t cap) {
  Complex s = 0.0;
  Complex checkpoint = 0.0;
  std::int64_t next_check = 64;
  for (std::int64_t i = 0; i < cap; ++i) {
    const std::int64_t k = g.start_index + i;
    s += fetch(g, k) * std::polar(1.0, theta * static_cast<double>(k));
    if (i + 1 == next_check) {
      const double err = 10.0 * std::abs(s - checkpoint);
      if (i + 1 > 64 && err <= tol) {
        return {s, err, i + 1, SeriesMethod::direct};
      }
      checkpoint = s;
      next_check *= 2;
    }
  }
  throw ConvergenceError(
      "sum_phase: no cancellation at this phase and the raw series did not converge within " +
          std::to_string(cap) + " terms",
      std::abs(s));
}

}  // namespace

SeriesResult sum_alternating(const TermGenerator& g, double tol, std::int64_t term_cap) {
  if (!(tol > 0.0)) throw DomainError("sum_alternating: tol must be > 0");
  // Trial orders; the weight table overflows past n ~ 400, well beyond need.
  static constexpr int kLadder[] = {8, 12, 18, 27, 40, 60, 90, 135, 202, 303};
  std::vector<double> a;
  double prev = 0.0;
  bool have_prev = false;
  double best_err = std::numeric_limits<double>::infinity();
  for (int n : kLadder) {
    if (n > term_cap) break;
    while (static_cast<int>(a.size()) < n) {
      a.push_back(fetch(g, g.start_index + static_cast<std::int64_t>(a.size())));
    }
    const double cur = crvz(a, n);
    if (have_prev) {
      const double err = 10.0 * std::fabs(cur - prev);
      best_err = std::min(best_err, err);
      if (std::isfinite(err) && err <= tol) {
        return {Complex(cur, 0.0), err, n, SeriesMethod::alternating_accelerated};
      }
    }
    prev = cur;
    have_prev = true;
  }
  throw ConvergenceError("sum_alternating: error estimate stalled above tol within the term cap",
                         best_err);
}

SeriesResult sum_phase(const TermGenerator& g, double theta, double tol,
                       std::int64_t term_cap) {
  if (!(tol > 0.0)) throw DomainError("sum_phase: tol must be > 0");
  const double reduced = std::remainder(theta, 2.0 * kPi);  // (-pi, pi]
  std::int64_t block = 1;
  if (reduced != 0.0) {
    block = std::max<std::int64_t>(1, std::llround(kPi / std::fabs(reduced)));
  }
  if (reduced == 0.0 || block > 512) {
    return sum_phase_direct(g, theta, tol, term_cap);
  }

  // Condense over half-period blocks so the blocked sequence alternates in
  // sign, then extrapolate the blocked partial sums.
  LevinU levin;
  Complex s = 0.0;
  Complex block_sum = 0.0;
  Complex prev = 0.0;
  std::int64_t blocks = 0;
  double best_err = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < term_cap; ++i) {
    const std::int64_t k = g.start_index + i;
    block_sum += fetch(g, k) * std::polar(1.0, theta * static_cast<double>(k));
    if ((i + 1) % block != 0) continue;
    s += block_sum;
    const Complex val = levin.next(s, static_cast<double>(blocks + 1) * block_sum);
    block_sum = 0.0;
    ++blocks;
    if (blocks > 6 && finite(val)) {
      const double err = 10.0 * std::abs(val - prev);
      best_err = std::min(best_err, err);
      if (std::isfinite(err) && err <= tol) {
        return {val, err, i + 1, SeriesMethod::phase_accelerated};
      }
    }
    prev = val;
  }
  throw ConvergenceError("sum_phase: error estimate stalled above tol within the term cap",
                         best_err);
}

Complex gr_4_325_2_series(double lambda, double tol) {
  if (!(std::fabs(lambda) < kPi)) {
    throw DomainError("gr_4_325_2_series: lambda must lie in the open interval (-pi, pi); "
                      "the series diverges at lambda = +-pi");
  }
  // (-1)^k e^{-ik lambda} = e^{ik(pi - lambda)}.
  TermGenerator g{[](std::int64_t k) {
                    return (constants::euler_gamma + std::log(static_cast<double>(k))) /
                           static_cast<double>(k);
                  },
                  1};
  return sum_phase(g, kPi - lambda, tol).value;
}

double gr_4_325_7_sine_series(double t, double tol) {
  if (!(std::fabs(t) < kPi)) {
    throw DomainError("gr_4_325_7_sine_series: t must lie in the open interval (-pi, pi)");
  }
  if (t == 0.0) return 0.0;  // every sin(kt) term vanishes
  TermGenerator g{[](std::int64_t k) {
                    return (constants::euler_gamma + std::log(static_cast<double>(k))) /
                           static_cast<double>(k);
                  },
                  1};
  // (-1)^k sin(kt) is the imaginary part of e^{ik(pi + t)}.
  return sum_phase(g, kPi + t, tol).value.imag();
}

double gr_4_325_10_series(double tol) {
  TermGenerator g{[](std::int64_t k) {
                    const double m = 2.0 * static_cast<double>(k) + 1.0;
                    return (std::log(m) + 2.0 * constants::ln_two + constants::euler_gamma) /
                           std::sqrt(m);
                  },
                  0};
  // The stated series has leading sign (-1)^{0+1} = -1.
  const double sqrt_pi = std::sqrt(kPi);
  return -sqrt_pi * sum_alternating(g, tol / sqrt_pi).value.real();
}

}  // namespace loglab

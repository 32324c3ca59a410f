#include "loglab/specfun.hpp"

#include <cmath>
#include <string>

#include "loglab/constants.hpp"
#include "loglab/series.hpp"

namespace loglab {

namespace {

constexpr double kPi = constants::pi;
constexpr double kGamma = constants::euler_gamma;
constexpr double kLn2 = constants::ln_two;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be > 0, got " + std::to_string(x));
  }
}

// Lanczos coefficients, g = 7 (Godfrey's set, ~15 significant digits).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_series(double x) {
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
  return a;
}

// Bernoulli numbers B2..B14.
constexpr double kB2 = 1.0 / 6.0;
constexpr double kB4 = -1.0 / 30.0;
constexpr double kB6 = 1.0 / 42.0;
constexpr double kB8 = -1.0 / 30.0;
constexpr double kB10 = 5.0 / 66.0;
constexpr double kB12 = -691.0 / 2730.0;
constexpr double kB14 = 7.0 / 6.0;

// Tail of Kummer's series and the sawtooth: Im Sum c_k e^{ik theta} with
// theta = 2 pi x.
double fourier_tail(const TermGenerator& g, double x, const FourierEvalConfig& cfg,
                    const char* fn) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError(std::string(fn) + ": x must lie in the open interval (0, 1), got " +
                      std::to_string(x));
  }
  if (!(cfg.tolerance > 0.0)) throw DomainError(std::string(fn) + ": tolerance must be > 0");
  if (cfg.max_terms < 8) throw DomainError(std::string(fn) + ": max_terms must be >= 8");
  return sum_phase(g, 2.0 * kPi * x, cfg.tolerance, cfg.max_terms).value.imag();
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  const double z = x;
  const double t = z + kLanczosG - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * lanczos_series(z);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x < 13.0) {
    const double t = x + kLanczosG - 0.5;
    return (x - 0.5) * std::log(t) - t + std::log(std::sqrt(2.0 * kPi) * lanczos_series(x));
  }
  // Stirling series; first omitted term < 1e-18 at x = 13.
  const double w = 1.0 / (x * x);
  double tail = kB14 / (14.0 * 13.0);
  tail = tail * w + kB12 / (12.0 * 11.0);
  tail = tail * w + kB10 / (10.0 * 9.0);
  tail = tail * w + kB8 / (8.0 * 7.0);
  tail = tail * w + kB6 / (6.0 * 5.0);
  tail = tail * w + kB4 / (4.0 * 3.0);
  tail = tail * w + kB2 / (2.0 * 1.0);
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + tail / x;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double w = 1.0 / (x * x);
  double tail = kB14 / 14.0;
  tail = tail * w + kB12 / 12.0;
  tail = tail * w + kB10 / 10.0;
  tail = tail * w + kB8 / 8.0;
  tail = tail * w + kB6 / 6.0;
  tail = tail * w + kB4 / 4.0;
  tail = tail * w + kB2 / 2.0;
  return acc + std::log(x) - 0.5 / x - tail * w;
}

namespace {

constexpr int kZetaCutoff = 20;

// Euler-Maclaurin pieces shared by zeta and zeta_prime: with N = 20,
// zeta(s) = Sum_{k=1}^{N} k^-s + N^{1-s}/(s-1) - N^-s/2
//           + Sum_{j=1}^{5} B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1},
// first omitted term below 1e-17 for every s > 1.
constexpr double kEmFactor[5] = {kB2 / 2.0, kB4 / 24.0, kB6 / 720.0, kB8 / 40320.0,
                                 kB10 / 3628800.0};

}  // namespace

double zeta(double s) {
  if (!(s > 1.0)) {
    throw DomainError("zeta: s must be > 1, got " + std::to_string(s));
  }
  const double n = kZetaCutoff;
  double sum = 0.0;
  for (int k = 1; k <= kZetaCutoff; ++k) sum += std::pow(static_cast<double>(k), -s);
  const double npow = std::pow(n, -s);
  sum += n * npow / (s - 1.0) - 0.5 * npow;
  double rising = 1.0;  // s(s+1)...(s+2j-2)
  double scale = npow / n;
  for (int j = 1; j <= 5; ++j) {
    rising *= (j == 1) ? s : (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
    scale *= (j == 1) ? 1.0 : 1.0 / (n * n);
    sum += kEmFactor[j - 1] * rising * scale;
  }
  return sum;
}

double zeta_prime(double s) {
  if (!(s > 1.0)) {
    throw DomainError("zeta_prime: s must be > 1, got " + std::to_string(s));
  }
  const double n = kZetaCutoff;
  const double ln_n = std::log(n);
  double sum = 0.0;
  for (int k = 2; k <= kZetaCutoff; ++k) {
    sum -= std::log(static_cast<double>(k)) * std::pow(static_cast<double>(k), -s);
  }
  const double npow = std::pow(n, -s);
  // d/ds [N^{1-s}/(s-1)] and d/ds [-N^-s/2]
  sum += -ln_n * n * npow / (s - 1.0) - n * npow / ((s - 1.0) * (s - 1.0));
  sum += 0.5 * ln_n * npow;
  double rising = 1.0;
  double dlog = 0.0;  // Sum 1/(s+i) over the rising factors
  double scale = npow / n;
  for (int j = 1; j <= 5; ++j) {
    if (j == 1) {
      rising = s;
      dlog = 1.0 / s;
    } else {
      rising *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
      dlog += 1.0 / (s + 2.0 * j - 3.0) + 1.0 / (s + 2.0 * j - 2.0);
      scale /= n * n;
    }
    sum += kEmFactor[j - 1] * rising * scale * (dlog - ln_n);
  }
  return sum;
}

double zeta_laurent(double s, int order) {
  if (order != 0 && order != 1) {
    throw DomainError("zeta_laurent: order must be 0 or 1");
  }
  const double d = s - 1.0;
  if (d == 0.0) throw DomainError("zeta_laurent: pole at s = 1");
  if (!(std::fabs(d) <= 0.5)) {
    throw DomainError("zeta_laurent: requires |s - 1| <= 0.5, got s = " + std::to_string(s));
  }
  double v = 1.0 / d + kGamma;
  if (order == 1) v -= constants::stieltjes_1 * d;
  return v;
}

double eta(double s) {
  if (!(s > 0.0)) {
    throw DomainError("eta: s must be > 0, got " + std::to_string(s));
  }
  if (s > 1.0) return (1.0 - std::pow(2.0, 1.0 - s)) * zeta(s);
  TermGenerator g{[s](std::int64_t k) { return std::pow(static_cast<double>(k), -s); }, 1};
  return sum_alternating(g, 1e-13).value.real();
}

double eta_prime(double s) {
  if (!(s >= 1.0)) {
    throw DomainError("eta_prime: s must be >= 1, got " + std::to_string(s));
  }
  if (s == 1.0) return kGamma * kLn2 - 0.5 * kLn2 * kLn2;
  const double p = std::pow(2.0, 1.0 - s);
  return p * kLn2 * zeta(s) + (1.0 - p) * zeta_prime(s);
}

double dirichlet_beta(double s) {
  if (!(s > 0.0)) {
    throw DomainError("dirichlet_beta: s must be > 0, got " + std::to_string(s));
  }
  TermGenerator g{[s](std::int64_t k) {
                    return std::pow(2.0 * static_cast<double>(k) + 1.0, -s);
                  },
                  0};
  return sum_alternating(g, 1e-12).value.real();
}

double dirichlet_beta_prime_half() {
  const double factor = -0.5 * std::log(2.0 / kPi) - kPi / 4.0 + kGamma / 2.0 + kLn2;
  return factor * dirichlet_beta(0.5);
}

double kummer_log_gamma(double x, const FourierEvalConfig& cfg) {
  TermGenerator g{[](std::int64_t k) {
                    return (kGamma + std::log(2.0 * kPi) + std::log(static_cast<double>(k))) /
                           static_cast<double>(k);
                  },
                  1};
  const double tail = fourier_tail(g, x, cfg, "kummer_log_gamma");
  return 0.5 * std::log(kPi / std::sin(kPi * x)) + tail / kPi;
}

double sawtooth_series(double x, const FourierEvalConfig& cfg) {
  TermGenerator g{[](std::int64_t k) { return 1.0 / static_cast<double>(k); }, 1};
  return fourier_tail(g, x, cfg, "sawtooth_series") / kPi;
}

}  // namespace loglab

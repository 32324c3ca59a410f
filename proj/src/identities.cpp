#include "loglab/identities.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "loglab/constants.hpp"
#include "loglab/series.hpp"
#include "loglab/specfun.hpp"

namespace loglab {

namespace {

constexpr double kPi = constants::pi;
constexpr double kGamma = constants::euler_gamma;

// x^{mu-1} = e^{-(mu-1) (-ln x)}; the caller supplies -ln x on the branch
// that analytically continues the real integrand.
Complex power_mu_minus_1(Complex neg_log_x, Complex mu) {
  return std::exp((1.0 - mu) * neg_log_x);
}

double real_param(const Params& p, const std::string& name) {
  return p.at(name).real();
}

struct Entry {
  IdentitySpec spec;
  std::function<AnalyticIntegrand(const Params&)> integrand01;
  std::function<IntervalIntegrand(const Params&)> integrand_interval;
  std::function<Complex(const Params&)> closed;
  std::function<Complex(const Params&, double)> series;
  std::optional<ConsistencyPair> pair;
};

// GR-4.325.7 closed form. Near t = 0 the quotient by sin t is the 0/0 limit
// case; below |t| = 1e-3 switch to the even Taylor branch
// c0 + c2 t^2, c0 = (ln 2pi + psi(1/2))/2, c2 = psi''(1/2)/(48 pi^2) + c0/... ,
// with psi''(1/2) from a central second difference of digamma. Direct
// evaluation at |t| = 1e-3 has already lost ~3 digits to cancellation.
double gr_4_325_7_closed(double t) {
  static const double c0 = 0.5 * (std::log(2.0 * kPi) + digamma(0.5));
  static const double c2 = [] {
    const double h = 1e-3;
    const double psi2 = (digamma(0.5 + h) - 2.0 * digamma(0.5) + digamma(0.5 - h)) / (h * h);
    return psi2 / (48.0 * kPi * kPi) + (std::log(2.0 * kPi) + digamma(0.5)) / 12.0;
  }();
  if (std::fabs(t) < 1e-3) return c0 + c2 * t * t;
  const double tau = t / (2.0 * kPi);
  const double num = (t / kPi) * std::log(2.0 * kPi) + log_gamma(0.5 + tau) - log_gamma(0.5 - tau);
  return kPi / (2.0 * std::sin(t)) * num;
}

IntervalIntegrand make_vardi_integrand() {
  // ln ln tan x on (pi/4, pi/2). Double rounding of x alone cannot represent
  // points near pi/4, so the kernel works from the exact endpoint offsets:
  //   tan(pi/4 + d) = (1 + tan d)/(1 - tan d),  ln tan = log1p(t) - log1p(-t)
  //   near pi/2:     ln tan(pi/2 - e) = -ln tan e.
  return [](double /*x*/, double x_minus_a, double b_minus_x) -> Complex {
    double ln_tan;
    if (x_minus_a <= kPi / 8.0) {
      const double t = std::tan(x_minus_a);
      ln_tan = std::log1p(t) - std::log1p(-t);
    } else {
      ln_tan = -std::log(std::tan(b_minus_x));
    }
    return Complex(std::log(ln_tan), 0.0);
  };
}

std::vector<Entry> build_registry() {
  std::vector<Entry> reg;
  const Interval unit{0.0, 1.0};
  const ParamSpec lambda_spec{"lambda", ParamKind::real_open_interval, -kPi, kPi};
  const ParamSpec t_spec{"t", ParamKind::real_open_interval, -kPi, kPi};
  const ParamSpec mu_spec{"mu", ParamKind::complex_right_half_plane};
  const ParamSpec x_spec{"x", ParamKind::real_open_interval, 0.0, 1.0};

  // GR-4.229.7: integral over (pi/4, pi/2) of ln ln tan x; Vardi's integral.
  {
    Entry e;
    e.spec = {"GR-4.229.7",
              "int_{pi/4}^{pi/2} ln ln tan x dx = (pi/2) ln(sqrt(2pi) G(3/4)/G(1/4))",
              {},
              ValueKind::real,
              Interval{kPi / 4.0, kPi / 2.0},
              false};
    e.integrand_interval = [](const Params&) { return make_vardi_integrand(); };
    e.closed = [](const Params&) {
      return Complex(kPi / 2.0 *
                     std::log(std::sqrt(2.0 * kPi) * gamma_fn(0.75) / gamma_fn(0.25)));
    };
    e.pair = ConsistencyPair{"GR-4.325.4", {}};
    reg.push_back(std::move(e));
  }
  // GR-4.325.1: 1/(1+x); the lambda = 0 slice of GR-4.325.2.
  {
    Entry e;
    e.spec = {"GR-4.325.1",
              "int_0^1 ln(-ln x)/(1+x) dx = -(ln 2)^2/2",
              {},
              ValueKind::real,
              unit,
              true};
    e.integrand01 = [](const Params&) -> AnalyticIntegrand {
      return [](Complex x, Complex nl) { return std::log(nl) / (1.0 + x); };
    };
    e.closed = [](const Params&) {
      return Complex(-0.5 * constants::ln_two * constants::ln_two);
    };
    e.series = [](const Params&, double tol) { return gr_4_325_2_series(0.0, tol); };
    e.pair = ConsistencyPair{"GR-4.325.2", {{"lambda", Complex(0.0)}}};
    reg.push_back(std::move(e));
  }
  // GR-4.325.2: 1/(x+e^{i lambda}); the right-hand side IS the series.
  {
    Entry e;
    e.spec = {"GR-4.325.2",
              "int_0^1 ln(-ln x)/(x+e^{i lambda}) dx = sum (-1)^k e^{-ik lambda}(gamma+ln k)/k",
              {lambda_spec},
              ValueKind::complex,
              unit,
              true};
    e.integrand01 = [](const Params& p) -> AnalyticIntegrand {
      const Complex pole = std::polar(1.0, real_param(p, "lambda"));
      return [pole](Complex x, Complex nl) { return std::log(nl) / (x + pole); };
    };
    e.closed = [](const Params& p) { return gr_4_325_2_series(real_param(p, "lambda"), 1e-10); };
    e.series = [](const Params& p, double tol) {
      return gr_4_325_2_series(real_param(p, "lambda"), tol);
    };
    reg.push_back(std::move(e));
  }
  // GR-4.325.3: 1/(1+x)^2; the t -> 0 limit of GR-4.325.7.
  {
    Entry e;
    e.spec = {"GR-4.325.3",
              "int_0^1 ln(-ln x)/(1+x)^2 dx = (ln(pi/2) - gamma)/2",
              {},
              ValueKind::real,
              unit,
              false};
    e.integrand01 = [](const Params&) -> AnalyticIntegrand {
      return [](Complex x, Complex nl) {
        const Complex d = 1.0 + x;
        return std::log(nl) / (d * d);
      };
    };
    e.closed = [](const Params&) {
      return Complex(0.5 * (std::log(kPi / 2.0) - kGamma));
    };
    e.pair = ConsistencyPair{"GR-4.325.7", {{"t", Complex(0.0)}}};
    reg.push_back(std::move(e));
  }
  // GR-4.325.4: 1/(1+x^2); equivalent to GR-4.229.7 under cot substitution.
  {
    Entry e;
    e.spec = {"GR-4.325.4",
              "int_0^1 ln(-ln x)/(1+x^2) dx = (pi/2) ln(sqrt(2pi) G(3/4)/G(1/4))",
              {},
              ValueKind::real,
              unit,
              false};
    e.integrand01 = [](const Params&) -> AnalyticIntegrand {
      return [](Complex x, Complex nl) { return std::log(nl) / (1.0 + x * x); };
    };
    e.closed = [](const Params&) {
      return Complex(kPi / 2.0 *
                     std::log(std::sqrt(2.0 * kPi) * gamma_fn(0.75) / gamma_fn(0.25)));
    };
    e.pair = ConsistencyPair{"GR-4.325.7", {{"t", Complex(kPi / 2.0)}}};
    reg.push_back(std::move(e));
  }
  // GR-4.325.5: 1/(1+x+x^2), the t = pi/3 slice.
  {
    Entry e;
    e.spec = {"GR-4.325.5",
              "int_0^1 ln(-ln x)/(1+x+x^2) dx = (pi/sqrt 3) ln((2pi)^{1/3} G(2/3)/G(1/3))",
              {},
              ValueKind::real,
              unit,
              false};
    e.integrand01 = [](const Params&) -> AnalyticIntegrand {
      return [](Complex x, Complex nl) { return std::log(nl) / (1.0 + x + x * x); };
    };
    e.closed = [](const Params&) {
      return Complex(kPi / std::sqrt(3.0) *
                     std::log(std::cbrt(2.0 * kPi) * gamma_fn(2.0 / 3.0) / gamma_fn(1.0 / 3.0)));
    };
    e.pair = ConsistencyPair{"GR-4.325.7", {{"t", Complex(kPi / 3.0)}}};
    reg.push_back(std::move(e));
  }
  // GR-4.325.6: 1/(1-x+x^2), the t = 2pi/3 slice, compressed with
  // G(1/6) G(5/6) = 2pi so only G(1/6) appears.
  {
    Entry e;
    e.spec = {"GR-4.325.6",
              "int_0^1 ln(-ln x)/(1-x+x^2) dx = (2pi/sqrt 3)((5/6) ln 2pi - ln G(1/6))",
              {},
              ValueKind::real,
              unit,
              false};
    e.integrand01 = [](const Params&) -> AnalyticIntegrand {
      return [](Complex x, Complex nl) { return std::log(nl) / (1.0 - x + x * x); };
    };
    e.closed = [](const Params&) {
      return Complex(2.0 * kPi / std::sqrt(3.0) *
                     (5.0 / 6.0 * std::log(2.0 * kPi) - log_gamma(1.0 / 6.0)));
    };
    e.pair = ConsistencyPair{"GR-4.325.7", {{"t", Complex(2.0 * kPi / 3.0)}}};
    reg.push_back(std::move(e));
  }
  // GR-4.325.7: the parametric family 1/(1+2x cos t+x^2).
  {
    Entry e;
    e.spec = {"GR-4.325.7",
              "int_0^1 ln(-ln x)/(1+2x cos t+x^2) dx = (pi/(2 sin t)) "
              "ln((2pi)^{t/pi} G(1/2+t/2pi)/G(1/2-t/2pi))",
              {t_spec},
              ValueKind::real,
              unit,
              true};
    e.integrand01 = [](const Params& p) -> AnalyticIntegrand {
      const double two_cos_t = 2.0 * std::cos(real_param(p, "t"));
      return [two_cos_t](Complex x, Complex nl) {
        return std::log(nl) / (1.0 + two_cos_t * x + x * x);
      };
    };
    e.closed = [](const Params& p) { return Complex(gr_4_325_7_closed(real_param(p, "t"))); };
    e.series = [](const Params& p, double tol) {
      // Sine-series route, S(t)/sin t; undefined at the t -> 0 limit point.
      const double t = real_param(p, "t");
      if (std::fabs(t) < 1e-3) {
        throw DomainError("GR-4.325.7 series route is 0/0 near t = 0");
      }
      const double s = std::sin(t);
      return Complex(gr_4_325_7_sine_series(t, tol * std::fabs(s)) / s);
    };
    reg.push_back(std::move(e));
  }
  // GR-4.325.8: x^{mu-1}, Re(mu) > 0.
  {
    Entry e;
    e.spec = {"GR-4.325.8",
              "int_0^1 ln(-ln x) x^{mu-1} dx = -(gamma + ln mu)/mu",
              {mu_spec},
              ValueKind::complex,
              unit,
              false};
    e.integrand01 = [](const Params& p) -> AnalyticIntegrand {
      const Complex mu = p.at("mu");
      return [mu](Complex, Complex nl) {
        return std::log(nl) * power_mu_minus_1(nl, mu);
      };
    };
    e.closed = [](const Params& p) {
      const Complex mu = p.at("mu");
      return -(kGamma + std::log(mu)) / mu;
    };
    reg.push_back(std::move(e));
  }
  // GR-4.325.10: 1/((1+x^2) sqrt(-ln x)).
  {
    Entry e;
    e.spec = {"GR-4.325.10",
              "int_0^1 ln(-ln x)/((1+x^2) sqrt(-ln x)) dx = "
              "-(ln sqrt(8/pi) + pi/4 + gamma/2) sqrt(pi) beta(1/2)",
              {},
              ValueKind::real,
              unit,
              true};
    e.integrand01 = [](const Params&) -> AnalyticIntegrand {
      return [](Complex x, Complex nl) {
        return std::log(nl) / ((1.0 + x * x) * std::sqrt(nl));
      };
    };
    e.closed = [](const Params&) {
      const double factor = std::log(std::sqrt(8.0 / kPi)) + kPi / 4.0 + kGamma / 2.0;
      return Complex(-factor * std::sqrt(kPi) * dirichlet_beta(0.5));
    };
    e.series = [](const Params&, double tol) { return Complex(gr_4_325_10_series(tol)); };
    reg.push_back(std::move(e));
  }
  // GR-4.325.11: x^{mu-1}/sqrt(-ln x), Re(mu) > 0.
  {
    Entry e;
    e.spec = {"GR-4.325.11",
              "int_0^1 ln(-ln x) x^{mu-1}/sqrt(-ln x) dx = -(gamma + ln 4mu) sqrt(pi/mu)",
              {mu_spec},
              ValueKind::complex,
              unit,
              false};
    e.integrand01 = [](const Params& p) -> AnalyticIntegrand {
      const Complex mu = p.at("mu");
      return [mu](Complex, Complex nl) {
        return std::log(nl) * power_mu_minus_1(nl, mu) / std::sqrt(nl);
      };
    };
    e.closed = [](const Params& p) {
      const Complex mu = p.at("mu");
      // ln(4 mu) = ln 4 + ln mu stays on the principal branch for Re(mu) > 0.
      return -(kGamma + 2.0 * constants::ln_two + std::log(mu)) * std::sqrt(kPi / mu);
    };
    reg.push_back(std::move(e));
  }
  // KUMMER-EQ6: Fourier sine series of ln Gamma vs ln Gamma itself.
  {
    Entry e;
    e.spec = {"KUMMER-EQ6",
              "ln G(x) = (1/2) ln(pi/sin pi x) + (1/pi) sum (gamma+ln 2pi+ln k) sin(2k pi x)/k",
              {x_spec},
              ValueKind::real,
              std::nullopt,
              true};
    e.closed = [](const Params& p) { return Complex(log_gamma(real_param(p, "x"))); };
    e.series = [](const Params& p, double tol) {
      return Complex(kummer_log_gamma(real_param(p, "x"), {tol, kDefaultTermCap * 2}));
    };
    reg.push_back(std::move(e));
  }
  // SAWTOOTH-EQ7: sine expansion of 1/2 - x.
  {
    Entry e;
    e.spec = {"SAWTOOTH-EQ7",
              "1/2 - x = (1/pi) sum sin(2k pi x)/k on (0,1)",
              {x_spec},
              ValueKind::real,
              std::nullopt,
              true};
    e.closed = [](const Params& p) { return Complex(0.5 - real_param(p, "x")); };
    e.series = [](const Params& p, double tol) {
      return Complex(sawtooth_series(real_param(p, "x"), {tol, kDefaultTermCap * 2}));
    };
    reg.push_back(std::move(e));
  }
  return reg;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = build_registry();
  return reg;
}

const Entry& entry(std::string_view id) {
  for (const Entry& e : registry()) {
    if (e.spec.id == id) return e;
  }
  throw DomainError("unknown identity id: " + std::string(id));
}

std::string schema_description(const ParamSpec& p) {
  std::ostringstream os;
  if (p.kind == ParamKind::real_open_interval) {
    os << p.name << ": real in the open interval (" << p.lo << ", " << p.hi << ")";
    if (p.lo == -kPi && p.hi == kPi) os << " = (-pi, pi)";
  } else {
    os << p.name << ": complex with Re(" << p.name << ") > 0";
  }
  return os.str();
}

}  // namespace

const std::vector<IdentitySpec>& list_identities() {
  static const std::vector<IdentitySpec> specs = [] {
    std::vector<IdentitySpec> v;
    for (const Entry& e : registry()) v.push_back(e.spec);
    return v;
  }();
  return specs;
}

const IdentitySpec& identity(std::string_view id) { return entry(id).spec; }

void validate_params(std::string_view id, const Params& params) {
  const IdentitySpec& spec = identity(id);
  for (const auto& [name, value] : params) {
    bool known = false;
    for (const ParamSpec& p : spec.param_schema) known |= (p.name == name);
    if (!known) {
      throw DomainError(std::string(id) + " does not take a parameter named '" + name + "'");
    }
  }
  for (const ParamSpec& p : spec.param_schema) {
    auto it = params.find(p.name);
    if (it == params.end()) {
      throw DomainError(std::string(id) + " requires parameter " + schema_description(p));
    }
    const Complex v = it->second;
    if (p.kind == ParamKind::real_open_interval) {
      if (v.imag() != 0.0 || !(v.real() > p.lo && v.real() < p.hi)) {
        std::ostringstream os;
        os << id << ": parameter '" << p.name << "' = " << v.real();
        if (v.imag() != 0.0) os << "+" << v.imag() << "i";
        os << " outside its domain; expected " << schema_description(p);
        throw DomainError(os.str());
      }
    } else {
      if (!(v.real() > 0.0)) {
        std::ostringstream os;
        os << id << ": parameter '" << p.name << "' must satisfy Re(" << p.name << ") > 0";
        throw DomainError(os.str());
      }
    }
  }
}

Complex integrand(std::string_view id, const Params& params, double x, double one_minus_x) {
  const Entry& e = entry(id);
  validate_params(id, params);
  if (e.integrand01) {
    return on_real_axis(e.integrand01(params))(x, one_minus_x);
  }
  if (e.integrand_interval) {
    const Interval dom = *e.spec.integration_domain;
    return e.integrand_interval(params)(x, x - dom.lo, one_minus_x);
  }
  throw DomainError(std::string(id) + " has no integrand (series identity)");
}

Complex closed_form(std::string_view id, const Params& params) {
  const Entry& e = entry(id);
  validate_params(id, params);
  return e.closed(params);
}

Complex series_form(std::string_view id, const Params& params, double tol) {
  const Entry& e = entry(id);
  validate_params(id, params);
  if (!e.series) throw DomainError(std::string(id) + " declares no series form");
  return e.series(params, tol);
}

std::optional<ConsistencyPair> consistency_pair(std::string_view id) { return entry(id).pair; }

AnalyticIntegrand make_integrand(std::string_view id, const Params& params) {
  const Entry& e = entry(id);
  validate_params(id, params);
  if (!e.integrand01) {
    throw DomainError(std::string(id) + " has no (0,1) integrand");
  }
  return e.integrand01(params);
}

IntervalIntegrand make_interval_integrand(std::string_view id, const Params& params) {
  const Entry& e = entry(id);
  validate_params(id, params);
  if (!e.integrand_interval) {
    throw DomainError(std::string(id) + " has no interval integrand");
  }
  return e.integrand_interval(params);
}

}  // namespace loglab

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loglab/quadrature.hpp"

namespace loglab {

// Parameter bindings for one identity; complex values with zero imaginary
// part stand in for reals. Ordered map keeps reports deterministic.
using Params = std::map<std::string, Complex>;

enum class ValueKind { real, complex };

enum class ParamKind {
  real_open_interval,        // value real, lo < v < hi
  complex_right_half_plane,  // Re(v) > 0
};

struct ParamSpec {
  std::string name;
  ParamKind kind;
  double lo = 0.0;
  double hi = 0.0;
};

struct Interval {
  double lo;
  double hi;
};

// One registry entry: a Gradshteyn-Ryzhik doubly logarithmic integral (or
// one of the two Fourier-series identities, which carry no integral).
struct IdentitySpec {
  std::string id;
  std::string summary;  // human-oriented one-liner for `list`
  std::vector<ParamSpec> param_schema;
  ValueKind value_kind = ValueKind::real;
  std::optional<Interval> integration_domain;
  bool has_series_form = false;
};

// The specialization relation exercised by cross-check tests: this identity
// equals `other_id` evaluated at `params`.
struct ConsistencyPair {
  std::string other_id;
  Params params;
};

// All 13 entries, ordered by G&R number (GR-4.229.7 first), then the two
// series identities. Built once, immutable.
const std::vector<IdentitySpec>& list_identities();

// Lookup; throws DomainError for unknown ids.
const IdentitySpec& identity(std::string_view id);

// Rejects missing/extra names and out-of-domain values with a message that
// quotes the parameter's valid domain.
void validate_params(std::string_view id, const Params& params);

// Integrand value at an interior abscissa. `one_minus_x` is the exact offset
// from the right endpoint (1 - x on (0,1) identities, b - x otherwise) and
// drives the log1p-style evaluation of -ln x near x = 1.
Complex integrand(std::string_view id, const Params& params, double x, double one_minus_x);

// Right-hand side, composed from special functions and series only - never
// from quadrature. GR-4.325.2 has no elementary closed form; its slot
// delegates to the accelerated series.
Complex closed_form(std::string_view id, const Params& params);

// Accelerated series form, for entries that declare one.
Complex series_form(std::string_view id, const Params& params, double tol);

std::optional<ConsistencyPair> consistency_pair(std::string_view id);

// Integrand factories for the quadrature routes. The analytic form accepts
// complex abscissae so it can ride through transform_loglog.
AnalyticIntegrand make_integrand(std::string_view id, const Params& params);
IntervalIntegrand make_interval_integrand(std::string_view id, const Params& params);

}  // namespace loglab

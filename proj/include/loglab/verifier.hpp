#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loglab/identities.hpp"
#include "loglab/quadrature.hpp"

namespace loglab {

enum class Verdict { pass, fail, skipped };

// One identity at one parameter point, checked up to three ways:
// quadrature (q), closed form (c), series (s). A comparison slot is populated
// only when both of its operands exist; verdict is pass iff every populated
// error is within its applied threshold. `skipped` marks points with no
// populated comparison at all.
struct VerificationResult {
  std::string identity_id;
  Params params;
  std::optional<Complex> lhs_quadrature;
  Complex rhs_closed{0.0, 0.0};
  std::optional<Complex> series_value;
  std::optional<double> abs_error_qc;
  std::optional<double> abs_error_qs;
  std::optional<double> abs_error_cs;
  double threshold_qc = 0.0;      // applied to the quadrature comparisons
  double threshold_series = 0.0;  // applied to cs (series routes carry weaker guarantees)
  long long evaluations = 0;      // integrand evaluations across all quadrature routes
  double elapsed_seconds = 0.0;
  Verdict verdict = Verdict::skipped;
  std::string cause;  // populated on failure (convergence breakdown etc.)
};

struct SweepGrid {
  std::string parameter;
  std::vector<Complex> values;  // all strictly inside the identity's domain
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

struct RunConfig {
  std::string command;
  std::optional<std::string> identity_id;
  Params params;
  QuadratureConfig quadrature;
  std::optional<double> threshold;  // overrides the per-identity defaults
  std::string output_format = "json";
};

struct RunReport {
  RunConfig run_config;
  std::vector<VerificationResult> results;
  Summary summary;
};

// Default acceptance threshold for quadrature-vs-closed: 1e-9 for the fixed
// real identities, 1e-8 for the parametric families (GR-4.325.7/10/11),
// 1e-8 for GR-4.325.2 loosened to 1e-6 once |lambda| >= 0.9 pi, 1e-6/1e-8
// for the two Fourier identities.
double default_threshold(std::string_view id, const Params& params);

// Three-way check of one identity at one parameter point. Quadrature and
// series convergence failures become verdict = fail with the cause recorded;
// invalid ids or parameters throw DomainError before any numerics run.
// GR-4.325.10 runs both quadrature routes (direct tanh-sinh and the half-line
// substitution) and must pass on both; abs_error_qc reports the worse one.
VerificationResult verify(std::string_view id, const Params& params,
                          const QuadratureConfig& quad_cfg, double threshold);

// One result per grid point, in grid order; per-point failures are recorded
// and the sweep always completes.
std::vector<VerificationResult> sweep(std::string_view id, const SweepGrid& grid,
                                      const QuadratureConfig& quad_cfg, double threshold);

// The identity's default verification grid (the acceptance sweeps for the
// parametric entries, the single empty point otherwise).
std::vector<Params> default_grid(std::string_view id);

// Every registry identity over its default grid. `threshold_override`
// replaces the per-identity default thresholds when set.
RunReport full_matrix(const QuadratureConfig& quad_cfg,
                      std::optional<double> threshold_override = std::nullopt);

Summary summarize(const std::vector<VerificationResult>& results);

}  // namespace loglab

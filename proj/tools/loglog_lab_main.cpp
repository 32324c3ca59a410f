// loglog-lab: verify the doubly logarithmic Gradshteyn-Ryzhik integral
// identities three ways (quadrature / closed form / accelerated series) and
// emit machine-readable agreement reports.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loglab/report.hpp"
#include "loglab/verifier.hpp"

namespace {

using loglab::Complex;
using loglab::Params;

// Accepts "2", "-1.5e-3", "1+2i", "2-3i", "0.5i", "i", "1-i".
std::optional<Complex> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += (c == 'j') ? 'i' : c;
  }
  if (s.empty()) return std::nullopt;
  const bool has_i = s.back() == 'i';
  if (has_i) s.pop_back();
  auto to_double = [](const std::string& str, double* out) {
    if (str.empty() || str == "+") { *out = 1.0; return true; }
    if (str == "-") { *out = -1.0; return true; }
    char* end = nullptr;
    *out = std::strtod(str.c_str(), &end);
    return end == str.c_str() + str.size();
  };
  if (!has_i) {
    double re;
    if (!to_double(s, &re) || s.empty()) return std::nullopt;
    return Complex(re, 0.0);
  }
  // Split a trailing imaginary part off at the last sign not following an
  // exponent marker.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0, im = 0.0;
  if (split == std::string::npos) {
    if (!to_double(s, &im)) return std::nullopt;
    return Complex(0.0, im);
  }
  if (!to_double(s.substr(0, split), &re) || !to_double(s.substr(split), &im)) {
    return std::nullopt;
  }
  return Complex(re, im);
}

struct Options {
  std::string id;
  std::vector<std::string> params;
  double abs_tol = 1e-12;
  int max_level = 10;
  std::optional<double> threshold;
  std::string format = "json";
  std::string output_path;
};

int parse_param_list(const Options& opt, Params* single, loglab::SweepGrid* grid) {
  // verify: each --param names a distinct parameter. sweep: repeated values
  // of one parameter form the grid.
  for (const std::string& p : opt.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: --param expects name=value, got '" << p << "'\n";
      return 2;
    }
    const std::string name = p.substr(0, eq);
    const auto value = parse_complex(p.substr(eq + 1));
    if (!value) {
      std::cerr << "error: cannot parse value in '" << p << "' (complex values use a+bi)\n";
      return 2;
    }
    if (single) {
      if (single->count(name)) {
        std::cerr << "error: duplicate --param " << name << "\n";
        return 2;
      }
      (*single)[name] = *value;
    } else {
      if (!grid->parameter.empty() && grid->parameter != name) {
        std::cerr << "error: sweep grids vary a single parameter (got " << grid->parameter
                  << " and " << name << ")\n";
        return 2;
      }
      grid->parameter = name;
      grid->values.push_back(*value);
    }
  }
  return 0;
}

void print_schema(const std::string& id) {
  try {
    const auto& spec = loglab::identity(id);
    std::cerr << "  " << spec.id << ": " << spec.summary << "\n";
    if (spec.param_schema.empty()) {
      std::cerr << "  parameters: none\n";
      return;
    }
    std::cerr << "  parameters:\n";
    for (const auto& p : spec.param_schema) {
      if (p.kind == loglab::ParamKind::real_open_interval) {
        std::cerr << "    " << p.name << ": real in the open interval (" << p.lo << ", " << p.hi
                  << ")\n";
      } else {
        std::cerr << "    " << p.name << ": complex with Re > 0 (format a+bi)\n";
      }
    }
  } catch (const loglab::DomainError&) {
    std::cerr << "  known identities:\n";
    for (const auto& spec : loglab::list_identities()) std::cerr << "    " << spec.id << "\n";
  }
}

int emit(const loglab::RunReport& report, const Options& opt) {
  std::string text;
  if (opt.format == "json") {
    text = loglab::to_json(report);
  } else if (opt.format == "markdown") {
    text = loglab::to_markdown(report);
  } else {
    text = loglab::to_csv(report);
  }
  if (opt.output_path.empty()) {
    std::cout << text;
  } else {
    loglab::write_file_atomic(opt.output_path, text);
  }
  return report.summary.fail > 0 ? 1 : 0;
}

std::string list_text(const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << "[\n";
    const auto& ids = loglab::list_identities();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto& s = ids[i];
      os << "  {\"id\": \"" << s.id << "\", \"summary\": \"" << s.summary << "\", \"kind\": \""
         << (s.value_kind == loglab::ValueKind::real ? "real" : "complex")
         << "\", \"has_series_form\": " << (s.has_series_form ? "true" : "false") << "}"
         << (i + 1 < ids.size() ? "," : "") << "\n";
    }
    os << "]\n";
  } else if (format == "markdown") {
    os << "| id | kind | series | statement |\n|----|------|--------|-----------|\n";
    for (const auto& s : loglab::list_identities()) {
      os << "| " << s.id << " | " << (s.value_kind == loglab::ValueKind::real ? "real" : "complex")
         << " | " << (s.has_series_form ? "yes" : "no") << " | " << s.summary << " |\n";
    }
  } else {
    os << "id,kind,has_series_form,statement\n";
    for (const auto& s : loglab::list_identities()) {
      os << s.id << "," << (s.value_kind == loglab::ValueKind::real ? "real" : "complex") << ","
         << (s.has_series_form ? "true" : "false") << ",\"" << s.summary << "\"\n";
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification lab for the doubly logarithmic integrals of the "
               "Gradshteyn-Ryzhik table"};
  app.require_subcommand(1);

  Options opt;
  auto add_shared = [&](CLI::App* cmd, bool with_id) {
    if (with_id) cmd->add_option("--id", opt.id, "identity id, e.g. GR-4.325.7")->required();
    cmd->add_option("--param", opt.params, "parameter binding name=value (complex as a+bi)");
    cmd->add_option("--abs-tol", opt.abs_tol, "quadrature absolute error target");
    cmd->add_option("--max-level", opt.max_level, "quadrature refinement cap (3..12)");
    cmd->add_option("--threshold", opt.threshold, "acceptance threshold override");
    cmd->add_option("--format", opt.format, "json | markdown | csv")
        ->check(CLI::IsMember({"json", "markdown", "csv"}));
    cmd->add_option("--output,-o", opt.output_path, "write report to a file (atomic)");
  };
  CLI::App* cmd_list = app.add_subcommand("list", "list the identity registry");
  cmd_list->add_option("--format", opt.format, "json | markdown | csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}));
  cmd_list->add_option("--output,-o", opt.output_path, "write to a file");
  CLI::App* cmd_verify = app.add_subcommand("verify", "verify one identity at one point");
  add_shared(cmd_verify, true);
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "verify one identity over a grid");
  add_shared(cmd_sweep, true);
  CLI::App* cmd_all = app.add_subcommand("all", "run the full verification matrix");
  add_shared(cmd_all, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  // Environment override, validated like the flag.
  if (const char* env = std::getenv("LOGLOG_LAB_MAX_LEVEL")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 3 || v > 12) {
      std::cerr << "error: LOGLOG_LAB_MAX_LEVEL must be an integer in [3, 12], got '" << env
                << "'\n";
      return 2;
    }
    if (!cmd_verify->count("--max-level") && !cmd_sweep->count("--max-level") &&
        !cmd_all->count("--max-level")) {
      opt.max_level = static_cast<int>(v);
    }
  }

  loglab::QuadratureConfig quad_cfg;
  quad_cfg.abs_tol = opt.abs_tol;
  quad_cfg.max_level = opt.max_level;

  try {
    loglab::validate(quad_cfg);
    if (cmd_list->parsed()) {
      const std::string text = list_text(opt.format);
      if (opt.output_path.empty()) {
        std::cout << text;
      } else {
        loglab::write_file_atomic(opt.output_path, text);
      }
      return 0;
    }

    loglab::RunReport report;
    report.run_config.quadrature = quad_cfg;
    report.run_config.threshold = opt.threshold;
    report.run_config.output_format = opt.format;

    if (cmd_verify->parsed()) {
      Params params;
      if (int rc = parse_param_list(opt, &params, nullptr)) return rc;
      loglab::validate_params(opt.id, params);
      report.run_config.command = "verify";
      report.run_config.identity_id = opt.id;
      report.run_config.params = params;
      const double threshold =
          opt.threshold.value_or(loglab::default_threshold(opt.id, params));
      report.results.push_back(loglab::verify(opt.id, params, quad_cfg, threshold));
    } else if (cmd_sweep->parsed()) {
      loglab::SweepGrid grid;
      if (int rc = parse_param_list(opt, nullptr, &grid)) return rc;
      report.run_config.command = "sweep";
      report.run_config.identity_id = opt.id;
      if (grid.values.empty()) {
        // No explicit grid: use the identity's default verification grid.
        for (const Params& p : loglab::default_grid(opt.id)) {
          const double threshold =
              opt.threshold.value_or(loglab::default_threshold(opt.id, p));
          report.results.push_back(loglab::verify(opt.id, p, quad_cfg, threshold));
        }
      } else {
        const double threshold = opt.threshold.value_or(
            loglab::default_threshold(opt.id, {{grid.parameter, grid.values.front()}}));
        report.results = loglab::sweep(opt.id, grid, quad_cfg, threshold);
      }
    } else {
      report = loglab::full_matrix(quad_cfg, opt.threshold);
      report.run_config.output_format = opt.format;
      report.run_config.threshold = opt.threshold;
    }
    report.summary = loglab::summarize(report.results);
    return emit(report, opt);
  } catch (const loglab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!opt.id.empty()) print_schema(opt.id);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

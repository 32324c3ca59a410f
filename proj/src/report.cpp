#include "loglab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace loglab {

namespace {

using nlohmann::json;

bool value_kind_real(const std::string& id) {
  return identity(id).value_kind == ValueKind::real;
}

bool param_kind_real(const std::string& id, const std::string& name) {
  for (const ParamSpec& p : identity(id).param_schema) {
    if (p.name == name) return p.kind == ParamKind::real_open_interval;
  }
  return true;
}

std::string complex_json(Complex z) {
  return "{\"re\": " + format_double(z.real()) + ", \"im\": " + format_double(z.imag()) + "}";
}

std::string value_json(Complex z, bool as_real) {
  return as_real ? format_double(z.real()) : complex_json(z);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string params_json(const std::string& id, const Params& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + escape(name) + "\": " + value_json(value, param_kind_real(id, name));
  }
  return out + "}";
}

std::string result_json(const VerificationResult& r, bool include_elapsed,
                        const std::string& indent) {
  const bool as_real = value_kind_real(r.identity_id);
  std::ostringstream os;
  os << indent << "{\n";
  const std::string in = indent + "  ";
  os << in << "\"identity_id\": \"" << escape(r.identity_id) << "\",\n";
  os << in << "\"params\": " << params_json(r.identity_id, r.params) << ",\n";
  if (r.lhs_quadrature) {
    os << in << "\"lhs_quadrature\": " << value_json(*r.lhs_quadrature, as_real) << ",\n";
  }
  os << in << "\"rhs_closed\": " << value_json(r.rhs_closed, as_real) << ",\n";
  if (r.series_value) {
    os << in << "\"series_value\": " << value_json(*r.series_value, as_real) << ",\n";
  }
  if (r.abs_error_qc) os << in << "\"abs_error_qc\": " << format_double(*r.abs_error_qc) << ",\n";
  if (r.abs_error_qs) os << in << "\"abs_error_qs\": " << format_double(*r.abs_error_qs) << ",\n";
  if (r.abs_error_cs) os << in << "\"abs_error_cs\": " << format_double(*r.abs_error_cs) << ",\n";
  os << in << "\"threshold_qc\": " << format_double(r.threshold_qc) << ",\n";
  os << in << "\"threshold_series\": " << format_double(r.threshold_series) << ",\n";
  os << in << "\"evaluations\": " << r.evaluations << ",\n";
  if (include_elapsed) {
    os << in << "\"elapsed\": " << format_double(r.elapsed_seconds) << ",\n";
  }
  if (!r.cause.empty()) os << in << "\"cause\": \"" << escape(r.cause) << "\",\n";
  os << in << "\"verdict\": \"" << to_string(r.verdict) << "\"\n";
  os << indent << "}";
  return os.str();
}

std::string params_text(const VerificationResult& r) {
  if (r.params.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : r.params) {
    if (!first) os << "; ";
    first = false;
    os << name << "=" << format_double(value.real());
    if (value.imag() != 0.0) os << "+" << format_double(value.imag()) << "i";
  }
  return os.str();
}

std::string value_text(Complex z, bool as_real) {
  char buf[80];
  if (as_real) {
    std::snprintf(buf, sizeof buf, "%.10g", z.real());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

double worst_error(const VerificationResult& r) {
  double w = 0.0;
  for (const auto& e : {r.abs_error_qc, r.abs_error_qs, r.abs_error_cs}) {
    if (e) w = std::max(w, *e);
  }
  return w;
}

Complex parse_value(const json& v) {
  if (v.is_object()) return {v.at("re").get<double>(), v.at("im").get<double>()};
  return {v.get<double>(), 0.0};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skipped";
  }
}

std::string to_json(const RunReport& report, bool include_elapsed) {
  std::ostringstream os;
  os << "{\n  \"run_config\": {\n";
  os << "    \"command\": \"" << escape(report.run_config.command) << "\",\n";
  if (report.run_config.identity_id) {
    os << "    \"identity_id\": \"" << escape(*report.run_config.identity_id) << "\",\n";
    os << "    \"params\": "
       << params_json(*report.run_config.identity_id, report.run_config.params) << ",\n";
  }
  os << "    \"abs_tol\": " << format_double(report.run_config.quadrature.abs_tol) << ",\n";
  os << "    \"max_level\": " << report.run_config.quadrature.max_level << ",\n";
  os << "    \"clip_epsilon\": " << format_double(report.run_config.quadrature.clip_epsilon)
     << ",\n";
  if (report.run_config.threshold) {
    os << "    \"threshold\": " << format_double(*report.run_config.threshold) << ",\n";
  }
  os << "    \"output_format\": \"" << escape(report.run_config.output_format) << "\"\n";
  os << "  },\n  \"results\": [\n";
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    os << result_json(report.results[i], include_elapsed, "    ");
    if (i + 1 < report.results.size()) os << ",";
    os << "\n";
  }
  os << "  ],\n  \"summary\": {\"pass\": " << report.summary.pass
     << ", \"fail\": " << report.summary.fail << ", \"skipped\": " << report.summary.skipped
     << "}\n}\n";
  return os.str();
}

std::string to_markdown(const RunReport& report) {
  std::ostringstream os;
  os << "| id | params | lhs | rhs | abs error | verdict |\n";
  os << "|----|--------|-----|-----|-----------|---------|\n";
  for (const VerificationResult& r : report.results) {
    const bool as_real = value_kind_real(r.identity_id);
    char delta[40];
    std::snprintf(delta, sizeof delta, "%.3e", worst_error(r));
    os << "| " << r.identity_id << " | " << params_text(r) << " | "
       << (r.lhs_quadrature ? value_text(*r.lhs_quadrature, as_real) : std::string("-")) << " | "
       << value_text(r.rhs_closed, as_real) << " | " << delta << " | " << to_string(r.verdict)
       << " |\n";
  }
  os << "\nsummary: pass=" << report.summary.pass << " fail=" << report.summary.fail
     << " skipped=" << report.summary.skipped << "\n";
  return os.str();
}

std::string to_csv(const RunReport& report) {
  std::ostringstream os;
  os << "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,series_re,series_im,"
        "abs_error_qc,abs_error_qs,abs_error_cs,evaluations,elapsed,verdict\n";
  auto opt_val = [](const std::optional<Complex>& v, bool re) {
    return v ? format_double(re ? v->real() : v->imag()) : std::string();
  };
  auto opt_err = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (const VerificationResult& r : report.results) {
    os << r.identity_id << ",\"" << params_text(r) << "\"," << opt_val(r.lhs_quadrature, true)
       << "," << opt_val(r.lhs_quadrature, false) << "," << format_double(r.rhs_closed.real())
       << "," << format_double(r.rhs_closed.imag()) << "," << opt_val(r.series_value, true) << ","
       << opt_val(r.series_value, false) << "," << opt_err(r.abs_error_qc) << ","
       << opt_err(r.abs_error_qs) << "," << opt_err(r.abs_error_cs) << "," << r.evaluations << ","
       << format_double(r.elapsed_seconds) << "," << to_string(r.verdict) << "\n";
  }
  return os.str();
}

RunReport from_json(const std::string& text) {
  const json j = json::parse(text);
  RunReport report;
  const json& cfg = j.at("run_config");
  report.run_config.command = cfg.at("command").get<std::string>();
  if (cfg.contains("identity_id")) {
    report.run_config.identity_id = cfg.at("identity_id").get<std::string>();
    for (const auto& [name, value] : cfg.at("params").items()) {
      report.run_config.params[name] = parse_value(value);
    }
  }
  report.run_config.quadrature.abs_tol = cfg.at("abs_tol").get<double>();
  report.run_config.quadrature.max_level = cfg.at("max_level").get<int>();
  report.run_config.quadrature.clip_epsilon = cfg.at("clip_epsilon").get<double>();
  if (cfg.contains("threshold")) report.run_config.threshold = cfg.at("threshold").get<double>();
  report.run_config.output_format = cfg.at("output_format").get<std::string>();
  for (const json& rj : j.at("results")) {
    VerificationResult r;
    r.identity_id = rj.at("identity_id").get<std::string>();
    for (const auto& [name, value] : rj.at("params").items()) {
      r.params[name] = parse_value(value);
    }
    if (rj.contains("lhs_quadrature")) r.lhs_quadrature = parse_value(rj.at("lhs_quadrature"));
    r.rhs_closed = parse_value(rj.at("rhs_closed"));
    if (rj.contains("series_value")) r.series_value = parse_value(rj.at("series_value"));
    if (rj.contains("abs_error_qc")) r.abs_error_qc = rj.at("abs_error_qc").get<double>();
    if (rj.contains("abs_error_qs")) r.abs_error_qs = rj.at("abs_error_qs").get<double>();
    if (rj.contains("abs_error_cs")) r.abs_error_cs = rj.at("abs_error_cs").get<double>();
    r.threshold_qc = rj.at("threshold_qc").get<double>();
    r.threshold_series = rj.at("threshold_series").get<double>();
    r.evaluations = rj.at("evaluations").get<long long>();
    if (rj.contains("elapsed")) r.elapsed_seconds = rj.at("elapsed").get<double>();
    if (rj.contains("cause")) r.cause = rj.at("cause").get<std::string>();
    const std::string verdict = rj.at("verdict").get<std::string>();
    r.verdict = verdict == "pass" ? Verdict::pass
                                  : (verdict == "fail" ? Verdict::fail : Verdict::skipped);
    report.results.push_back(std::move(r));
  }
  const json& s = j.at("summary");
  report.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("skipped").get<int>()};
  return report;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace loglab

#pragma once

#include <string>

#include "loglab/verifier.hpp"

namespace loglab {

// JSON report, schema:
//   {"run_config": {...}, "results": [VerificationResult...],
//    "summary": {"pass": n, "fail": m, "skipped": k}}
// Numbers carry 17 significant digits so re-parsing reproduces every double
// bit-exactly. Complex values serialize as {"re": r, "im": i}; identities and
// parameters of real kind serialize as plain numbers. `include_elapsed`
// exists for bit-identical comparison of repeat runs, since wall-clock time
// is the one legitimately nondeterministic field.
std::string to_json(const RunReport& report, bool include_elapsed = true);

// One table row per check: id, params, lhs, rhs, |delta|, verdict.
std::string to_markdown(const RunReport& report);

// Flat rows for spreadsheet import.
std::string to_csv(const RunReport& report);

// Inverse of to_json (used by the round-trip tests and the bindings).
RunReport from_json(const std::string& text);

// Writes atomically: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string format_double(double v);  // %.17g
std::string to_string(Verdict v);

}  // namespace loglab

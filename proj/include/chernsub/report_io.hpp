#pragma once

#include <string>
#include <vector>

#include "chernsub/chern.hpp"
#include "chernsub/verifier.hpp"

namespace chernsub {

inline constexpr const char* kReportSchemaVersion = "1";

// Stable machine-readable form: fixed key order, all potentially large
// integers as decimal strings, two-space indentation, trailing newline.
std::string report_to_json_string(const VerificationReport& rep);

// One report serializes as a single object, several as an array.
std::string reports_to_json_string(const std::vector<VerificationReport>& reports);

// Human-readable form carrying the same numeric content.
std::string report_to_text(const VerificationReport& rep);

// Weight map like "{-1: 1, 0: 7, 1: 1}" (weights ascending).
std::string format_weights(const LaurentElement& v);

// Series like "1 - t^2" (zero coefficients skipped, "0" if all vanish).
std::string format_series(const IntegerSeries& s);

// 0 if every in-scope report certified its prime, 1 otherwise.  Out-of-scope
// runs (p = 2) never influence the exit code.
int aggregate_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace chernsub

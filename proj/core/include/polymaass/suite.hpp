#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polymaass/point.hpp"

namespace polymaass {

struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> inputs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  long runtime_ms = 0;
  std::map<std::string, std::string> diagnostics;
};

struct SuiteOptions {
  TruncationPolicy policy;
  std::uint32_t seed = 20240601;
};

// Every registered id, sorted.
std::vector<std::string> check_ids();

// Runs the selected checks; reports are sorted by check_id. A selection entry
// ending in '*' selects every id with that prefix.
std::vector<CheckReport> run_suite(const std::vector<std::string>& selection, const SuiteOptions& options);

// xi_on_expansion against xi_numeric for F/G(k, m, r) at one point (tolerance 1e-5).
CheckReport check_xi_at(int k, long m, int r, EvalPoint z, const SuiteOptions& options);
// laplacian_on_expansion against laplacian_numeric (tolerance 1e-4).
CheckReport check_laplacian_at(int k, long m, int r, EvalPoint z, const SuiteOptions& options);

// Points with |x| <= 1/2 and 0.55 < y < 1.5, so both z and -1/z have imaginary part above 1/2.
std::vector<EvalPoint> sample_points(std::uint32_t seed, int count);

// runtime_ms is written only when timings is set, so default output is byte-stable.
std::string reports_to_json(const std::vector<CheckReport>& reports, bool timings = false, int indent = 2);
std::vector<CheckReport> reports_from_json(const std::string& text);
// Header: check_id,residual,tolerance,passed,runtime_ms
std::string reports_to_csv(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports, bool timings = false);

}  // namespace polymaass

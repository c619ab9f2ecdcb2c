#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gossez/probe.hpp"
#include "verify/suites.hpp"

namespace gossez::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ScanRow {
  double lambda = 0.0;
  double lower_bound = 0.0;
  double estimate = 0.0;
  std::size_t dim = 0;
  ProbeMethod method = ProbeMethod::Exact;
  std::uint64_t patterns_explored = 0;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

inline constexpr const char* kScanHeader = "lambda,lower_bound,estimate,dim,method,patterns_explored,runtime_ms";

/// Header plus one row per entry; floats written with 17 significant digits
/// so parse_scan_csv recovers them bit for bit.
std::string write_scan_csv(const std::vector<ScanRow>& rows);
/// Throws ParseError on a malformed table.
std::vector<ScanRow> parse_scan_csv(const std::string& text);

/// "%.12g".
std::string format_float(double v);

/// Runs the given suites, prints a per-suite table and, on failure, the first
/// counterexample. Returns kExitOk iff every suite passed.
int run_verify(const verify::Config& cfg, const verify::OperatorTable& ops, std::ostream& out);

/// Full command line entry point: verify | bound | probe | scan | apply.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gossez::cli

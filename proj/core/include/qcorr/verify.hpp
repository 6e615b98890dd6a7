#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/measopt.hpp"
#include "qcorr/stateio.hpp"

namespace qcorr {

/// Named residual sweeps runnable from the CLI. Identity checks (tradeoff1,
/// tradeoff3) must vanish to round-off; inequality checks must be
/// nonnegative; thm2 is an experiment that reports rather than asserts.
enum class Check {
  Uncertainty,
  BoundChain,
  Superadd,
  Thm1Pure,
  Tradeoff1,
  Thm2,
  Tradeoff3,
  Ordering,
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& name)
      : Error("unknown check '" + name + "'") {}
};

Check parse_check(const std::string& name);
std::string check_name(Check check);
double default_tolerance(Check check);
/// True when the check needs a bipartite split (two dims).
bool check_needs_split(Check check);

enum class ReportFormat { Csv, Json };

struct VerifyOptions {
  Check check = Check::Uncertainty;
  int samples = 100;
  std::vector<int> dims = {2, 2};  ///< 1 or 2 entries
  Seed seed{0};
  std::optional<double> tol;       ///< default_tolerance(check) when unset
  OptimizerConfig optimizer;       ///< seed is re-derived per sample
};

/// Sweep outcome: one row per sample plus summary statistics. Rows hold the
/// values for `columns`; sample_index and seed are kept separately so they
/// can be written as integers.
struct VerificationReport {
  std::string check;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<std::string> columns;  ///< residual is always the last column
  std::vector<std::uint64_t> row_seeds;
  std::vector<std::vector<double>> rows;
  double min_residual = 0.0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  long violations = 0;
  long chain_violations = 0;            ///< thm2 only
  long evaluations_total = 0;           ///< optimizer-backed checks only
  std::vector<StateFile> violating_states;  ///< thm2 only
};

VerificationReport run_verify(const VerifyOptions& opts);

/// Writes the rows to `out_path` (CSV with RFC-4180 quoting, or a JSON
/// array), the summary block to `<out>.summary.json`, and each violating
/// state to `<out>.violation_<k>.json`. Identical inputs produce identical
/// bytes.
void write_report(const VerificationReport& report, ReportFormat format,
                  const std::string& out_path);

/// 0 when no violations exceed the tolerance, 4 otherwise; thm2 always 0.
int report_exit_code(const VerificationReport& report);

}  // namespace qcorr

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ttk/diagram.hpp"
#include "ttk/invariants.hpp"
#include "ttk/knotparams.hpp"

namespace ttk::cli {

/// One knot: classification plus the data the reports need.
struct KnotReport {
  TwistedTorusParams params;
  ClassificationResult result;
  int generators = 0;
  long total_hat_rank = 0;
  int genus = 0;
  LaurentPoly delta;
  LaurentPoly burau;
  std::optional<bool> predicate;
};

KnotReport compute_report(const TwistedTorusParams& params, const BuildOptions& options);
nlohmann::ordered_json report_json(const KnotReport& report);

struct SweepCell {
  int p = 0, k = 0, s = 0, r = 0;
  Sign sign = Sign::Plus;
  /// Empty when the cell is in scope.
  std::string skip_reason;
};

/// p in [2, p_max], k in [1, k_max], both signs, s in [1, p - 1], r in [1, r_max].
/// s = 1 with p >= 3 and q = 1 are kept as skipped cells.
std::vector<SweepCell> sweep_grid(int p_max, int k_max, int r_max);

struct SweepRow {
  std::size_t index = 0;
  SweepCell cell;
  std::string status;  // ok, skipped, error
  std::optional<KnotReport> report;
  std::string error;
  bool agree = false;
  bool delta_matches_oracle = false;
};

/// Evaluates every cell on `jobs` worker threads; rows come back in grid order.
std::vector<SweepRow> run_sweep(const std::vector<SweepCell>& grid, const BuildOptions& options, unsigned jobs);

/// Fixed column order; see README.
extern const char* const kSweepCsvHeader;
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows);
/// A row that blocks a zero exit: disagreement, undecided, error or oracle mismatch.
bool row_fails(const SweepRow& row);

/// Parses and dispatches; returns the process exit code (0 ok, 1 invariant or
/// disagreement, 2 usage).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ttk::cli

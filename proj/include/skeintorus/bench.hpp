#pragma once

// Timing harness: engine on the worst-case family D(p, p/2; 0, 1) against
// the brute-force state sum.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skeintorus::bench {

struct BenchRecord {
  std::int64_t det = 0;
  double engine_ms = 0;       // median, fresh table per rep
  double engine_warm_ms = 0;  // median, table already holding the entries
  std::optional<double> oracle_ms;
  std::size_t table_entries = 0;
  std::size_t peak_terms = 0;  // largest entry in the table, in (key, exponent) terms
};

struct BenchOptions {
  std::vector<std::int64_t> dets;
  int reps = 5;
  std::int64_t oracle_max_det = 20;
  int oracle_reps = 1;
  unsigned threads = 0;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  // least-squares slope of log(engine_ms) against log(det); needs >= 2 records
  std::optional<double> slope;
};

/// dets must be ascending and >= 2.
BenchReport run_suite(const BenchOptions& options);

/// Least-squares slope of log(y) against log(x).
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Header "det,engine_ms,engine_warm_ms,oracle_ms,table_entries,peak_terms"; NA
/// marks an oracle that was not run.
std::string to_csv(const BenchReport& report);

/// Exponential fit log2(ms) = a + b * det of oracle timings.
struct OracleScaling {
  std::vector<std::pair<std::int64_t, double>> samples;
  double intercept = 0;  // log2 ms at det 0
  double bits_per_crossing = 0;
  double predict_ms(std::int64_t det) const;
  /// Smallest det whose prediction exceeds ms.
  std::int64_t first_det_over(double ms) const;
};

OracleScaling measure_oracle_scaling(const std::vector<std::int64_t>& dets, int reps = 1,
                                     unsigned threads = 0);

double time_engine_ms(std::int64_t det);
double time_oracle_ms(std::int64_t det, unsigned threads = 0);

}  // namespace skeintorus::bench

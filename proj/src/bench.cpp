#include "skeintorus/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "skeintorus/discrepancy.hpp"
#include "skeintorus/oracle.hpp"

namespace skeintorus::bench {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::size_t peak_terms(const MemoTable& table) {
  std::size_t peak = 0;
  for (const auto& [key, value] : table.entries()) {
    std::size_t n = 0;
    for (const auto& [k, c] : value.terms()) n += c.size();
    peak = std::max(peak, n);
  }
  return peak;
}

}  // namespace

double time_engine_ms(std::int64_t det) {
  MemoTable table;
  return time_ms([&] { discrepancy(det, det / 2, 0, 1, table); });
}

double time_oracle_ms(std::int64_t det, unsigned threads) {
  const SkeinElement x = chebyshev_element(det, det / 2);
  const SkeinElement y = chebyshev_element(0, 1);
  return time_ms([&] {
    oracle::oracle_multiply(x, y, static_cast<int>(det), 0, threads);
  });
}

BenchReport run_suite(const BenchOptions& options) {
  if (!std::is_sorted(options.dets.begin(), options.dets.end())) {
    throw std::invalid_argument("dets must be ascending");
  }
  const int reps = std::max(1, options.reps);
  BenchReport report;
  std::vector<double> xs, ys;
  for (const std::int64_t det : options.dets) {
    if (det < 2) throw std::invalid_argument("det must be >= 2");
    BenchRecord r;
    r.det = det;
    std::vector<double> cold, warm;
    MemoTable shared;
    for (int i = 0; i < reps; ++i) {
      MemoTable table;
      cold.push_back(time_ms([&] { discrepancy(det, det / 2, 0, 1, table); }));
      if (i == 0) shared = table;
    }
    for (int i = 0; i < reps; ++i) {
      warm.push_back(time_ms([&] { discrepancy(det, det / 2, 0, 1, shared); }));
    }
    r.engine_ms = median(cold);
    r.engine_warm_ms = median(warm);
    r.table_entries = shared.size();
    r.peak_terms = peak_terms(shared);
    if (det <= options.oracle_max_det) {
      std::vector<double> o;
      for (int i = 0; i < std::max(1, options.oracle_reps); ++i) {
        o.push_back(time_oracle_ms(det, options.threads));
      }
      r.oracle_ms = median(o);
    }
    xs.push_back(static_cast<double>(det));
    ys.push_back(std::max(r.engine_ms, 1e-6));
    report.records.push_back(r);
  }
  report.slope = loglog_slope(xs, ys);
  return report;
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "det,engine_ms,engine_warm_ms,oracle_ms,table_entries,peak_terms\n";
  for (const auto& r : report.records) {
    os << r.det << ',' << r.engine_ms << ',' << r.engine_warm_ms << ',';
    if (r.oracle_ms) {
      os << *r.oracle_ms;
    } else {
      os << "NA";
    }
    os << ',' << r.table_entries << ',' << r.peak_terms << '\n';
  }
  return os.str();
}

double OracleScaling::predict_ms(std::int64_t det) const {
  return std::exp2(intercept + bits_per_crossing * static_cast<double>(det));
}

std::int64_t OracleScaling::first_det_over(double ms) const {
  if (bits_per_crossing <= 0) throw std::logic_error("oracle timings do not grow");
  const double det = (std::log2(ms) - intercept) / bits_per_crossing;
  auto d = static_cast<std::int64_t>(std::floor(det)) + 1;
  while (d > 0 && predict_ms(d - 1) > ms) --d;
  return d;
}

OracleScaling measure_oracle_scaling(const std::vector<std::int64_t>& dets, int reps,
                                     unsigned threads) {
  OracleScaling s;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const std::int64_t det : dets) {
    std::vector<double> t;
    for (int i = 0; i < std::max(1, reps); ++i) t.push_back(time_oracle_ms(det, threads));
    const double ms = std::max(median(t), 1e-6);
    s.samples.emplace_back(det, ms);
    const auto x = static_cast<double>(det);
    const double y = std::log2(ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto n = static_cast<double>(dets.size());
  if (dets.size() >= 2 && n * sxx - sx * sx != 0) {
    s.bits_per_crossing = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    s.intercept = (sy - s.bits_per_crossing * sx) / n;
  }
  return s;
}

}  // namespace skeintorus::bench

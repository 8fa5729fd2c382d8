// skeintorus: products and discrepancies in the skein algebra of the
// one-holed torus.
//
// Exit codes: 0 ok, 1 check failed, 2 bad input, 3 oracle budget exceeded,
// 4 cache error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "skeintorus/bench.hpp"
#include "skeintorus/check.hpp"
#include "skeintorus/closedforms.hpp"
#include "skeintorus/expr.hpp"

namespace st = skeintorus;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCache = 4;
constexpr const char* kCacheEnv = "SKEINTORUS_CACHE";

struct CacheSession {
  std::optional<std::filesystem::path> path;
  st::MemoTable table;
  std::size_t loaded = 0;

  void open(const std::string& flag) {
    if (!flag.empty()) {
      path = flag;
    } else if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') {
      path = env;
    }
    if (path && std::filesystem::exists(*path)) {
      table = st::load_table(*path);
      loaded = table.size();
    }
  }
  void close() const {
    if (path && table.size() != loaded) st::save_table(table, *path);
  }
};

std::string render(const st::SkeinElement& x, const std::string& basis, const std::string& format) {
  if (basis == "multicurve") {
    const st::MulticurveElement m = st::to_multicurve(x);
    if (format == "json") return st::to_json(m).dump();
    if (format == "latex") return st::to_latex(m);
    return st::to_string(m);
  }
  if (format == "json") return st::to_json(x).dump();
  if (format == "latex") return st::to_latex(x);
  return st::to_string(x);
}

std::vector<std::int64_t> parse_dets(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket skein algebra of the one-holed torus"};
  app.require_subcommand(1);

  std::string basis = "chebyshev";
  std::string format = "text";
  std::string cache_flag;
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--cache", cache_flag, std::string("memo cache file (default $") + kCacheEnv + ")");
  };

  auto* product = app.add_subcommand("product", "skein product of two expressions, first on top");
  std::string lhs, rhs;
  bool use_oracle = false;
  int budget = st::oracle::kDefaultBudget;
  std::uint64_t seed = 0;
  product->add_option("x", lhs, "e.g. \"T(2,1)\", \"(2,1) + A^-2*d\"")->required();
  product->add_option("y", rhs)->required();
  product->add_option("--basis", basis, "chebyshev or multicurve")
      ->check(CLI::IsMember({"chebyshev", "multicurve"}));
  product->add_flag("--oracle", use_oracle, "compute by the state sum instead of the recursion");
  product->add_option("--budget", budget, "oracle crossing budget");
  product->add_option("--seed", seed, "oracle strand offsets");
  add_output_flags(product);

  auto* disc = app.add_subcommand("disc", "discrepancy D(p,q;r,s)");
  std::int64_t p = 0, q = 0, r = 0, s = 0;
  disc->add_option("p", p)->required();
  disc->add_option("q", q)->required();
  disc->add_option("r", r)->required();
  disc->add_option("s", s)->required();
  disc->add_option("--basis", basis)->check(CLI::IsMember({"chebyshev", "multicurve"}));
  add_output_flags(disc);

  auto* table = app.add_subcommand("table", "fill the memo table and write the cache");
  std::int64_t pmax = 0, qmax = -1, smax = 1;
  table->add_option("--pmax", pmax)->required()->check(CLI::Range(2, 100000));
  table->add_option("--qmax", qmax, "default pmax/2");
  table->add_option("--smax", smax)->check(CLI::Range(1, 100000));
  table->add_option("--cache", cache_flag);

  auto* check = app.add_subcommand("check", "engine against the brute-force oracle");
  st::check::DifferentialRanges ranges;
  bool closed_forms = false, inject_fault = false;
  unsigned threads = 0;
  check->add_option("--pmax", ranges.p_max);
  check->add_option("--qmax", ranges.q_max);
  check->add_option("--rmax", ranges.r_max);
  check->add_option("--smax", ranges.s_max);
  check->add_option("--max-crossings", ranges.max_crossings);
  check->add_option("--budget", budget);
  check->add_option("--seed", seed);
  check->add_option("--threads", threads);
  check->add_flag("--closed-forms", closed_forms, "also run the closed-form families");
  check->add_flag("--inject-fault", inject_fault, "test mode: corrupt one engine coefficient");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* bench = app.add_subcommand("bench", "timings on D(p,p/2;0,1), CSV");
  std::string dets = "20,40,60,80,100,120,140,160,180,200";
  st::bench::BenchOptions bench_options;
  bench->add_option("--dets", dets, "comma separated, ascending");
  bench->add_option("--reps", bench_options.reps);
  bench->add_option("--oracle-max", bench_options.oracle_max_det);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*product) {
      CacheSession cache;
      cache.open(cache_flag);
      const st::SkeinElement x = st::parse_element(lhs, cache.table);
      const st::SkeinElement y = st::parse_element(rhs, cache.table);
      st::SkeinElement result;
      if (use_oracle) {
        result = st::from_multicurve(st::oracle::oracle_multiply(x, y, budget, seed));
      } else {
        result = st::multiply(x, y, cache.table);
      }
      std::cout << render(result, basis, format) << '\n';
      cache.close();
    } else if (*disc) {
      CacheSession cache;
      cache.open(cache_flag);
      std::cout << render(st::discrepancy(p, q, r, s, cache.table), basis, format) << '\n';
      cache.close();
    } else if (*table) {
      CacheSession cache;
      cache.open(cache_flag);
      if (qmax < 0) qmax = pmax / 2;
      st::fill_table_s1(cache.table, pmax, qmax);
      for (std::int64_t m = 2; smax >= 2 && m <= pmax; ++m) {
        for (std::int64_t n = 0; 2 * n <= m && n <= qmax; ++n) {
          st::fill_table_s(m, n, smax, cache.table);
        }
      }
      std::size_t max_terms = 0, max_coeffs = 0;
      for (const auto& [key, value] : cache.table.entries()) {
        std::size_t coeffs = 0;
        for (const auto& [k, c] : value.terms()) coeffs += c.size();
        max_terms = std::max(max_terms, value.size());
        max_coeffs = std::max(max_coeffs, coeffs);
      }
      std::cout << "entries " << cache.table.size() << "\nmax_terms " << max_terms
                << "\nmax_coefficients " << max_coeffs << '\n';
      if (cache.path) {
        st::save_table(cache.table, *cache.path);
        std::cout << "cache " << cache.path->string() << '\n';
      }
    } else if (*check) {
      st::MemoTable memo;
      st::check::DifferentialOptions options;
      options.budget = budget;
      options.seed = seed;
      options.threads = threads;
      options.inject_fault = inject_fault;
      const auto report = st::check::run_differential(ranges, options, memo);
      bool ok = report.ok();
      nlohmann::json j = report.to_json();
      if (closed_forms) {
        j["closed_forms"] = nlohmann::json::array();
        for (const auto& f : st::closedforms::run_suite({}, memo)) {
          ok = ok && f.status != st::closedforms::Status::kFail;
          nlohmann::json e{{"family", f.name},
                           {"range", {f.lo, f.hi}},
                           {"status", st::closedforms::to_string(f.status)}};
          if (f.first_mismatch) {
            e["first_mismatch"] = *f.first_mismatch;
            e["closed_form"] = st::to_string(f.closed_form);
            e["engine"] = st::to_string(f.engine);
          }
          j["closed_forms"].push_back(e);
        }
      }
      j["status"] = ok ? "PASS" : "FAIL";
      if (format == "json") {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "differential " << (report.ok() ? "PASS" : "FAIL") << " pairs "
                  << report.pairs << " mismatches " << report.mismatches
                  << " closed_torus_failures " << report.closed_torus_failures
                  << " positivity_failures " << report.positivity_failures << '\n';
        for (const auto& f : report.failures) {
          std::cout << "  T(" << f.x.p << "," << f.x.q << ")*T(" << f.y.p << "," << f.y.q
                    << ") differs at " << f.locus << '\n';
        }
        if (closed_forms) {
          for (const auto& e : j["closed_forms"]) {
            std::cout << e["status"].get<std::string>() << ' ' << e["family"].get<std::string>();
            if (e.contains("first_mismatch")) std::cout << " first mismatch " << e["first_mismatch"];
            std::cout << '\n';
          }
        }
      }
      return ok ? 0 : kExitCheckFailed;
    } else if (*bench) {
      bench_options.dets = parse_dets(dets);
      const auto report = st::bench::run_suite(bench_options);
      std::cout << st::bench::to_csv(report);
      if (report.slope) std::cerr << "loglog_slope " << *report.slope << '\n';
    }
  } catch (const st::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const st::oracle::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const st::CacheError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kExitCache;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

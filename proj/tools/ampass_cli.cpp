#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "ampass/ampass.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace ampass;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Accepts plain integers and scientific notation ("250", "1e6", "2.5e5").
std::int64_t parse_scaled_count(const std::string& text) {
  std::size_t consumed = 0;
  long double v = 0;
  try {
    v = std::stold(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (consumed != text.size() || !std::isfinite(static_cast<double>(v)) || v <= 0 ||
      v > 9.0e18L)
    throw std::invalid_argument("not a positive count: '" + text + "'");
  const std::int64_t rounded = static_cast<std::int64_t>(std::llround(static_cast<double>(v)));
  if (std::fabs(v - static_cast<long double>(rounded)) > 1e-6L * v)
    throw std::invalid_argument("not an integral count: '" + text + "'");
  return rounded;
}

std::vector<std::int64_t> parse_sample_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string item = csv.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
    if (!item.empty()) out.push_back(parse_scaled_count(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ordered_json make_envelope(const std::string& command, ordered_json params, ordered_json results,
                           ordered_json checks) {
  ordered_json env;
  env["command"] = command;
  env["params"] = std::move(params);
  env["results"] = std::move(results);
  env["checks"] = std::move(checks);
  return env;
}

void emit(const ordered_json& env, const std::string& format) {
  if (format == "json") std::cout << env.dump(2) << "\n";
}

struct CommonArgs {
  std::string format = "plain";
  int workers = static_cast<int>(std::thread::hardware_concurrency());
};

int cmd_dist(long n, long k, const CommonArgs& common) {
  const GeneratingPolynomial gp = generating_polynomial(n, k);
  const bool sums_to_one = gp.poly.eval_one() == Rational(1);
  const bool r1_zero = gp.probability(std::min(n, 1L)) == Rational(0) || n < 1;
  if (common.format == "csv") {
    std::cout << "r,probability\n";
    for (long r = 0; r <= n; ++r) std::cout << r << "," << gp.probability(r) << "\n";
  } else if (common.format == "json") {
    ordered_json probs = ordered_json::array();
    for (long r = 0; r <= n; ++r) probs.push_back(gp.probability(r).to_string());
    emit(make_envelope("dist", {{"n", n}, {"k", k}}, {{"probabilities", std::move(probs)}},
                       ordered_json::array({{{"name", "coefficients sum to 1"}, {"passed", sums_to_one}},
                                            {{"name", "p_1 = 0"}, {"passed", r1_zero}}})),
         common.format);
  } else {
    std::cout << "wrong-seat distribution for n=" << n << ", k=" << k << "\n";
    for (long r = 0; r <= n; ++r)
      std::cout << "  p[" << r << "] = " << gp.probability(r) << "\n";
    std::cout << "checks: sum-to-1 " << (sums_to_one ? "ok" : "FAILED") << ", p_1=0 "
              << (r1_zero ? "ok" : "FAILED") << "\n";
  }
  return sums_to_one && r1_zero ? 0 : 1;
}

int cmd_moments(long n, long k, int l_max, const std::string& kind, const CommonArgs& common) {
  const MomentTable table = moment_pipeline(n, k, l_max);
  const auto& values = kind == "exp"   ? table.exp_moments
                       : kind == "raw" ? table.raw_moments
                                       : table.central_moments;
  const std::string label = kind == "exp" ? "Mbar" : (kind == "raw" ? "M" : "m");
  if (common.format == "csv") {
    std::cout << "l,value\n";
    for (int l = 0; l <= l_max; ++l)
      std::cout << l << "," << values[static_cast<std::size_t>(l)] << "\n";
  } else if (common.format == "json") {
    ordered_json vals = ordered_json::array();
    for (int l = 0; l <= l_max; ++l) vals.push_back(values[static_cast<std::size_t>(l)].to_string());
    emit(make_envelope(
             "moments", {{"n", n}, {"k", k}, {"lmax", l_max}, {"kind", kind}},
             {{"values", std::move(vals)}},
             ordered_json::array({{{"name", "theta-path cross-check"},
                                   {"passed", table.theta_check_passed}}})),
         common.format);
  } else {
    std::cout << kind << " moments for n=" << n << ", k=" << k << "\n";
    for (int l = 0; l <= l_max; ++l)
      std::cout << "  " << label << "_" << l << " = " << values[static_cast<std::size_t>(l)] << "\n";
    std::cout << "checks: theta-path cross-check "
              << (table.theta_check_passed ? "ok" : "FAILED") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, long n_max, long k_max, const CommonArgs& common) {
  const SuiteReport report = run_suite(suite, n_max, k_max, std::max(1, common.workers));
  if (common.format == "csv") {
    std::cout << "check,cells,status,first_failure\n";
    for (const auto& c : report.checks)
      std::cout << '"' << c.name << "\"," << c.cells << "," << (c.passed ? "PASS" : "FAIL") << ",\""
                << c.first_failure << "\"\n";
  } else if (common.format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json jc;
      jc["name"] = c.name;
      jc["cells"] = c.cells;
      jc["passed"] = c.passed;
      if (!c.passed) jc["first_failure"] = c.first_failure;
      checks.push_back(std::move(jc));
    }
    emit(make_envelope("verify",
                       {{"suite", suite}, {"n_max", n_max}, {"k_max", k_max},
                        {"workers", std::max(1, common.workers)}},
                       {{"all_passed", report.all_passed()}, {"cells", report.total_cells()}},
                       std::move(checks)),
         common.format);
  } else {
    std::cout << "verify suite '" << report.suite << "'\n";
    for (const auto& c : report.checks) {
      std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " (" << c.cells
                << " cells)\n";
      if (!c.passed) std::cout << "         first counterexample: " << c.first_failure << "\n";
    }
    std::cout << (report.all_passed() ? "PASS" : "FAIL") << ", " << report.total_cells()
              << " cells\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_limits(long k, int l, const std::vector<std::int64_t>& samples, long precision,
               const CommonArgs& common) {
  const LimitEstimate est = limit_ratio(k, l, samples, precision);
  if (common.format == "csv") {
    std::cout << "n,ratio\n";
    for (const auto& [n, ratio] : est.samples) std::cout << n << "," << ratio.to_string() << "\n";
  } else if (common.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& [n, ratio] : est.samples)
      rows.push_back({{"n", n}, {"ratio", ratio.to_string()}});
    emit(make_envelope("limits",
                       {{"k", k}, {"l", l}, {"precision_bits", precision}},
                       {{"samples", std::move(rows)},
                        {"extrapolated", est.extrapolated.to_string()},
                        {"claimed", est.claimed.get_str()},
                        {"precision_bits", precision}},
                       ordered_json::array(
                           {{{"name", "dual-precision agreement"}, {"passed", true}}})),
         common.format);
  } else {
    std::cout << "normalized moment ratio m_" << l << " / m_2^(" << l << "/2) for k=" << k << "\n";
    for (const auto& [n, ratio] : est.samples)
      std::cout << "  n = " << n << ": " << ratio.to_string() << "\n";
    std::cout << "extrapolated (1/log n -> 0): " << est.extrapolated.to_string() << "\n";
    std::cout << "claimed limit: " << est.claimed.get_str() << "\n";
  }
  return 0;
}

int cmd_simulate(const SimConfig& config, const CommonArgs& common) {
  const SimResult res = simulate(config);
  if (common.format == "csv") {
    std::cout << "r,count\n";
    for (std::size_t r = 0; r < res.histogram.size(); ++r)
      std::cout << r << "," << res.histogram[r] << "\n";
  } else if (common.format == "json") {
    ordered_json hist = ordered_json::array();
    for (const auto c : res.histogram) hist.push_back(c);
    ordered_json moments = ordered_json::array();
    for (std::size_t l = 0; l < res.raw_moments.size(); ++l)
      moments.push_back({{"l", l},
                         {"empirical", format_double(res.raw_moments[l])},
                         {"std_error", format_double(res.std_errors[l])},
                         {"sigma_deviation", format_double(res.sigma_deviations[l])}});
    emit(make_envelope("simulate",
                       {{"n", config.n}, {"k", config.k}, {"trials", config.trials},
                        {"seed", config.seed}, {"workers", config.worker_count},
                        {"lmax", config.l_max}},
                       {{"histogram", std::move(hist)},
                        {"raw_moments", std::move(moments)},
                        {"chi_square", format_double(res.chi_square)},
                        {"chi_square_df", res.chi_square_df},
                        {"chi_square_p", format_double(res.chi_square_p)}},
                       ordered_json::array({{{"name", "distribution flag (chi-square, 6-sigma)"},
                                             {"passed", !res.flagged}}})),
         common.format);
  } else {
    std::cout << "simulation n=" << config.n << " k=" << config.k << " trials=" << config.trials
              << " seed=" << config.seed << " workers=" << config.worker_count << "\n";
    for (std::size_t r = 0; r < res.histogram.size(); ++r)
      if (res.histogram[r] > 0) std::cout << "  count[" << r << "] = " << res.histogram[r] << "\n";
    for (std::size_t l = 1; l < res.raw_moments.size(); ++l)
      std::cout << "  M_" << l << " = " << format_double(res.raw_moments[l]) << " +- "
                << format_double(res.std_errors[l]) << " ("
                << format_double(res.sigma_deviations[l]) << " sigma from exact)\n";
    std::cout << "  chi-square " << format_double(res.chi_square) << " df=" << res.chi_square_df
              << " p=" << format_double(res.chi_square_p) << "\n";
    std::cout << "flagged: " << (res.flagged ? "yes" : "no") << "\n";
  }
  return res.flagged ? 1 : 0;
}

int cmd_bench(int l_max, long k, const CommonArgs& common) {
  struct Row {
    int l;
    double step1, step2, step3;
    std::size_t size_bytes;
  };
  std::vector<Row> rows;
  using clock = std::chrono::steady_clock;
  auto lift = [](const BigInt& v) { return HarmonicExpr(Rational(v)); };
  for (int l = 1; l <= l_max; ++l) {
    Row row{l, 0, 0, 0, 0};
    const auto t0 = clock::now();
    const auto exp_moments = symbolic_exponential_moments(k, l);
    const auto t1 = clock::now();
    const auto raw = stirling_transform_generic(exp_moments, lift);
    const auto t2 = clock::now();
    // combine into the row's central moment only
    HarmonicExpr mean_pow = lift(BigInt(1));
    std::vector<HarmonicExpr> powers = {mean_pow};
    for (int j = 1; j <= l; ++j) powers.push_back(powers.back() * raw[1]);
    HarmonicExpr central = lift(BigInt(0));
    for (int i = 0; i <= l; ++i) {
      BigInt c = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i));
      if ((l - i) % 2 == 1) c = -c;
      central += lift(c) * raw[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(l - i)];
    }
    const auto t3 = clock::now();
    row.step1 = std::chrono::duration<double>(t1 - t0).count();
    row.step2 = std::chrono::duration<double>(t2 - t1).count();
    row.step3 = std::chrono::duration<double>(t3 - t2).count();
    row.size_bytes = central.to_string().size();
    rows.push_back(row);
  }
  if (common.format == "csv") {
    std::cout << "l,step1_s,step2_s,step3_s,total_s,size_bytes\n";
    for (const auto& r : rows)
      std::cout << r.l << "," << format_double(r.step1) << "," << format_double(r.step2) << ","
                << format_double(r.step3) << "," << format_double(r.step1 + r.step2 + r.step3)
                << "," << r.size_bytes << "\n";
  } else if (common.format == "json") {
    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows)
      jrows.push_back({{"l", r.l},
                       {"step1_s", format_double(r.step1)},
                       {"step2_s", format_double(r.step2)},
                       {"step3_s", format_double(r.step3)},
                       {"total_s", format_double(r.step1 + r.step2 + r.step3)},
                       {"size_bytes", r.size_bytes}});
    emit(make_envelope("bench", {{"lmax", l_max}, {"k", k}},
                       {{"rows", std::move(jrows)},
                        {"note", "wall-clock values are machine-local"}},
                       ordered_json::array()),
         common.format);
  } else {
    std::cout << "symbolic pipeline timings (k=" << k
              << "); wall-clock values are machine-local\n";
    std::printf("  %2s  %10s  %10s  %10s  %10s  %10s\n", "l", "step1 [s]", "step2 [s]",
                "step3 [s]", "total [s]", "size [B]");
    for (const auto& r : rows)
      std::printf("  %2d  %10.4f  %10.4f  %10.4f  %10.4f  %10zu\n", r.l, r.step1, r.step2,
                  r.step3, r.step1 + r.step2 + r.step3, r.size_bytes);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ampass: exact moment engine for the absent-minded passengers distribution"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  CommonArgs common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--workers", common.workers, "worker threads for grid verification")
      ->capture_default_str();

  long n = 0, k = 1;
  int l_max = 4, l = 4;
  std::string kind = "central";
  std::string suite = "oracle";
  long n_max = 0, k_max = 0;
  std::string samples_csv = "1e4,1e5,1e6,1e7,1e8";
  long precision = 128;
  std::string trials_text = "1000000";
  std::uint64_t seed = 1;

  auto* dist = app.add_subcommand("dist", "exact wrong-seat distribution p_{n,k,r}");
  dist->add_option("--n", n, "seat count (>= 2)")->required();
  dist->add_option("--k", k, "absent-minded passenger count")->required();

  auto* moments = app.add_subcommand("moments", "exact moment table via the three-step pipeline");
  moments->add_option("--n", n)->required();
  moments->add_option("--k", k)->required();
  moments->add_option("--lmax", l_max, "highest moment order")->capture_default_str();
  moments->add_option("--kind", kind, "exp | raw | central")
      ->check(CLI::IsMember({"exp", "raw", "central"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a cross-validation suite");
  verify->add_option("--suite", suite, "oracle | closed-forms | symbolic | asymptotics")
      ->check(CLI::IsMember({"oracle", "closed-forms", "symbolic", "asymptotics"}))
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "grid bound (suite default when omitted)");
  verify->add_option("--k-max", k_max, "cap k per n (0 = all k)");

  auto* limits = app.add_subcommand("limits", "normalized moment ratios at large n");
  limits->add_option("--k", k)->required();
  limits->add_option("--l", l, "moment order (>= 2)")->required();
  limits->add_option("--samples", samples_csv, "comma list of n values (scientific ok)")
      ->capture_default_str();
  limits->add_option("--precision", precision, "mantissa bits")->capture_default_str();

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo seating simulation");
  simulate_cmd->add_option("--n", n)->required();
  simulate_cmd->add_option("--k", k)->required();
  simulate_cmd->add_option("--trials", trials_text, "trial count (scientific ok)")
      ->capture_default_str();
  simulate_cmd->add_option("--seed", seed, "master seed")->capture_default_str();
  simulate_cmd->add_option("--lmax", l_max, "empirical moment order")->capture_default_str();

  long bench_k = 2;
  auto* bench = app.add_subcommand("bench", "per-order timings of the symbolic pipeline steps");
  bench->add_option("--lmax", l_max, "highest order to time")->capture_default_str();
  bench->add_option("--k", bench_k, "absent-minded count for the symbolic forms")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dist->parsed()) return cmd_dist(n, k, common);
    if (moments->parsed()) return cmd_moments(n, k, l_max, kind, common);
    if (verify->parsed()) return cmd_verify(suite, n_max, k_max, common);
    if (limits->parsed())
      return cmd_limits(k, l, parse_sample_list(samples_csv), precision, common);
    if (simulate_cmd->parsed()) {
      SimConfig config;
      config.n = n;
      config.k = k;
      config.trials = static_cast<std::uint64_t>(parse_scaled_count(trials_text));
      config.seed = seed;
      config.worker_count = std::max(1, common.workers);
      config.l_max = l_max;
      return cmd_simulate(config, common);
    }
    if (bench->parsed()) return cmd_bench(l_max, bench_k, common);
  } catch (const guard_error& e) {
    std::cerr << "error (guard): " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error (usage): " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (usage): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

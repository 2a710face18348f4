#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ampass/asymptotics.hpp"
#include "ampass/closed_forms.hpp"
#include "ampass/moments.hpp"
#include "ampass/symbolic.hpp"

namespace ampass {

struct CheckResult {
  std::string name;
  std::size_t cells = 0;
  bool passed = true;
  std::string first_failure;  // empty when passed
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t total_cells() const {
    std::size_t acc = 0;
    for (const auto& c : checks) acc += c.cells;
    return acc;
  }
};

namespace detail {

/// Runs `fn(cell)` over [0, total) on `workers` threads; fn returns an empty
/// optional on success or a failure description. The lowest-index failure is
/// reported, independent of scheduling.
inline CheckResult scan_cells(std::string name, std::size_t total, int workers,
                              const std::function<std::optional<std::string>(std::size_t)>& fn) {
  CheckResult out;
  out.name = std::move(name);
  out.cells = total;
  std::mutex mu;
  std::map<std::size_t, std::string> failures;
  std::atomic<std::size_t> next{0};
  const int used = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < used; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t cell = next.fetch_add(1);
        if (cell >= total) return;
        std::optional<std::string> failure;
        try {
          failure = fn(cell);
        } catch (const std::exception& e) {
          failure = std::string("exception: ") + e.what();
        }
        if (failure) {
          std::lock_guard lock(mu);
          failures.emplace(cell, *failure);
        }
      }
    });
  for (auto& th : pool) th.join();
  if (!failures.empty()) {
    out.passed = false;
    out.first_failure = failures.begin()->second;
  }
  return out;
}

inline std::vector<std::pair<long, long>> grid_cells(long n_min, long n_max, long k_max) {
  std::vector<std::pair<long, long>> cells;
  for (long n = n_min; n <= n_max; ++n)
    for (long k = 1; k <= n && (k_max <= 0 || k <= k_max); ++k) cells.emplace_back(n, k);
  return cells;
}

template <class T>
std::string describe_cell(long n, long k, const std::string& what, const T& got, const T& want) {
  std::ostringstream os;
  os << "n=" << n << " k=" << k << ": " << what << " gave " << got << ", expected " << want;
  return os.str();
}

}  // namespace detail

/// Oracle suite: the generating polynomial against the exhaustive seating
/// recursion, oracle power sums against the pipeline, and the pipeline's
/// internal path equality, on 2 <= n <= n_max (enumeration-guarded).
inline SuiteReport run_oracle_suite(long n_max = 8, long k_max = 0, int workers = 1) {
  if (n_max > 10) throw guard_error("oracle suite: enumeration oracle guarded to n <= 10");
  SuiteReport report{.suite = "oracle", .checks = {}};
  const auto cells = detail::grid_cells(2, n_max, k_max);

  report.checks.push_back(detail::scan_cells(
      "distribution equals exhaustive enumeration", cells.size(), workers,
      [&cells](std::size_t i) -> std::optional<std::string> {
        const auto [n, k] = cells[i];
        const auto oracle = enumerate_exact(n, k);
        const auto gp = generating_polynomial(n, k);
        for (long r = 0; r <= n; ++r)
          if (!(oracle[static_cast<std::size_t>(r)] == gp.probability(r)))
            return detail::describe_cell(n, k, "p_" + std::to_string(r),
                                         gp.probability(r).to_string(),
                                         oracle[static_cast<std::size_t>(r)].to_string());
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "pipeline raw moments equal oracle power sums (l <= 6)", cells.size(), workers,
      [&cells](std::size_t i) -> std::optional<std::string> {
        const auto [n, k] = cells[i];
        const auto oracle = enumerate_exact(n, k);
        const auto table = moment_pipeline(n, k, 6);
        for (int l = 0; l <= 6; ++l) {
          Rational sum(0);
          for (long r = 0; r <= n; ++r) {
            BigInt r_pow = 1;
            for (int u = 0; u < l; ++u) r_pow *= r;
            sum += Rational(r_pow) * oracle[static_cast<std::size_t>(r)];
          }
          if (!(table.raw_moments[static_cast<std::size_t>(l)] == sum))
            return detail::describe_cell(n, k, "M_" + std::to_string(l),
                                         table.raw_moments[static_cast<std::size_t>(l)].to_string(),
                                         sum.to_string());
        }
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "exponential+Stirling path equals theta path (l <= 8)", cells.size(), workers,
      [&cells](std::size_t i) -> std::optional<std::string> {
        const auto [n, k] = cells[i];
        const auto gp = generating_polynomial(n, k);
        const auto stirling = stirling_transform(exponential_moments(gp, 8));
        const auto theta = theta_moments(gp, 8);
        for (int l = 0; l <= 8; ++l)
          if (!(stirling[static_cast<std::size_t>(l)] == theta[static_cast<std::size_t>(l)]))
            return detail::describe_cell(n, k, "M_" + std::to_string(l),
                                         stirling[static_cast<std::size_t>(l)].to_string(),
                                         theta[static_cast<std::size_t>(l)].to_string());
        return std::nullopt;
      }));
  return report;
}

/// Closed-form concordance: definite sums, closed forms and the pipeline
/// agree for E and V on the full grid; m3/m4 closed forms (delta branches
/// included) and the two m4 specializations agree on 4 <= n <= min(40, n_max).
inline SuiteReport run_closed_forms_suite(long n_max = 60, long k_max = 0, int workers = 1) {
  SuiteReport report{.suite = "closed-forms", .checks = {}};
  const auto cells = detail::grid_cells(2, n_max, k_max);
  const HarmonicCache& cache = shared_harmonic_cache();

  report.checks.push_back(detail::scan_cells(
      "mean: definite sum = closed forms = pipeline", cells.size(), workers,
      [&cells, &cache](std::size_t i) -> std::optional<std::string> {
        const auto [n, k] = cells[i];
        const Rational want = moment_pipeline(n, k, 1).raw_moments[1];
        for (const char* route : {"sum", "sbar", "s"}) {
          const Rational got = route == std::string("sum") ? mean_definite_sum(n, k)
                               : route == std::string("sbar")
                                   ? mean_form(k, cache).eval(n, cache)
                                   : mean_form_unbarred(k, cache).eval(n, cache);
          if (!(got == want))
            return detail::describe_cell(n, k, std::string("mean via ") + route, got.to_string(),
                                         want.to_string());
        }
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "variance: definite sum = closed forms = pipeline", cells.size(), workers,
      [&cells, &cache](std::size_t i) -> std::optional<std::string> {
        const auto [n, k] = cells[i];
        const Rational want = moment_pipeline(n, k, 2).central_moments[2];
        for (const char* route : {"sum", "sbar", "s"}) {
          const Rational got = route == std::string("sum") ? variance_definite_sum(n, k)
                               : route == std::string("sbar")
                                   ? variance_form(k, cache).eval(n, cache)
                                   : variance_form_unbarred(k, cache).eval(n, cache);
          if (!(got == want))
            return detail::describe_cell(n, k, std::string("variance via ") + route,
                                         got.to_string(), want.to_string());
        }
        return std::nullopt;
      }));

  const auto m34_cells = detail::grid_cells(4, std::min(40L, n_max), k_max);
  report.checks.push_back(detail::scan_cells(
      "m3/m4 closed forms match the pipeline (delta branches included)", m34_cells.size(), workers,
      [&m34_cells, &cache](std::size_t i) -> std::optional<std::string> {
        const auto [n, k] = m34_cells[i];
        const auto table = moment_pipeline(n, k, 4);
        if (const Rational got = eval_closed_form(ClosedFormId::central3, n, k, cache);
            !(got == table.central_moments[3]))
          return detail::describe_cell(n, k, "m3", got.to_string(),
                                       table.central_moments[3].to_string());
        if (const Rational got = eval_closed_form(ClosedFormId::central4, n, k, cache);
            !(got == table.central_moments[4]))
          return detail::describe_cell(n, k, "m4", got.to_string(),
                                       table.central_moments[4].to_string());
        if (k == 1) {
          if (const Rational got = eval_closed_form(ClosedFormId::central4_k1, n, k, cache);
              !(got == table.central_moments[4]))
            return detail::describe_cell(n, k, "m4(k=1)", got.to_string(),
                                         table.central_moments[4].to_string());
        }
        if (k == 2) {
          if (const Rational got = eval_closed_form(ClosedFormId::central4_k2, n, k, cache);
              !(got == table.central_moments[4]))
            return detail::describe_cell(n, k, "m4(k=2)", got.to_string(),
                                         table.central_moments[4].to_string());
        }
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "barred and unbarred closed forms normalize identically", 8, workers,
      [&cache](std::size_t i) -> std::optional<std::string> {
        const long k = static_cast<long>(i) + 1;
        if (!(mean_form_unbarred(k, cache) == mean_form(k, cache)))
          return "k=" + std::to_string(k) + ": mean forms differ structurally";
        if (!(variance_form_unbarred(k, cache) == variance_form(k, cache)))
          return "k=" + std::to_string(k) + ": variance forms differ structurally";
        return std::nullopt;
      }));
  return report;
}

/// Symbolic soundness: generated harmonic expressions evaluate to the exact
/// pipeline values, m1 vanishes, the m4 specializations match, and the
/// monomial weight bound holds.
inline SuiteReport run_symbolic_suite(long n_max = 40, int workers = 1) {
  SuiteReport report{.suite = "symbolic", .checks = {}};
  const HarmonicCache& cache = shared_harmonic_cache();

  std::vector<std::pair<long, long>> kn_cells;  // (k, n)
  for (long k = 1; k <= 3; ++k)
    for (long n = std::max(4L, k + 1); n <= n_max; ++n) kn_cells.emplace_back(k, n);
  // one symbolic construction per k, shared across the scan
  std::map<long, std::vector<HarmonicExpr>> central;
  for (long k = 1; k <= 3; ++k) central.emplace(k, symbolic_central_moments(k, 4));
  report.checks.push_back(detail::scan_cells(
      "symbolic central moments evaluate to pipeline values (k <= 3, l <= 4)", kn_cells.size(),
      workers, [&kn_cells, &central, &cache](std::size_t i) -> std::optional<std::string> {
        const auto [k, n] = kn_cells[i];
        const auto table = moment_pipeline(n, k, 4);
        for (int l = 0; l <= 4; ++l) {
          const Rational got = central.at(k)[static_cast<std::size_t>(l)].eval(n, cache);
          if (!(got == table.central_moments[static_cast<std::size_t>(l)]))
            return detail::describe_cell(n, k, "m_" + std::to_string(l), got.to_string(),
                                         table.central_moments[static_cast<std::size_t>(l)].to_string());
        }
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "m1 normalizes to the zero expression (k <= 8)", 8, workers,
      [](std::size_t i) -> std::optional<std::string> {
        const long k = static_cast<long>(i) + 1;
        if (!symbolic_central_moment(k, 1).is_zero())
          return "k=" + std::to_string(k) + ": m1 did not normalize to zero";
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "m4 specialization displays match the generated expressions", 2, workers,
      [&cache](std::size_t i) -> std::optional<std::string> {
        const long k = static_cast<long>(i) + 1;
        const HarmonicExpr generated = symbolic_central_moment(k, 4);
        const HarmonicExpr display = (k == 1) ? central4_k1_form() : central4_k2_form();
        const auto res = expr_equal(generated, display, cache);
        if (!res.equal) {
          std::string msg = "k=" + std::to_string(k) + ": m4 display differs";
          if (res.witness_n) msg += " at witness n=" + std::to_string(*res.witness_n);
          return msg;
        }
        return std::nullopt;
      }));

  report.checks.push_back(detail::scan_cells(
      "monomial weight bound (k <= 3, l <= 6)", 3, workers,
      [](std::size_t i) -> std::optional<std::string> {
        const long k = static_cast<long>(i) + 1;
        for (int l = 0; l <= 6; ++l) {
          const auto expr = symbolic_central_moment(k, l);
          if (expr.max_weight() > static_cast<unsigned>(l))
            return "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                   ": weight " + std::to_string(expr.max_weight());
        }
        return std::nullopt;
      }));
  return report;
}

/// Asymptotics: Euler-Maclaurin decay rates and the fourth-order remainder
/// of the m2/m3 expansions over a doubling ladder of n.
inline SuiteReport run_asymptotics_suite(int workers = 1, mpfr_prec_t prec = 128) {
  SuiteReport report{.suite = "asymptotics", .checks = {}};
  const HarmonicCache& cache = shared_harmonic_cache();

  report.checks.push_back(detail::scan_cells(
      "euler-maclaurin error decays at the truncation rate", 3, workers,
      [&cache, prec](std::size_t i) -> std::optional<std::string> {
        const std::pair<unsigned, int> combos[] = {{1, 3}, {2, 2}, {3, 3}};
        const auto [o, N] = combos[i];
        const auto series = harmonic_expansion(o, N, prec);
        auto err = [&](long n) {
          return (series.eval(BigFloat::from(n, prec)) -
                  BigFloat::from(cache.sbar(o, static_cast<unsigned long>(n)), prec))
              .abs();
        };
        const BigFloat ratio = err(128) / err(256);
        if (ratio < BigFloat::from(1L << N, prec) || ratio > BigFloat::from(1L << (N + 2), prec))
          return "o=" + std::to_string(o) + " N=" + std::to_string(N) +
                 ": decay ratio " + std::to_string(ratio.to_double());
        return std::nullopt;
      }));

  const std::vector<std::pair<long, int>> expansions = {{1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
  report.checks.push_back(detail::scan_cells(
      "moment expansions have bounded n^4-scaled remainder", expansions.size(), workers,
      [&expansions, &cache, prec](std::size_t i) -> std::optional<std::string> {
        const auto [k, l] = expansions[i];
        const auto series = expand_moment(k, l, 3, prec);
        BigFloat lo(prec), hi(prec);
        for (long n : {200L, 400L, 800L, 1600L}) {
          const Rational exact =
              (l == 2) ? eval_closed_form(ClosedFormId::variance_closed, n, k, cache)
                       : eval_closed_form(ClosedFormId::central3, n, k, cache);
          const BigFloat scaled = (series.eval(BigFloat::from(n, prec)) -
                                   BigFloat::from(exact, prec))
                                      .abs() *
                                  BigFloat::from(n, prec).pow_int(4);
          if (lo.is_zero() || scaled < lo) lo = scaled;
          if (scaled > hi) hi = scaled;
        }
        if (!(hi < lo * BigFloat::from(4L, prec)))
          return "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                 ": scaled remainder varies by more than 4x";
        return std::nullopt;
      }));
  return report;
}

inline SuiteReport run_suite(const std::string& suite, long n_max, long k_max, int workers) {
  if (suite == "oracle") return run_oracle_suite(n_max > 0 ? n_max : 8, k_max, workers);
  if (suite == "closed-forms")
    return run_closed_forms_suite(n_max > 0 ? n_max : 60, k_max, workers);
  if (suite == "symbolic") return run_symbolic_suite(n_max > 0 ? n_max : 40, workers);
  if (suite == "asymptotics") return run_asymptotics_suite(workers);
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace ampass

#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "ampass/distribution.hpp"
#include "ampass/moments.hpp"

namespace ampass {

/// Reproducibility contract: results are a deterministic function of
/// (n, k, trials, seed, worker_count). Worker substream seeds derive from
/// the master seed via SplitMix64; the per-worker generator is the
/// standard-pinned mt19937_64 with hand-rolled unbiased bounded sampling.
struct SimConfig {
  long n = 0;
  long k = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int worker_count = 1;
  int l_max = 4;
};

struct SimResult {
  std::vector<std::uint64_t> histogram;   // counts of wrong-seat totals 0..n
  std::vector<double> raw_moments;        // empirical M_l, l = 0..l_max
  std::vector<double> std_errors;         // standard error of each M_l
  std::vector<double> sigma_deviations;   // |empirical - exact| / SE, when exact is in range
  double chi_square = 0.0;
  int chi_square_df = 0;
  double chi_square_p = 1.0;
  bool flagged = false;                   // chi-square or a >6-sigma moment tripped
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform draw in [0, bound) by rejection on the raw 64-bit stream.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

inline void run_trials(long n, long k, std::uint64_t trials, std::uint64_t worker_seed,
                       std::vector<std::uint64_t>& histogram) {
  std::mt19937_64 rng(worker_seed);
  std::vector<long> free_seats(static_cast<std::size_t>(n));
  std::vector<long> pos(static_cast<std::size_t>(n));
  for (std::uint64_t t = 0; t < trials; ++t) {
    long size = n;
    for (long s = 0; s < n; ++s) {
      free_seats[static_cast<std::size_t>(s)] = s;
      pos[static_cast<std::size_t>(s)] = s;
    }
    auto remove_at = [&](long idx) {
      --size;
      const long moved = free_seats[static_cast<std::size_t>(size)];
      free_seats[static_cast<std::size_t>(idx)] = moved;
      pos[static_cast<std::size_t>(moved)] = idx;
    };
    long wrong = 0;
    for (long passenger = 0; passenger < n; ++passenger) {
      if (passenger >= k) {
        const long own_idx = pos[static_cast<std::size_t>(passenger)];
        if (own_idx < size && free_seats[static_cast<std::size_t>(own_idx)] == passenger) {
          remove_at(own_idx);
          continue;
        }
      }
      const long idx =
          static_cast<long>(bounded_uniform(rng, static_cast<std::uint64_t>(size)));
      const long seat = free_seats[static_cast<std::size_t>(idx)];
      if (seat != passenger) ++wrong;
      remove_at(idx);
    }
    ++histogram[static_cast<std::size_t>(wrong)];
  }
}

}  // namespace detail

inline SimResult simulate(const SimConfig& config) {
  const long n = config.n, k = config.k;
  if (n < 2 || k < 1 || k > n) throw std::domain_error("simulate: require n >= 2, 1 <= k <= n");
  if (config.trials < 1) throw std::domain_error("simulate: require trials >= 1");
  if (config.worker_count < 1) throw std::domain_error("simulate: require worker_count >= 1");
  const int workers = config.worker_count;

  // fixed trial blocks and per-worker substream seeds
  std::uint64_t seed_state = config.seed;
  std::vector<std::uint64_t> worker_seeds(static_cast<std::size_t>(workers));
  for (auto& s : worker_seeds) s = detail::splitmix64(seed_state);
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<std::thread> pool;
  const std::uint64_t base = config.trials / static_cast<std::uint64_t>(workers);
  const std::uint64_t rem = config.trials % static_cast<std::uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t quota = base + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    pool.emplace_back(detail::run_trials, n, k, quota, worker_seeds[static_cast<std::size_t>(w)],
                      std::ref(partial[static_cast<std::size_t>(w)]));
  }
  for (auto& th : pool) th.join();

  SimResult res;
  res.histogram.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& h : partial)
    for (std::size_t r = 0; r < h.size(); ++r) res.histogram[r] += h[r];

  // exact integer power sums over the histogram, then empirical moments
  const int l_max = config.l_max;
  const Rational trials_r(BigInt(static_cast<unsigned long>(config.trials)));
  std::vector<Rational> hat(static_cast<std::size_t>(2 * l_max) + 1);
  for (int l = 0; l <= 2 * l_max; ++l) {
    BigInt acc = 0;
    for (long r = 0; r <= n; ++r) {
      BigInt r_pow = 1;
      for (int i = 0; i < l; ++i) r_pow *= r;
      acc += BigInt(static_cast<unsigned long>(res.histogram[static_cast<std::size_t>(r)])) * r_pow;
    }
    hat[static_cast<std::size_t>(l)] = Rational(acc) / trials_r;
  }
  for (int l = 0; l <= l_max; ++l) {
    const Rational m = hat[static_cast<std::size_t>(l)];
    res.raw_moments.push_back(m.to_double());
    const Rational var = hat[static_cast<std::size_t>(2 * l)] - m * m;
    res.std_errors.push_back(std::sqrt(std::max(0.0, (var / trials_r).to_double())));
  }

  // statistical cross-checks against the exact distribution
  const GeneratingPolynomial gp = generating_polynomial(n, k);
  const auto exact_raw = theta_moments(gp, l_max);
  for (int l = 0; l <= l_max; ++l) {
    const double diff =
        std::fabs(res.raw_moments[static_cast<std::size_t>(l)] -
                  exact_raw[static_cast<std::size_t>(l)].to_double());
    const double se = res.std_errors[static_cast<std::size_t>(l)];
    res.sigma_deviations.push_back(se > 0 ? diff / se : (diff == 0.0 ? 0.0 : 1e30));
  }

  // chi-square with small-expectation buckets pooled
  double chi = 0.0;
  int kept = 0;
  double pooled_obs = 0.0, pooled_exp = 0.0;
  const double trials_d = static_cast<double>(config.trials);
  for (long r = 0; r <= n; ++r) {
    const double expected = gp.probability(r).to_double() * trials_d;
    const double observed = static_cast<double>(res.histogram[static_cast<std::size_t>(r)]);
    if (expected >= 5.0) {
      chi += (observed - expected) * (observed - expected) / expected;
      ++kept;
    } else {
      pooled_obs += observed;
      pooled_exp += expected;
    }
  }
  if (pooled_exp > 0.0) {
    chi += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++kept;
  }
  res.chi_square = chi;
  res.chi_square_df = std::max(1, kept - 1);
  res.chi_square_p = boost::math::gamma_q(res.chi_square_df / 2.0, chi / 2.0);

  res.flagged = res.chi_square_p < 1e-6;
  for (int l = 1; l <= l_max; ++l)
    if (res.sigma_deviations[static_cast<std::size_t>(l)] > 6.0) res.flagged = true;
  return res;
}

}  // namespace ampass

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ampass/simulate.hpp"

using namespace ampass;

TEST_CASE("deterministic under a fixed config", "[simulate]") {
  const SimConfig config{.n = 12, .k = 2, .trials = 20000, .seed = 987654321, .worker_count = 3,
                         .l_max = 3};
  const SimResult a = simulate(config);
  const SimResult b = simulate(config);
  CHECK(a.histogram == b.histogram);
  CHECK(a.raw_moments == b.raw_moments);   // bit-identical doubles
  CHECK(a.std_errors == b.std_errors);
  CHECK(a.chi_square == b.chi_square);
  CHECK(std::accumulate(a.histogram.begin(), a.histogram.end(), std::uint64_t{0}) ==
        config.trials);
}

TEST_CASE("worker count participates in the reproducibility contract", "[simulate]") {
  SimConfig config{.n = 8, .k = 1, .trials = 5000, .seed = 42, .worker_count = 1, .l_max = 2};
  const SimResult one = simulate(config);
  config.worker_count = 4;
  const SimResult four = simulate(config);
  // different substream layout, same statistical target
  CHECK(std::accumulate(four.histogram.begin(), four.histogram.end(), std::uint64_t{0}) ==
        config.trials);
  CHECK_FALSE(one.histogram == four.histogram);
}

TEST_CASE("no mass ever lands on one wrong passenger", "[simulate]") {
  const SimResult res = simulate({.n = 6, .k = 2, .trials = 30000, .seed = 7, .worker_count = 2,
                                  .l_max = 2});
  CHECK(res.histogram[1] == 0);
}

TEST_CASE("two-seat empirical distribution", "[simulate]") {
  const SimResult res = simulate({.n = 2, .k = 1, .trials = 1000000, .seed = 2024,
                                  .worker_count = 2, .l_max = 2});
  const double p0 = static_cast<double>(res.histogram[0]) / 1000000.0;
  CHECK(std::fabs(p0 - 0.5) < 5 * 5e-4);  // sigma = sqrt(1/4 / 1e6)
  CHECK(res.histogram[0] + res.histogram[2] == 1000000);
}

TEST_CASE("single trial lands in the support", "[simulate]") {
  const SimResult res = simulate({.n = 3, .k = 1, .trials = 1, .seed = 5, .worker_count = 1,
                                  .l_max = 1});
  CHECK(res.histogram[0] + res.histogram[2] + res.histogram[3] == 1);
  CHECK(res.histogram[1] == 0);
}

TEST_CASE("moments track the exact values", "[simulate]") {
  const SimResult res = simulate({.n = 20, .k = 3, .trials = 200000, .seed = 31337,
                                  .worker_count = 4, .l_max = 2});
  CHECK(res.raw_moments[0] == 1.0);
  CHECK(res.sigma_deviations[1] < 5.0);
  CHECK(res.sigma_deviations[2] < 5.0);
  CHECK(res.chi_square_p > 1e-6);
  CHECK_FALSE(res.flagged);
}

TEST_CASE("guards", "[simulate]") {
  CHECK_THROWS_AS(simulate({.n = 1, .k = 1, .trials = 10, .seed = 0, .worker_count = 1}),
                  std::domain_error);
  CHECK_THROWS_AS(simulate({.n = 5, .k = 2, .trials = 0, .seed = 0, .worker_count = 1}),
                  std::domain_error);
  CHECK_THROWS_AS(simulate({.n = 5, .k = 2, .trials = 10, .seed = 0, .worker_count = 0}),
                  std::domain_error);
}

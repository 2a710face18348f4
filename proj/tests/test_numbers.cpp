#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "ampass/numbers.hpp"

using namespace ampass;

TEST_CASE("stirling numbers of the second kind", "[numbers]") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(1, 1) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(6, 6) == 1);
  CHECK_THROWS_AS(stirling2(3, 4), std::domain_error);
}

TEST_CASE("stirling transform identity over polynomials", "[numbers]") {
  // sum_r S(l,r) x(x-1)...(x-r+1) == x^l, checked as exact polynomials
  for (unsigned l = 0; l <= 12; ++l) {
    Poly sum;
    for (unsigned r = 0; r <= l; ++r) {
      Poly falling = Poly::constant(Rational(1));
      for (unsigned i = 0; i < r; ++i) falling *= Poly({Rational(-static_cast<long>(i)), Rational(1)});
      sum += Rational(stirling2(l, r)) * falling;
    }
    CHECK(sum == Poly::monomial(Rational(1), l));
  }
}

TEST_CASE("double factorial of odd numbers", "[numbers]") {
  CHECK(double_factorial_odd(1) == 1);
  CHECK(double_factorial_odd(2) == 3);
  CHECK(double_factorial_odd(3) == 15);
  CHECK(double_factorial_odd(4) == 105);
  CHECK(double_factorial_odd(9) == 34459425);
  CHECK_THROWS_AS(double_factorial_odd(0), std::domain_error);
  // (2l-1)!! = (2l-1)! / ((l-1)! 2^(l-1))
  for (unsigned long l = 1; l <= 12; ++l) {
    BigInt rhs = factorial(2 * l - 1) / (factorial(l - 1) << (l - 1));
    CHECK(double_factorial_odd(l) == rhs);
  }
}

TEST_CASE("bernoulli numbers", "[numbers]") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("harmonic numbers", "[numbers]") {
  HarmonicCache cache;
  CHECK(cache.s(1, 4) == Rational(25, 12));
  CHECK(cache.s(2, 2) == Rational(5, 4));
  CHECK(cache.s(1, 9) == Rational::parse("7129/2520"));
  CHECK(cache.s(1, 0) == Rational(0));
  CHECK(cache.sbar(1, 1) == Rational(0));
  CHECK(cache.sbar(1, 10) == Rational::parse("7129/2520"));
  CHECK_THROWS_AS(cache.sbar(1, 0), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> ord(1, 5);
  std::uniform_int_distribution<unsigned long> up(1, 400);
  for (int i = 0; i < 100; ++i) {
    const unsigned o = ord(rng);
    const unsigned long m = up(rng);
    CHECK(cache.s(o, m) - cache.s(o, m - 1) == Rational(1, 1) / Rational(BigInt(m)).pow(o));
  }
}

TEST_CASE("harmonic cache concurrent lookups agree", "[numbers]") {
  HarmonicCache cache;
  std::vector<Rational> results(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&cache, &results, t] { results[static_cast<std::size_t>(t)] = cache.s(2, 300); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == results[0]);
}

TEST_CASE("pochhammer polynomial", "[numbers]") {
  CHECK(pochhammer_poly(1, 0) == Poly::constant(Rational(1)));
  CHECK(pochhammer_poly(1, 1) == Poly({Rational(2), Rational(1)}));
  CHECK(pochhammer_poly(1, 2) == Poly({Rational(6), Rational(5), Rational(1)}));
  // evaluated at w = 1: (r+2)(r+3)...(r+len+1)
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<unsigned long> rr(0, 9), len(0, 30);
  for (int i = 0; i < 50; ++i) {
    const unsigned long r = rr(rng), m = len(rng);
    BigInt prod = 1;
    for (unsigned long t = 0; t < m; ++t) prod *= BigInt(r + 2 + t);
    CHECK(pochhammer_poly(r, m).eval_one() == Rational(prod));
  }
}

TEST_CASE("factorial and binomial", "[numbers]") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 7) == 0);
}

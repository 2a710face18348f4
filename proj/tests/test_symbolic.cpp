#include <catch2/catch_amalgamated.hpp>

#include "ampass/moments.hpp"
#include "ampass/symbolic.hpp"

using namespace ampass;

namespace {

RationalFunction inv_n() {
  return {Poly::constant(Rational(1)), Poly({Rational(0), Rational(1)})};
}

// h_r(w) = (1+rw) w^r (2+rw)_{n-k-1} as an exact polynomial in w for numeric n.
Poly factor_product(long n, long k, long r) {
  Poly h = Poly({Rational(1), Rational(r)});
  h *= Poly::monomial(Rational(1), static_cast<std::size_t>(r));
  for (long i = 0; i + k + 1 < n; ++i) h *= Poly({Rational(2 + i), Rational(r)});
  return h;
}

}  // namespace

TEST_CASE("power sums: constant factor contributes nothing", "[symbolic]") {
  const auto p = log_derivative_power_sums(0, 2, 4);
  for (int j = 1; j <= 4; ++j) CHECK(p[static_cast<std::size_t>(j)].is_zero());
}

TEST_CASE("power sums: r=1, k=1, j=1 telescopes", "[symbolic]") {
  const auto p = log_derivative_power_sums(1, 1, 1);
  CHECK(p[1] == HarmonicExpr::harmonic(1) + HarmonicExpr(inv_n()));
}

TEST_CASE("power sums match direct polynomial differentiation", "[symbolic]") {
  // slow oracle: l-fold derivative of the explicit factor product at w=1
  // equals h(1) * B_l(P_1, ..., P_l) evaluated at the same numeric n
  HarmonicCache cache;
  auto lift = [](const BigInt& v) { return Rational(v); };
  for (long n : {5L, 10L, 17L})
    for (long k : {1L, 2L, 3L})
      for (long r = 0; r <= k; ++r) {
        const auto sym = log_derivative_power_sums(r, k, 3);
        std::vector<Rational> p_num(4, Rational(0));
        for (int j = 1; j <= 3; ++j)
          p_num[static_cast<std::size_t>(j)] = sym[static_cast<std::size_t>(j)].eval(n, cache);
        const auto bell = complete_bell_polynomials(p_num, 3, lift);
        Poly h = factor_product(n, k, r);
        const Rational h1 = h.eval_one();
        for (int j = 1; j <= 3; ++j) {
          h = h.derivative();
          INFO("n=" << n << " k=" << k << " r=" << r << " j=" << j);
          CHECK(h.eval_one() == h1 * bell[static_cast<std::size_t>(j)]);
        }
      }
}

TEST_CASE("symbolic exponential moments: reference forms", "[symbolic]") {
  CHECK(symbolic_exponential_moment(1, 0) == HarmonicExpr(Rational(1)));
  CHECK(symbolic_exponential_moment(1, 1) == HarmonicExpr::harmonic(1));
  HarmonicCache cache;
  CHECK(symbolic_exponential_moment(2, 1).eval(10, cache) == Rational::parse("5869/1260"));
}

TEST_CASE("symbolic central moment k=1 l=2", "[symbolic]") {
  const HarmonicExpr expected =
      RationalFunction(Poly({Rational(2), Rational(1)}), Poly({Rational(0), Rational(1)})) *
          HarmonicExpr::harmonic(1) -
      HarmonicExpr::harmonic(2);
  CHECK(symbolic_central_moment(1, 2) == expected);
}

TEST_CASE("first central moment normalizes to zero", "[symbolic]") {
  for (long k = 1; k <= 8; ++k) CHECK(symbolic_central_moment(k, 1).is_zero());
}

TEST_CASE("soundness against the exact pipeline", "[symbolic]") {
  HarmonicCache cache;
  for (long k = 1; k <= 3; ++k) {
    const auto central = symbolic_central_moments(k, 4);
    const auto raw = symbolic_raw_moments(k, 4);
    const auto expm = symbolic_exponential_moments(k, 4);
    for (long n = std::max(4L, k + 1); n <= 20; ++n) {
      const auto t = moment_pipeline(n, k, 4);
      for (int l = 0; l <= 4; ++l) {
        const auto i = static_cast<std::size_t>(l);
        INFO("k=" << k << " n=" << n << " l=" << l);
        CHECK(expm[i].eval(n, cache) == t.exp_moments[i]);
        CHECK(raw[i].eval(n, cache) == t.raw_moments[i]);
        CHECK(central[i].eval(n, cache) == t.central_moments[i]);
      }
    }
  }
}

TEST_CASE("monomial weight bound", "[symbolic]") {
  for (long k = 1; k <= 3; ++k)
    for (int l = 0; l <= 6; ++l) {
      INFO("k=" << k << " l=" << l);
      CHECK(symbolic_central_moment(k, l).max_weight() <= static_cast<unsigned>(l));
    }
}

TEST_CASE("order guards", "[symbolic]") {
  CHECK_THROWS_AS(symbolic_central_moment(9, 2), guard_error);
  CHECK_THROWS_AS(symbolic_central_moment(2, 9), guard_error);
  CHECK_THROWS_AS(symbolic_central_moment(0, 2), guard_error);
  CHECK_THROWS_AS(log_derivative_power_sums(3, 2, 2), std::domain_error);
}

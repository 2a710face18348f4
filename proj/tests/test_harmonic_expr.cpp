#include <catch2/catch_amalgamated.hpp>

#include "ampass/harmonic_expr.hpp"

using namespace ampass;

namespace {
RationalFunction inv_pow(long shift, unsigned j) {
  Poly den = Poly::constant(Rational(1));
  for (unsigned u = 0; u < j; ++u) den *= Poly::linear(Rational(shift));
  return {Poly::constant(Rational(1)), den};
}
}  // namespace

TEST_CASE("shift normalization", "[harmonic-expr]") {
  // S_j(n) = Sb_j(n) + 1/n^j
  CHECK(HarmonicExpr::shifted_harmonic(2, 0) ==
        HarmonicExpr::harmonic(2) + HarmonicExpr(inv_pow(0, 2)));
  // S_j(n-1) = Sb_j(n)
  CHECK(HarmonicExpr::shifted_harmonic(1, -1) == HarmonicExpr::harmonic(1));
  // S_j(n-3) = Sb_j(n) - 1/(n-1)^j - 1/(n-2)^j
  CHECK(HarmonicExpr::shifted_harmonic(1, -3) ==
        HarmonicExpr::harmonic(1) - HarmonicExpr(inv_pow(-1, 1)) - HarmonicExpr(inv_pow(-2, 1)));
  // S_j(n+1) = Sb_j(n) + 1/n^j + 1/(n+1)^j
  CHECK(HarmonicExpr::shifted_harmonic(3, 1) ==
        HarmonicExpr::harmonic(3) + HarmonicExpr(inv_pow(0, 3)) + HarmonicExpr(inv_pow(1, 3)));
}

TEST_CASE("shifted harmonics evaluate consistently", "[harmonic-expr]") {
  HarmonicCache cache;
  for (long c : {-3L, -1L, 0L, 2L})
    for (unsigned j : {1u, 2u})
      for (long n = 5; n <= 12; ++n) {
        INFO("j=" << j << " c=" << c << " n=" << n);
        CHECK(HarmonicExpr::shifted_harmonic(j, c).eval(n, cache) ==
              cache.s(j, static_cast<unsigned long>(n + c)));
      }
}

TEST_CASE("arithmetic and cancellation", "[harmonic-expr]") {
  const HarmonicExpr s1 = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2 = HarmonicExpr::harmonic(2);
  CHECK((s1 - s1).is_zero());
  CHECK((s1 + s2) - s2 == s1);
  const HarmonicExpr prod = s1 * s1;
  CHECK(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->first == HarmonicExpr::Exponents{2});
  CHECK(s1.pow(3).max_weight() == 3);
  CHECK((s1 * s2).max_weight() == 3);
  CHECK(s2.max_weight() == 2);
  CHECK(HarmonicExpr(Rational(5)).max_weight() == 0);
}

TEST_CASE("evaluation", "[harmonic-expr]") {
  HarmonicCache cache;
  // ((n+2)/n) Sb_1(n) - Sb_2(n) at n = 3: (5/3)(3/2) - 5/4 = 5/4
  const HarmonicExpr v = RationalFunction(Poly({Rational(2), Rational(1)}), Poly({Rational(0), Rational(1)})) *
                             HarmonicExpr::harmonic(1) -
                         HarmonicExpr::harmonic(2);
  CHECK(v.eval(3, cache) == Rational(5, 4));
  CHECK_THROWS_AS(v.eval(0, cache), std::domain_error);
}

TEST_CASE("normalization is idempotent", "[harmonic-expr]") {
  const HarmonicExpr e = HarmonicExpr::shifted_harmonic(1, -2) * HarmonicExpr::harmonic(2) +
                         HarmonicExpr(Rational(7, 3));
  CHECK(e.normalized() == e);
  CHECK(e.normalized().normalized() == e.normalized());
}

TEST_CASE("structural equality with witness", "[harmonic-expr]") {
  const HarmonicExpr a = HarmonicExpr::harmonic(1) * HarmonicExpr(Rational(2));
  CHECK(expr_equal(a, a).equal);
  // S_1(n) vs Sb_1(n): differ by 1/n, witness expected
  const auto res = expr_equal(HarmonicExpr::shifted_harmonic(1, 0), HarmonicExpr::harmonic(1));
  CHECK_FALSE(res.equal);
  REQUIRE(res.witness_n.has_value());
  CHECK(*res.witness_n >= 2);
}

TEST_CASE("rendering is deterministic and sorted", "[harmonic-expr]") {
  const HarmonicExpr e = HarmonicExpr::harmonic(2) + HarmonicExpr::harmonic(1) * HarmonicExpr::harmonic(1) +
                         HarmonicExpr(Rational(1, 2));
  CHECK(e.to_string() == "1/2 + 1*Sb2(n) + 1*Sb1(n)^2");  // keys sort lexicographically
  CHECK(HarmonicExpr::zero().to_string() == "0");
}

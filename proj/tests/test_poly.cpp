#include <catch2/catch_amalgamated.hpp>

#include "ampass/poly.hpp"

using ampass::Poly;
using ampass::Rational;

namespace {
Poly from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}
}  // namespace

TEST_CASE("derivative and theta", "[poly]") {
  const Poly p = from_longs({2, 0, 3});  // 2 + 3w^2
  CHECK(p.derivative() == from_longs({0, 6}));
  CHECK(p.theta() == from_longs({0, 0, 6}));
  CHECK(Poly().derivative().is_zero());
}

TEST_CASE("evaluation", "[poly]") {
  // (2 + 3w^2 + w^3)/6 at w = 1 sums to 1
  const Poly p = from_longs({2, 0, 3, 1}) * Rational(1, 6);
  CHECK(p.eval(Rational(1)) == Rational(1));
  CHECK(p.eval_one() == Rational(1));
  CHECK(p.eval(Rational(1, 2)) == Rational(2 * 8 + 3 * 2 + 1, 48));
}

TEST_CASE("product", "[poly]") {
  CHECK(from_longs({1, -1}) * from_longs({1, 1}) == from_longs({1, 0, -1}));  // (1-w)(1+w)
  CHECK((Poly() * from_longs({1, 2})).is_zero());
}

TEST_CASE("zero and trimming", "[poly]") {
  CHECK(Poly().degree() == -1);
  CHECK(from_longs({1, 2, 0, 0}).degree() == 1);
  CHECK((from_longs({1, 2}) - from_longs({1, 2})).is_zero());
  CHECK_FALSE(from_longs({0, 0, 5}).leading().is_zero());
}

TEST_CASE("divmod and gcd", "[poly]") {
  const Poly num = from_longs({-1, 0, 1});  // n^2 - 1
  const Poly den = from_longs({-1, 1});     // n - 1
  const auto [q, r] = poly_divmod(num, den);
  CHECK(q == from_longs({1, 1}));
  CHECK(r.is_zero());
  CHECK(ampass::poly_gcd(num, den) == den);  // already monic
  CHECK(ampass::poly_gcd(from_longs({0, 2}), from_longs({0, 0, 3})) == from_longs({0, 1}));
  CHECK_THROWS_AS(poly_divmod(num, Poly()), std::domain_error);
}

TEST_CASE("rendering is deterministic", "[poly]") {
  CHECK(from_longs({2, -3, 1}).to_string("n") == "n^2 - 3*n + 2");
  CHECK(Poly().to_string("n") == "0");
  CHECK((from_longs({0, 1}) * Rational(-1, 2)).to_string("n") == "-1/2*n");
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ampass/rational.hpp"

using ampass::BigInt;
using ampass::Rational;

TEST_CASE("basic arithmetic", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational::parse("5869/1260") * Rational::parse("1260/5869") == Rational(1));
  CHECK(Rational::parse("50293/2100") - Rational::parse("5869/1260") ==
        Rational::parse("60767/3150"));
  CHECK(rational_arith(Rational(1, 2), Rational(1, 3), ampass::ArithOp::add) == Rational(5, 6));
  CHECK(rational_arith(Rational(7), Rational(2), ampass::ArithOp::div) == Rational(7, 2));
}

TEST_CASE("canonical form", "[rational]") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");  // sign moves to the numerator
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(42, 7).to_string() == "6");     // denominator 1 omitted
  const Rational diff = Rational::parse("50293/2100") - Rational::parse("5869/1260");
  CHECK(diff.to_string() == "8681/450");         // fully reduced
  CHECK(diff.den() > 0);
  CHECK(gcd(BigInt(diff.num()), diff.den()) == 1);
}

TEST_CASE("division by zero is an arithmetic error", "[rational]") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(rational_arith(Rational(1), Rational(0), ampass::ArithOp::div),
                  std::domain_error);
}

TEST_CASE("parse round trip is the identity", "[rational]") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.to_string()) == r);
  }
  CHECK(Rational::parse("5869/1260").to_string() == "5869/1260");
  CHECK(Rational::parse("-702653939/1000188000").to_string() == "-702653939/1000188000");
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("pow and ordering", "[rational]") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 10) == Rational(1, 2));
}

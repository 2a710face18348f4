#include <catch2/catch_amalgamated.hpp>

#include "ampass/closed_forms.hpp"
#include "ampass/moments.hpp"

using namespace ampass;

TEST_CASE("definite sums reproduce reference values", "[closed-forms]") {
  CHECK(mean_definite_sum(10, 2) == Rational::parse("5869/1260"));
  CHECK(mean_definite_sum(2, 1) == Rational(1));
  CHECK(variance_definite_sum(2, 1) == Rational(1));
  CHECK(variance_definite_sum(10, 2) == Rational::parse("3576347/1587600"));
  CHECK(eval_definite_sum(ClosedFormId::mean_sum, 10, 2) == Rational::parse("5869/1260"));
  CHECK_THROWS_AS(eval_definite_sum(ClosedFormId::central3, 5, 2), std::invalid_argument);
}

TEST_CASE("closed forms reproduce reference values", "[closed-forms]") {
  CHECK(eval_closed_form(ClosedFormId::mean_closed, 10, 2) == Rational::parse("5869/1260"));
  CHECK(eval_closed_form(ClosedFormId::central3, 10, 2) ==
        Rational::parse("-702653939/1000188000"));
  CHECK(eval_closed_form(ClosedFormId::variance_closed, 3, 1) == Rational(5, 4));
}

TEST_CASE("barred and unbarred variants normalize to the same expression", "[closed-forms]") {
  HarmonicCache cache;
  for (long k = 1; k <= 6; ++k) {
    INFO("k=" << k);
    CHECK(mean_form_unbarred(k, cache) == mean_form(k, cache));
    CHECK(variance_form_unbarred(k, cache) == variance_form(k, cache));
    CHECK(expr_equal(variance_form_unbarred(k, cache), variance_form(k, cache), cache).equal);
  }
}

TEST_CASE("mutual concordance with the pipeline", "[closed-forms]") {
  HarmonicCache cache;
  for (long n = 2; n <= 25; ++n)
    for (long k = 1; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      const auto t = moment_pipeline(n, k, 4);
      CHECK(mean_definite_sum(n, k) == t.raw_moments[1]);
      CHECK(eval_closed_form(ClosedFormId::mean_closed, n, k, cache) == t.raw_moments[1]);
      CHECK(variance_definite_sum(n, k) == t.central_moments[2]);
      CHECK(eval_closed_form(ClosedFormId::variance_closed, n, k, cache) == t.central_moments[2]);
      if (n >= 4) {
        CHECK(eval_closed_form(ClosedFormId::central3, n, k, cache) == t.central_moments[3]);
        CHECK(eval_closed_form(ClosedFormId::central4, n, k, cache) == t.central_moments[4]);
        if (k == 1)
          CHECK(eval_closed_form(ClosedFormId::central4_k1, n, k, cache) == t.central_moments[4]);
        if (k == 2)
          CHECK(eval_closed_form(ClosedFormId::central4_k2, n, k, cache) == t.central_moments[4]);
      }
    }
}

TEST_CASE("raw-moment display forms: documented relationships", "[closed-forms]") {
  // raw2_form + k(k-1)/((n-1)n) equals the raw second moment exactly;
  // the form itself is exact only at k = 1. raw3_form reproduces the
  // third central moment, not the third raw moment.
  HarmonicCache cache;
  for (long n = 2; n <= 18; ++n)
    for (long k = 1; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      const auto t = moment_pipeline(n, k, 3);
      const Rational boundary(k * (k - 1), n * (n - 1));
      CHECK(eval_closed_form(ClosedFormId::raw2_form, n, k, cache) + boundary == t.raw_moments[2]);
      if (k == 1)
        CHECK(eval_closed_form(ClosedFormId::raw2_form, n, k, cache) == t.raw_moments[2]);
      if (n >= 3)
        CHECK(eval_closed_form(ClosedFormId::raw3_form, n, k, cache) == t.central_moments[3]);
    }
}

TEST_CASE("delta indicator", "[closed-forms]") {
  CHECK(delta_indicator(0) == 1);
  CHECK(delta_indicator(5) == 1);
  CHECK(delta_indicator(-1) == 0);
}

TEST_CASE("delta branch activates exactly at k = 3", "[closed-forms]") {
  HarmonicCache cache;
  // boundary term of the third central moment: 3(k-2)k(n-k)/((n-1)^2 n)
  auto boundary = [](long n, long k) {
    return Rational(3 * (k - 2) * k * (n - k), (n - 1) * (n - 1) * n);
  };
  CHECK(boundary(9, 2) == Rational(0));  // vanishing factor at k = 2
  for (long n = 5; n <= 12; ++n) {
    const auto t = moment_pipeline(n, 3, 3);
    CHECK_FALSE(boundary(n, 3) == Rational(0));
    CHECK(eval_closed_form(ClosedFormId::central3, n, 3, cache) == t.central_moments[3]);
    CHECK_FALSE(eval_closed_form(ClosedFormId::central3, n, 3, cache) - boundary(n, 3) ==
                t.central_moments[3]);
  }
}

TEST_CASE("per-formula domain guards name the offending factor", "[closed-forms]") {
  CHECK_THROWS_MATCHES(eval_closed_form(ClosedFormId::central3, 2, 1), std::domain_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("(n - 2)")));
  CHECK_THROWS_MATCHES(eval_closed_form(ClosedFormId::central4, 3, 1), std::domain_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("(n - 3)")));
  CHECK_THROWS_AS(eval_closed_form(ClosedFormId::central4_k1, 10, 2), std::domain_error);
  CHECK_THROWS_AS(eval_closed_form(ClosedFormId::central4_k2, 10, 1), std::domain_error);
  CHECK_THROWS_AS(eval_closed_form(ClosedFormId::mean_closed, 1, 1), std::domain_error);
  CHECK_THROWS_AS(eval_closed_form(ClosedFormId::mean_closed, 5, 6), std::domain_error);
}

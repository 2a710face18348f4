#pragma once

#include <string>

#include "ampass/harmonic_expr.hpp"

namespace ampass {

/// Evaluators for the reference closed forms of the low-order moments.
/// Each id maps to exactly one evaluator. The raw2/raw3 forms are kept
/// verbatim as cross-check targets; see the unit tests for the exact
/// relationship each one satisfies against the pipeline (raw3_form
/// reproduces the third central moment, and raw2_form differs from the
/// second raw moment by a k(k-1)/((n-1)n) boundary term for k >= 2).
enum class ClosedFormId {
  mean_sum,        // single definite sum for E(X_n)
  variance_sum,    // double definite sum for V(X_n)
  mean_closed,     // E in Sb form
  variance_closed, // V in Sb form
  raw2_form,       // second-raw-moment display form
  raw3_form,       // third-raw-moment display form
  central3,        // m_3
  central4,        // m_4
  central4_k1,     // m_4 specialized to k = 1
  central4_k2,     // m_4 specialized to k = 2
};

/// delta(x) = 1 if x >= 0 else 0; gates the boundary terms produced by the
/// truncated summation lower bound max(0, k-l).
inline long delta_indicator(long x) { return x >= 0 ? 1 : 0; }

namespace detail {

inline Poly np(std::vector<Rational> ascending) { return Poly(std::move(ascending)); }

inline void check_nk(long n, long k) {
  if (n < 2) throw std::domain_error("closed form: require n >= 2");
  if (k < 1 || k > n) throw std::domain_error("closed form: require 1 <= k <= n");
}

}  // namespace detail

/// E(X_n) as the literal definite sum k(n-1)/n + sum_{i=1}^{n-k} k/(1-i+n).
inline Rational mean_definite_sum(long n, long k) {
  detail::check_nk(n, k);
  Rational acc(k * (n - 1), n);
  for (long i = 1; i <= n - k; ++i) acc += Rational(k, 1 - i + n);
  return acc;
}

/// V(X_n) as the literal single-plus-double definite sum.
inline Rational variance_definite_sum(long n, long k) {
  detail::check_nk(n, k);
  Rational acc(k * (n - 1), n * n);
  for (long i = 1; i <= n - k; ++i) {
    const Rational inner = Rational(1 - i - k + n) *
                           (Rational(1) - Rational(1 - i - k + n, 1 - i + n));
    acc += inner / Rational(1 - i + n);
  }
  Rational bracket(k * (k - 1), 2 * (n - 1) * n * n);
  for (long i = 1; i <= k; ++i)
    for (long j = 1; j <= n - k; ++j)
      bracket += (Rational(1 - j - k + n, -j + n) - Rational(1 - j - k + n, 1 - j + n)) /
                 Rational(n);
  return acc + Rational(2) * bracket;
}

// ---------------------------------------------------------------------------
// Closed forms as harmonic expressions in n for fixed numeric k. Constants
// Sb_j(k) fold into the coefficients; every S-bar argument is anchored at n.
// ---------------------------------------------------------------------------

/// -1 + k - k Sb1(k) + k Sb1(n)
inline HarmonicExpr mean_form(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k);
  return HarmonicExpr(Rational(k - 1) - K * cache.sbar(1, k)) +
         RationalFunction(K) * HarmonicExpr::harmonic(1);
}

/// k(n-1)/n - k S1(k) + k S1(n); the unbarred twin of mean_form.
inline HarmonicExpr mean_form_unbarred(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k);
  using detail::np;
  return HarmonicExpr(RationalFunction(np({-K, K}), np({Rational(0), Rational(1)}))) -
         HarmonicExpr(K * cache.s(1, k)) +
         RationalFunction(K) * HarmonicExpr::shifted_harmonic(1, 0);
}

/// (k-1)k/((n-1)n) - k(2+n)Sb1(k)/n + k(2+n)Sb1(n)/n + k^2 Sb2(k) - k^2 Sb2(n)
inline HarmonicExpr variance_form(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k), K2 = Rational(k) * Rational(k);
  using detail::np;
  const RationalFunction k2n_over_n(np({2 * K, K}), np({Rational(0), Rational(1)}));
  return HarmonicExpr(RationalFunction(np({(K - 1) * K}), np({Rational(0), Rational(-1), Rational(1)}))) -
         k2n_over_n * HarmonicExpr(cache.sbar(1, k)) +
         k2n_over_n * HarmonicExpr::harmonic(1) +
         HarmonicExpr(K2 * cache.sbar(2, k)) -
         RationalFunction(K2) * HarmonicExpr::harmonic(2);
}

/// The same variance in unbarred harmonics with the long rational prefactor.
inline HarmonicExpr variance_form_unbarred(long k,
                                           const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k), K2 = Rational(k) * Rational(k);
  using detail::np;
  // (2k - k^2 - 2n - 2kn + 2k^2 n + 2n^2 - kn^2) / ((n-1) n^2)
  const RationalFunction head(np({2 * K - K2, Rational(-2) - 2 * K + 2 * K2, Rational(2) - K}),
                              np({Rational(0), Rational(0), Rational(-1), Rational(1)}));
  const RationalFunction k2n_over_n(np({2 * K, K}), np({Rational(0), Rational(1)}));
  return HarmonicExpr(head) - k2n_over_n * HarmonicExpr(cache.s(1, k)) +
         k2n_over_n * HarmonicExpr::shifted_harmonic(1, 0) +
         HarmonicExpr(K2 * cache.s(2, k)) -
         RationalFunction(K2) * HarmonicExpr::shifted_harmonic(2, 0);
}

/// Second-raw-moment display form (verbatim; see the header note).
inline HarmonicExpr raw2_form(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k), K2 = K * K;
  const Rational s1k = cache.sbar(1, k), s2k = cache.sbar(2, k);
  using detail::np;
  const Poly den_n = np({Rational(0), Rational(1)});
  const RationalFunction a(np({-2 * K, K - 2 * K2}), den_n);  // (-2k + (k - 2k^2) n)/n
  const RationalFunction b(np({2 * K, 2 * K2 - K}), den_n);   // (2k + (2k^2 - k) n)/n
  const HarmonicExpr s1n = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2n = HarmonicExpr::harmonic(2);
  return HarmonicExpr(Rational((k - 1) * (k - 1))) +
         a * HarmonicExpr(s1k) + HarmonicExpr(K2 * s1k * s1k) + b * s1n -
         HarmonicExpr(2 * K2 * s1k) * s1n + RationalFunction(K2) * (s1n * s1n) +
         HarmonicExpr(K2 * s2k) - RationalFunction(K2) * s2n;
}

/// Third-raw-moment display form (verbatim; see the header note).
inline HarmonicExpr raw3_form(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k), K2 = K * K, K3 = K2 * K;
  const Rational s1k = cache.sbar(1, k), s2k = cache.sbar(2, k), s3k = cache.sbar(3, k);
  using detail::np;
  const Poly den_n = np({Rational(0), Rational(1)});
  const Poly den_n1n = np({Rational(0), Rational(-1), Rational(1)});        // (n-1) n
  const Poly den_n2n1n = np({Rational(0), Rational(2), Rational(-3), Rational(1)});  // (n-2)(n-1) n
  const Poly den_n1sq_n = np({Rational(0), Rational(1), Rational(-2), Rational(1)}); // (n-1)^2 n
  const HarmonicExpr s1n = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2n = HarmonicExpr::harmonic(2);
  const HarmonicExpr s3n = HarmonicExpr::harmonic(3);
  // k(6k - n^2 - 5n)/((n-1)n)
  const RationalFunction c1(np({6 * K2, -5 * K, -K}), den_n1n);
  // 3k(kn + 2k - 1)/n
  const RationalFunction c2(np({3 * K * (2 * K - 1), 3 * K2}), den_n);
  HarmonicExpr out = RationalFunction(2 * K3) * s3n + HarmonicExpr(-2 * K3 * s3k);
  out -= c1 * s1n;
  out -= RationalFunction(Rational(3) * K) * (s1n * s1n) *
         RationalFunction(Poly::constant(Rational(1)), den_n);
  out += HarmonicExpr(-3 * K * s1k * s1k) * RationalFunction(Poly::constant(Rational(1)), den_n);
  out += HarmonicExpr(s1k) * (RationalFunction(np({6 * K}), den_n) * s1n + c1);
  out += HarmonicExpr(s2k) * c2;
  out -= c2 * s2n;
  out -= HarmonicExpr(RationalFunction(np({Rational((k - 2) * (k - 1) * k)}), den_n2n1n));
  if (delta_indicator(k - 2) == 1)
    out += HarmonicExpr(RationalFunction(np({3 * Rational((k - 2) * k) * Rational(-k),
                                             3 * Rational((k - 2) * k)}),
                                         den_n1sq_n));
  return out;
}

/// m_3(n, k): the third central moment closed form, delta branch included.
inline HarmonicExpr central3_form(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k), K2 = K * K, K3 = K2 * K;
  const Rational s1k = cache.sbar(1, k), s2k = cache.sbar(2, k), s3k = cache.sbar(3, k);
  using detail::np;
  const Poly den_n = np({Rational(0), Rational(1)});
  const Poly den_n1n = np({Rational(0), Rational(-1), Rational(1)});
  const Poly den_n2n1n = np({Rational(0), Rational(2), Rational(-3), Rational(1)});
  const Poly den_n1sq_n = np({Rational(0), Rational(1), Rational(-2), Rational(1)});
  const HarmonicExpr s1n = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2n = HarmonicExpr::harmonic(2);
  const HarmonicExpr s3n = HarmonicExpr::harmonic(3);
  const RationalFunction inv_n(Poly::constant(Rational(1)), den_n);
  // (6k^2 - 5kn - kn^2)/((n-1)n) and 3(-k + 2k^2 + k^2 n)/n
  const RationalFunction c1(np({6 * K2, -5 * K, -K}), den_n1n);
  const RationalFunction c2(np({3 * (2 * K2 - K), 3 * K2}), den_n);
  HarmonicExpr out(RationalFunction(np({-Rational((k - 2) * (k - 1) * k)}), den_n2n1n));
  out += RationalFunction(2 * K3) * s3n;
  out += c1 * HarmonicExpr(s1k);
  out -= RationalFunction(3 * K * s1k * s1k) * inv_n;
  out -= c1 * s1n;
  out += RationalFunction(6 * K * s1k) * inv_n * s1n;
  out -= RationalFunction(3 * K) * inv_n * (s1n * s1n);
  out += c2 * HarmonicExpr(s2k);
  out += HarmonicExpr(-2 * K3 * s3k);
  out -= c2 * s2n;
  if (delta_indicator(k - 2) == 1)
    out += HarmonicExpr(RationalFunction(np({-3 * Rational((k - 2) * k * k),
                                             3 * Rational((k - 2) * k)}),
                                         den_n1sq_n));
  return out;
}

/// m_4(n, k): the fourth central moment closed form with both delta branches.
inline HarmonicExpr central4_form(long k, const HarmonicCache& cache = shared_harmonic_cache()) {
  const Rational K(k), K2 = K * K, K3 = K2 * K, K4 = K3 * K;
  const Rational s1k = cache.sbar(1, k), s2k = cache.sbar(2, k);
  const Rational s3k = cache.sbar(3, k), s4k = cache.sbar(4, k);
  using detail::np;
  const Poly den_n = np({Rational(0), Rational(1)});
  const Poly den_n1n = np({Rational(0), Rational(-1), Rational(1)});
  const Poly den_n2n1n = np({Rational(0), Rational(2), Rational(-3), Rational(1)});
  // (n-3)(n-2)(n-1)n = n^4 - 6n^3 + 11n^2 - 6n
  const Poly den_n3n2n1n = np({Rational(0), Rational(-6), Rational(11), Rational(-6), Rational(1)});
  // (n-2)^2 (n-1)^2 n = n^5 - 6n^4 + 13n^3 - 12n^2 + 4n
  const Poly den_sq22 = np({Rational(0), Rational(4), Rational(-12), Rational(13), Rational(-6), Rational(1)});
  // (n-1)^3 n = n^4 - 3n^3 + 3n^2 - n
  const Poly den_n1cb_n = np({Rational(0), Rational(-1), Rational(3), Rational(-3), Rational(1)});
  const Poly den_n1sq_n = np({Rational(0), Rational(1), Rational(-2), Rational(1)});
  const HarmonicExpr s1n = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2n = HarmonicExpr::harmonic(2);
  const HarmonicExpr s3n = HarmonicExpr::harmonic(3);
  const HarmonicExpr s4n = HarmonicExpr::harmonic(4);
  const RationalFunction inv_n(Poly::constant(Rational(1)), den_n);

  // shared coefficient families
  const RationalFunction A(np({6 * K - 12 * K2 + 30 * K3 - 6 * K4, 18 * K - 29 * K2, -7 * K2}),
                           den_n1n);                       // goes with Sb2(n); negated with Sb2(k)
  const RationalFunction B(np({-52 * K + 36 * K2 - 12 * K3, 40 * K, -11 * K, -K}), den_n2n1n);
  const RationalFunction C(np({3 * (-2 * K + 4 * K2), 3 * (-6 * K + 3 * K2), 3 * K2}), den_n1n);
  const RationalFunction D(np({2 * K - 4 * K2 + 2 * K3, K3}), den_n);  // (2k-4k^2+2k^3+k^3 n)/n
  const RationalFunction E(np({2 * K - 6 * K2 + 6 * K3, 3 * K3}), den_n);

  HarmonicExpr out(RationalFunction(np({Rational((k - 3) * (k - 2) * (k - 1) * k)}), den_n3n2n1n));
  out += A * s2n;
  out += (-A) * HarmonicExpr(s2k);
  out += B * HarmonicExpr(s1k);
  out += (-B) * s1n;
  out += C * HarmonicExpr(s1k * s1k);
  out -= RationalFunction(4 * K * s1k * s1k * s1k) * inv_n;
  out += RationalFunction(3 * K4) * (s2n * s2n);
  out += RationalFunction(Rational(-2) * s1k) * C * s1n;
  out += RationalFunction(12 * K * s1k * s1k) * inv_n * s1n;
  out += C * (s1n * s1n);
  out -= RationalFunction(12 * K * s1k) * inv_n * (s1n * s1n);
  out += RationalFunction(4 * K) * inv_n * (s1n * s1n * s1n);
  out += HarmonicExpr(3 * K4 * s2k * s2k);  // restored companion of the Sb2(n)^2 square
  out -= RationalFunction(6 * s1k * s2k) * D;
  out += RationalFunction(6 * s2k) * D * s1n;
  out -= RationalFunction(4 * s3k) * E;
  out += HarmonicExpr(6 * K4 * s4k);
  out += RationalFunction(6 * s1k) * D * s2n;
  out -= RationalFunction(Rational(6)) * D * (s1n * s2n);
  out -= RationalFunction(6 * K4 * s2k) * s2n;
  out += RationalFunction(Rational(4)) * E * s3n;
  out -= RationalFunction(6 * K4) * s4n;
  if (delta_indicator(k - 3) == 1)
    out -= HarmonicExpr(RationalFunction(
        np({2 * (-4 * K + 36 * K2 - 30 * K3 + 6 * K4),
            2 * (-24 * K + K2 + 15 * K3 - 4 * K4),
            2 * (16 * K - 15 * K2 + 3 * K3)}),
        den_sq22));
  if (delta_indicator(k - 2) == 1) {
    const RationalFunction G(np({6 * (-2 * K - 5 * K2 + 3 * K3), 6 * (10 * K - 7 * K2 + K3)}),
                             den_n1sq_n);
    out -= G * HarmonicExpr(s1k);
    out += G * s1n;
    out += HarmonicExpr(RationalFunction(
        np({-K + 37 * K2 - 42 * K3 + 12 * K4, -34 * K + 52 * K2 - 18 * K3, -13 * K + 7 * K2}),
        den_n1cb_n));
  }
  return out;
}

/// m_4(n, 1)
inline HarmonicExpr central4_k1_form() {
  using detail::np;
  const Poly den_n = np({Rational(0), Rational(1)});
  const HarmonicExpr s1 = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2 = HarmonicExpr::harmonic(2);
  const HarmonicExpr s3 = HarmonicExpr::harmonic(3);
  const HarmonicExpr s4 = HarmonicExpr::harmonic(4);
  HarmonicExpr out = (RationalFunction(np({Rational(14), Rational(1)}), den_n) +
                      RationalFunction(Rational(-6)) * s2) *
                     s1;
  out += RationalFunction(np({Rational(-6), Rational(3)}), den_n) * (s1 * s1);
  out += RationalFunction(np({Rational(4)}), den_n) * (s1 * s1 * s1);
  out -= RationalFunction(np({Rational(18), Rational(7)}), den_n) * s2;
  out += RationalFunction(Rational(3)) * (s2 * s2);
  out += RationalFunction(np({Rational(8), Rational(12)}), den_n) * s3;
  out -= RationalFunction(Rational(6)) * s4;
  return out;
}

/// m_4(n, 2)
inline HarmonicExpr central4_k2_form() {
  using detail::np;
  const Poly den_n = np({Rational(0), Rational(1)});
  const Poly den_n1n = np({Rational(0), Rational(-1), Rational(1)});
  const HarmonicExpr s1 = HarmonicExpr::harmonic(1);
  const HarmonicExpr s2 = HarmonicExpr::harmonic(2);
  const HarmonicExpr s3 = HarmonicExpr::harmonic(3);
  const HarmonicExpr s4 = HarmonicExpr::harmonic(4);
  HarmonicExpr out = (RationalFunction(np({Rational(-148), Rational(26), Rational(26)}), den_n1n) +
                      RationalFunction(np({Rational(-24), Rational(-48)}), den_n) * s2) *
                     s1;
  out += RationalFunction(Rational(48)) * (s2 * s2);
  out += RationalFunction(np({Rational(60), Rational(-24), Rational(12)}), den_n1n) * (s1 * s1);
  out += RationalFunction(np({Rational(8)}), den_n) * (s1 * s1 * s1);
  out -= RationalFunction(np({Rational(84), Rational(76)}), den_n) * s2;
  out += RationalFunction(np({Rational(112), Rational(96)}), den_n) * s3;
  out -= RationalFunction(Rational(96)) * s4;
  out += HarmonicExpr(RationalFunction(np({Rational(102), Rational(-90), Rational(38)}), den_n1n));
  return out;
}

namespace detail {

inline void check_formula_domain(ClosedFormId id, long n, long k) {
  check_nk(n, k);
  switch (id) {
    case ClosedFormId::raw3_form:
    case ClosedFormId::central3:
      if (n < 3)
        throw std::domain_error("closed form: factor (n - 2) vanishes; require n >= 3");
      break;
    case ClosedFormId::central4:
      if (n < 4)
        throw std::domain_error("closed form: factor (n - 3) vanishes; require n >= 4");
      break;
    case ClosedFormId::central4_k1:
      if (k != 1) throw std::domain_error("closed form: central4_k1 requires k = 1");
      break;
    case ClosedFormId::central4_k2:
      if (k != 2) throw std::domain_error("closed form: central4_k2 requires k = 2");
      break;
    default:
      break;
  }
}

}  // namespace detail

inline Rational eval_definite_sum(ClosedFormId id, long n, long k) {
  switch (id) {
    case ClosedFormId::mean_sum: return mean_definite_sum(n, k);
    case ClosedFormId::variance_sum: return variance_definite_sum(n, k);
    default: throw std::invalid_argument("eval_definite_sum: id is not a definite sum");
  }
}

inline Rational eval_closed_form(ClosedFormId id, long n, long k,
                                 const HarmonicCache& cache = shared_harmonic_cache()) {
  detail::check_formula_domain(id, n, k);
  switch (id) {
    case ClosedFormId::mean_sum:
    case ClosedFormId::variance_sum: return eval_definite_sum(id, n, k);
    case ClosedFormId::mean_closed: return mean_form(k, cache).eval(n, cache);
    case ClosedFormId::variance_closed: return variance_form(k, cache).eval(n, cache);
    case ClosedFormId::raw2_form: return raw2_form(k, cache).eval(n, cache);
    case ClosedFormId::raw3_form: return raw3_form(k, cache).eval(n, cache);
    case ClosedFormId::central3: return central3_form(k, cache).eval(n, cache);
    case ClosedFormId::central4: return central4_form(k, cache).eval(n, cache);
    case ClosedFormId::central4_k1: return central4_k1_form().eval(n, cache);
    case ClosedFormId::central4_k2: return central4_k2_form().eval(n, cache);
  }
  throw std::invalid_argument("eval_closed_form: unknown id");
}

}  // namespace ampass

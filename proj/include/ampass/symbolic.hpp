#pragma once

#include <vector>

#include "ampass/common.hpp"
#include "ampass/harmonic_expr.hpp"
#include "ampass/moment_transforms.hpp"

namespace ampass {

namespace detail {

inline HarmonicExpr lift_expr(const BigInt& v) { return HarmonicExpr(Rational(v)); }

inline void check_symbolic_guard(long k, int l) {
  if (k < 1 || k > 8 || l < 0 || l > 8)
    throw guard_error("symbolic moments guarded to 1 <= k <= 8, 0 <= l <= 8");
}

}  // namespace detail

/// j-th logarithmic-derivative power sums of h_r(w) = (1+rw) w^r (2+rw)_{n-k-1}
/// at w = 1, normalized onto the Sb_j(n) anchor:
///   P_j = (-1)^(j-1) (j-1)! [ (r/(1+r))^j + r + r^j (S_j(n-k+r) - S_j(r+1)) ].
/// Index 0 of the returned vector is unused; r = 0 yields all zeros.
inline std::vector<HarmonicExpr> log_derivative_power_sums(long r, long k, int j_max) {
  if (r < 0 || r > k) throw std::domain_error("log_derivative_power_sums: require 0 <= r <= k");
  std::vector<HarmonicExpr> out(static_cast<std::size_t>(j_max) + 1);
  if (r == 0) return out;
  for (int j = 1; j <= j_max; ++j) {
    Rational s_small(0);  // S_j(r+1)
    for (long i = 1; i <= r + 1; ++i) s_small += Rational(1, 1) / Rational(BigInt(i)).pow(j);
    HarmonicExpr tail = HarmonicExpr::shifted_harmonic(static_cast<unsigned>(j), r - k) -
                        HarmonicExpr(s_small);
    HarmonicExpr q = HarmonicExpr(Rational(r, r + 1).pow(j) + Rational(r)) +
                     RationalFunction(Rational(BigInt(r)).pow(j)) * tail;
    Rational pref(factorial(static_cast<unsigned long>(j - 1)));
    if (j % 2 == 0) pref = -pref;
    out[static_cast<std::size_t>(j)] = RationalFunction(pref) * q;
  }
  return out;
}

/// Exponential moments Mbar_0..Mbar_lmax for fixed numeric k, symbolic n:
/// each (1-w)^(k-r) factor in the truncated generating sum absorbs exactly
/// k-r derivative slots; the remaining d = l-(k-r) derivatives of h_r come
/// from the complete Bell polynomials over the power sums above. Valid for
/// n >= k+1.
inline std::vector<HarmonicExpr> symbolic_exponential_moments(long k, int l_max) {
  detail::check_symbolic_guard(k, l_max);
  std::vector<HarmonicExpr> mbar(static_cast<std::size_t>(l_max) + 1);
  mbar[0] = HarmonicExpr(Rational(1));
  // Per r: power sums and Bell polynomials to the deepest order any l needs.
  for (long r = std::max(0L, k - l_max); r <= k; ++r) {
    const int d_max = l_max - static_cast<int>(k - r);
    if (d_max < 0) continue;
    const auto power_sums = log_derivative_power_sums(r, k, d_max);
    const auto bell = complete_bell_polynomials(power_sums, d_max, detail::lift_expr);
    Poly den = Poly::constant(Rational(1));  // prod_{t=0}^{k-r-1} (n - t)
    for (long t = 0; t < k - r; ++t) den *= Poly::linear(Rational(-t));
    const RationalFunction pref(Poly::constant(Rational(1)), den);
    BigInt coef = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(r)) *
                  factorial(static_cast<unsigned long>(k - r));
    if ((k - r) % 2 == 1) coef = -coef;
    for (int l = std::max(1, static_cast<int>(k - r)); l <= l_max; ++l) {
      const BigInt full = coef * binomial(static_cast<unsigned long>(l),
                                          static_cast<unsigned long>(k - r));
      mbar[static_cast<std::size_t>(l)] +=
          RationalFunction(Rational(full)) * pref * bell[static_cast<std::size_t>(l - (k - r))];
    }
  }
  return mbar;
}

inline HarmonicExpr symbolic_exponential_moment(long k, int l) {
  return symbolic_exponential_moments(k, l)[static_cast<std::size_t>(l)];
}

inline std::vector<HarmonicExpr> symbolic_raw_moments(long k, int l_max) {
  return stirling_transform_generic(symbolic_exponential_moments(k, l_max), detail::lift_expr);
}

inline std::vector<HarmonicExpr> symbolic_central_moments(long k, int l_max) {
  return central_from_raw_generic(symbolic_raw_moments(k, l_max),
                                  static_cast<std::size_t>(l_max), detail::lift_expr);
}

/// m_l(n, k) as a normalized harmonic expression; m_1 normalizes to zero.
inline HarmonicExpr symbolic_central_moment(long k, int l) {
  return symbolic_central_moments(k, l)[static_cast<std::size_t>(l)];
}

}  // namespace ampass

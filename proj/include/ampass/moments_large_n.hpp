#pragma once

#include <cstdint>
#include <vector>

#include "ampass/bigfloat.hpp"
#include "ampass/common.hpp"
#include "ampass/moment_transforms.hpp"
#include "ampass/numbers.hpp"

namespace ampass {

/// Floating approximations of the moment table at an n far beyond the exact
/// pipeline. `precision` is the certified mantissa width: values are computed
/// twice (at precision and 2*precision) and must agree to ~precision/2 bits.
struct BigNMomentResult {
  std::int64_t n = 0;
  long k = 0;
  int l_max = 0;
  mpfr_prec_t precision = 0;
  std::vector<BigFloat> exp_moments;
  std::vector<BigFloat> raw_moments;
  std::vector<BigFloat> central_moments;
};

/// S_o(m) as a float: direct summation for small m, Euler-Maclaurin tail
/// for large m (the series terms drop below the target precision well
/// before the asymptotic divergence kicks in at these m).
inline BigFloat harmonic_float(unsigned o, std::int64_t m, mpfr_prec_t prec) {
  if (o < 1) throw std::domain_error("harmonic_float: order must be >= 1");
  if (m <= 0) return BigFloat(prec);
  const mpfr_prec_t wp = prec + 24;
  if (m < 20000) {
    BigFloat acc(wp);
    for (std::int64_t i = m; i >= 1; --i)
      acc += BigFloat::from(static_cast<long>(i), wp).pow_int(-static_cast<long>(o));
    return acc.rounded_to(prec);
  }
  const BigFloat nf = BigFloat::from(static_cast<long>(m), wp);
  const BigFloat cut = ulp_threshold(wp + 8, wp);
  BigFloat acc(wp);
  if (o == 1) {
    acc = nf.log() + BigFloat::euler(wp) + BigFloat::from(Rational(1, 2), wp) / nf;
    for (unsigned t = 1; t <= 64; ++t) {
      const BigFloat term = BigFloat::from(bernoulli(2 * t) / Rational(2L * t), wp) *
                            nf.pow_int(-2L * static_cast<long>(t));
      acc -= term;
      if (term.abs() < cut * acc.abs()) break;
    }
  } else {
    acc = BigFloat::zeta(o, wp) -
          BigFloat::from(Rational(1, static_cast<long>(o) - 1), wp) * nf.pow_int(-(static_cast<long>(o) - 1)) +
          BigFloat::from(Rational(1, 2), wp) * nf.pow_int(-static_cast<long>(o));
    for (unsigned t = 1; t <= 64; ++t) {
      Rational rising(1);
      for (unsigned u = 0; u + 1 < 2 * t; ++u) rising *= Rational(static_cast<long>(o + u));
      const BigFloat term = BigFloat::from(bernoulli(2 * t) / Rational(factorial(2 * t)) * rising, wp) *
                            nf.pow_int(-static_cast<long>(o + 2 * t - 1));
      acc -= term;
      if (term.abs() < cut * acc.abs()) break;
    }
  }
  return acc.rounded_to(prec);
}

namespace detail {

/// Exponential moments Mbar_0..Mbar_lmax at one working precision, via the
/// truncated sum over r = max(0, k-l)..k: the (1-w)^(k-r) factor absorbs
/// exactly k-r derivatives, the rest differentiates the smooth factor
/// h_r(w) = (1+rw) w^r (2+rw)_{n-k-1} through its log-derivative power sums
/// composed with complete Bell polynomials.
inline std::vector<BigFloat> exp_moments_float(std::int64_t n, long k, int l_max, mpfr_prec_t wp) {
  auto lift = [wp](const BigInt& v) { return BigFloat::from(v, wp); };
  std::vector<BigFloat> mbar;
  mbar.reserve(static_cast<std::size_t>(l_max) + 1);
  mbar.push_back(lift(BigInt(1)));
  const bool degenerate = (n - k - 1 < 0);  // k = n: h_r collapses to w^r
  for (int l = 1; l <= l_max; ++l) {
    BigFloat total(wp);
    for (long r = std::max(0L, k - l); r <= k; ++r) {
      const int d = l - static_cast<int>(k - r);
      std::vector<BigFloat> power_sums(static_cast<std::size_t>(d) + 1, BigFloat(wp));
      if (r > 0) {
        for (int j = 1; j <= d; ++j) {
          BigFloat q = lift(BigInt(r));  // the r unit-slope w factors
          if (!degenerate) {
            q += BigFloat::from(Rational(r, r + 1).pow(j), wp);
            q += BigFloat::from(BigInt(r), wp).pow_int(j) *
                 (harmonic_float(static_cast<unsigned>(j), n - k + r, wp) -
                  harmonic_float(static_cast<unsigned>(j), r + 1, wp));
          }
          Rational pref = Rational(factorial(static_cast<unsigned long>(j - 1)));
          if (j % 2 == 0) pref = -pref;
          power_sums[static_cast<std::size_t>(j)] = BigFloat::from(pref, wp) * q;
        }
      }
      const auto bell = complete_bell_polynomials(power_sums, d, lift);
      // (n-k+r)!/n! = 1 / prod_{t=n-k+r+1}^{n} t
      BigInt denom = 1;
      for (std::int64_t t = n - k + r + 1; t <= n; ++t) denom *= BigInt(static_cast<long>(t));
      BigInt coef = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(r)) *
                    binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k - r)) *
                    factorial(static_cast<unsigned long>(k - r));
      if ((k - r) % 2 == 1) coef = -coef;
      total += BigFloat::from(Rational(coef, denom), wp) * bell[static_cast<std::size_t>(d)];
    }
    mbar.push_back(total);
  }
  return mbar;
}

inline BigNMomentResult big_n_once(std::int64_t n, long k, int l_max, mpfr_prec_t wp) {
  auto lift = [wp](const BigInt& v) { return BigFloat::from(v, wp); };
  BigNMomentResult res;
  res.n = n;
  res.k = k;
  res.l_max = l_max;
  res.precision = wp;
  res.exp_moments = exp_moments_float(n, k, l_max, wp);
  res.raw_moments = stirling_transform_generic(res.exp_moments, lift);
  res.central_moments = central_from_raw_generic(res.raw_moments, static_cast<std::size_t>(l_max), lift);
  return res;
}

}  // namespace detail

inline BigNMomentResult big_n_moments(std::int64_t n, long k, int l_max, mpfr_prec_t precision = 128) {
  if (n < 2 || k < 1 || k > n) throw std::domain_error("big_n_moments: require n >= 2, 1 <= k <= n");
  if (l_max < 0 || l_max > 12) throw guard_error("big_n_moments: l_max guarded to [0, 12]");
  if (precision < 64) throw guard_error("big_n_moments: precision must be >= 64 mantissa bits");
  if (k > 1000000) throw guard_error("big_n_moments: k guarded to <= 1e6");
  const auto lo = detail::big_n_once(n, k, l_max, precision);
  const auto hi = detail::big_n_once(n, k, l_max, 2 * precision);
  const BigFloat tol = ulp_threshold(precision / 2, precision);
  for (int l = 0; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    if (relative_difference(lo.exp_moments[i], hi.exp_moments[i]) > tol ||
        relative_difference(lo.raw_moments[i], hi.raw_moments[i]) > tol ||
        relative_difference(lo.central_moments[i], hi.central_moments[i]) > tol)
      throw precision_error("big_n_moments: dual-precision runs disagree at l=" + std::to_string(l) +
                            "; raise the precision");
  }
  BigNMomentResult out;
  out.n = n;
  out.k = k;
  out.l_max = l_max;
  out.precision = precision;
  for (int l = 0; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    out.exp_moments.push_back(hi.exp_moments[i].rounded_to(precision));
    out.raw_moments.push_back(hi.raw_moments[i].rounded_to(precision));
    out.central_moments.push_back(hi.central_moments[i].rounded_to(precision));
  }
  return out;
}

}  // namespace ampass

#pragma once

#include <vector>

#include "ampass/common.hpp"
#include "ampass/distribution.hpp"
#include "ampass/moment_transforms.hpp"

namespace ampass {

/// Exact per-(n,k) moment table: exponential (falling-factorial) moments
/// Mbar_l, raw moments M_l, central moments m_l, orders 0..l_max.
struct MomentTable {
  long n = 0;
  long k = 0;
  int l_max = 0;
  std::vector<Rational> exp_moments;
  std::vector<Rational> raw_moments;
  std::vector<Rational> central_moments;
  bool theta_check_passed = false;
};

namespace detail {
inline Rational lift_rat(const BigInt& v) { return Rational(v); }
}

/// Raw moments M_l = sum_r r^l p_r for l = 0..l_max.
inline std::vector<Rational> theta_moments(const GeneratingPolynomial& gp, int l_max) {
  const auto& c = gp.poly.coefficients();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(l_max) + 1);
  out.push_back(Rational(1));
  std::vector<Rational> weight(c.size());  // r^l * p_r, updated per level
  for (std::size_t r = 0; r < c.size(); ++r) weight[r] = c[r];
  for (int l = 1; l <= l_max; ++l) {
    Rational acc(0);
    for (std::size_t r = 1; r < c.size(); ++r) {
      weight[r] *= Rational(static_cast<long>(r));
      acc += weight[r];
    }
    out.push_back(acc);
  }
  return out;
}

/// Same moments by literally applying theta = w d/dw l times and evaluating
/// at w = 1. Quadratic in l*n; kept as a redundancy check for small l.
inline std::vector<Rational> theta_moments_by_operator(const GeneratingPolynomial& gp, int l_max) {
  std::vector<Rational> out = {Rational(1)};
  Poly p = gp.poly;
  for (int l = 1; l <= l_max; ++l) {
    p = p.theta();
    out.push_back(p.eval_one());
  }
  return out;
}

/// Exponential moments Mbar_l = (d/dw)^l f |_{w=1} = sum_r r(r-1)...(r-l+1) p_r.
inline std::vector<Rational> exponential_moments(const GeneratingPolynomial& gp, int l_max) {
  const auto& c = gp.poly.coefficients();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(l_max) + 1);
  out.push_back(Rational(1));
  std::vector<Rational> weight(c.size());
  for (std::size_t r = 0; r < c.size(); ++r) weight[r] = c[r];
  for (int l = 1; l <= l_max; ++l) {
    Rational acc(0);
    for (std::size_t r = static_cast<std::size_t>(l); r < c.size(); ++r) {
      weight[r] *= Rational(static_cast<long>(r) - (l - 1));
      acc += weight[r];
    }
    out.push_back(acc);
  }
  return out;
}

/// Exponential moments by repeated polynomial differentiation; the slow
/// route used to cross-check the power-sum form.
inline std::vector<Rational> exponential_moments_by_derivative(const GeneratingPolynomial& gp,
                                                               int l_max) {
  std::vector<Rational> out = {Rational(1)};
  Poly p = gp.poly;
  for (int l = 1; l <= l_max; ++l) {
    p = p.derivative();
    out.push_back(p.eval_one());
  }
  return out;
}

inline std::vector<Rational> stirling_transform(const std::vector<Rational>& exp_moments) {
  return stirling_transform_generic(exp_moments, detail::lift_rat);
}

inline std::vector<Rational> central_moments(const std::vector<Rational>& raw_moments, int l_max) {
  if (raw_moments.size() < static_cast<std::size_t>(l_max) + 1)
    throw std::domain_error("central_moments: raw moments missing requested orders");
  return central_from_raw_generic(raw_moments, static_cast<std::size_t>(l_max), detail::lift_rat);
}

/// The three-step exact pipeline: exponential moments, Stirling transform,
/// central moments; the theta power-sum path is recomputed and compared
/// against the transform output before the table is returned.
inline MomentTable moment_pipeline(long n, long k, int l_max, long max_exact_n = 2000) {
  if (n > max_exact_n)
    throw guard_error("moment_pipeline: n exceeds the exact-range bound " +
                      std::to_string(max_exact_n) + "; use the large-n floating path (limits)");
  const GeneratingPolynomial gp = generating_polynomial(n, k);
  MomentTable t;
  t.n = n;
  t.k = k;
  t.l_max = l_max;
  t.exp_moments = exponential_moments(gp, l_max);
  t.raw_moments = stirling_transform(t.exp_moments);
  t.central_moments = central_moments(t.raw_moments, l_max);
  const auto theta = theta_moments(gp, l_max);
  for (int l = 0; l <= l_max; ++l)
    if (theta[static_cast<std::size_t>(l)] != t.raw_moments[static_cast<std::size_t>(l)])
      throw std::logic_error("moment_pipeline: theta path disagrees with Stirling path at l=" +
                             std::to_string(l));
  t.theta_check_passed = true;
  return t;
}

}  // namespace ampass

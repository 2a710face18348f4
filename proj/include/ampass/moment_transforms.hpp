#pragma once

#include <vector>

#include "ampass/numbers.hpp"

namespace ampass {

/// Raw moments from exponential (falling-factorial) moments:
/// M_l = sum_{r=1}^{l} S(l,r) Mbar_r, M_0 = 1. Works over any commutative
/// ring scalar; `lift` embeds a BigInt into the scalar type.
template <class Ring, class Lift>
std::vector<Ring> stirling_transform_generic(const std::vector<Ring>& exp_moments, Lift lift) {
  std::vector<Ring> raw;
  raw.reserve(exp_moments.size());
  if (exp_moments.empty()) return raw;
  raw.push_back(lift(BigInt(1)));
  for (std::size_t l = 1; l < exp_moments.size(); ++l) {
    Ring acc = lift(BigInt(0));
    for (std::size_t r = 1; r <= l; ++r)
      acc = acc + lift(stirling2(static_cast<unsigned>(l), static_cast<unsigned>(r))) * exp_moments[r];
    raw.push_back(acc);
  }
  return raw;
}

/// Central moments from raw moments about M_1:
/// m_l = sum_{i=0}^{l} C(l,i) (-1)^(l-i) M_i M_1^(l-i).
template <class Ring, class Lift>
std::vector<Ring> central_from_raw_generic(const std::vector<Ring>& raw, std::size_t l_max, Lift lift) {
  std::vector<Ring> mean_pow = {lift(BigInt(1))};  // M_1^j
  for (std::size_t j = 1; j <= l_max; ++j) mean_pow.push_back(mean_pow.back() * raw[1]);
  std::vector<Ring> central;
  central.reserve(l_max + 1);
  for (std::size_t l = 0; l <= l_max; ++l) {
    Ring acc = lift(BigInt(0));
    for (std::size_t i = 0; i <= l; ++i) {
      BigInt c = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i));
      if ((l - i) % 2 == 1) c = -c;
      acc = acc + lift(c) * raw[i] * mean_pow[l - i];
    }
    central.push_back(acc);
  }
  return central;
}

/// Complete exponential Bell polynomials B_0..B_d over the power sums
/// P_1..P_d (index 0 of `power_sums` is ignored):
/// B_{m+1} = sum_{i=0}^{m} C(m,i) B_{m-i} P_{i+1}.
template <class Ring, class Lift>
std::vector<Ring> complete_bell_polynomials(const std::vector<Ring>& power_sums, int d, Lift lift) {
  std::vector<Ring> bell = {lift(BigInt(1))};
  for (int m = 0; m < d; ++m) {
    Ring acc = lift(BigInt(0));
    for (int i = 0; i <= m; ++i)
      acc = acc + lift(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i))) *
                      bell[static_cast<std::size_t>(m - i)] * power_sums[static_cast<std::size_t>(i + 1)];
    bell.push_back(acc);
  }
  return bell;
}

}  // namespace ampass

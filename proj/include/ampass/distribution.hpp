#pragma once

#include <algorithm>
#include <vector>

#include "ampass/common.hpp"
#include "ampass/numbers.hpp"
#include "ampass/poly.hpp"
#include "ampass/rational.hpp"

namespace ampass {

/// Exact distribution of the wrong-seat count: coefficient r of `poly`
/// is the probability that exactly r of the n passengers end up away
/// from their ticketed seat when the first k choose uniformly at random.
struct GeneratingPolynomial {
  long n = 0;
  long k = 0;
  Poly poly;

  Rational probability(long r) const {
    if (r < 0 || r > n) throw std::domain_error("probability: r out of [0, n]");
    return poly.coeff(static_cast<std::size_t>(r));
  }
};

namespace detail {

// Dense integer polynomial helpers used only while assembling the
// n! * f numerator; ascending coefficients.
using IntPoly = std::vector<BigInt>;

inline void int_mul_linear(IntPoly& p, const BigInt& a, const BigInt& b) {
  // p *= (a + b*w)
  p.push_back(0);
  for (std::size_t i = p.size(); i-- > 1;) p[i] = p[i] * a + p[i - 1] * b;
  p[0] *= a;
}

inline void check_domain(long n, long k) {
  if (n < 2) throw std::domain_error("generating_polynomial: require n >= 2");
  if (k < 1 || k > n) throw std::domain_error("generating_polynomial: require 1 <= k <= n");
}

}  // namespace detail

/// Builds f_n^(k)(w) = (1/n!) * sum_{r=0}^{k} (1+rw) r! C(k,r) w^r (1-w)^(k-r) (2+rw)_{n-k-1}.
/// For k = n the trailing factor pair (1+rw)(2+rw)_{-1} cancels to 1.
inline GeneratingPolynomial generating_polynomial(long n, long k) {
  detail::check_domain(n, k);
  const long m = n - k - 1;  // Pochhammer length, >= -1
  detail::IntPoly acc(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (long r = 0; r <= k; ++r) {
    detail::IntPoly term = {factorial(static_cast<unsigned long>(r)) *
                            binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(r))};
    if (m >= 0) {
      detail::int_mul_linear(term, 1, r);  // (1 + r*w)
      for (long i = 0; i < m; ++i) detail::int_mul_linear(term, 2 + i, r);
    }
    for (long j = 0; j < k - r; ++j) detail::int_mul_linear(term, 1, -1);  // (1 - w)^(k-r)
    // shift by w^r and accumulate
    for (std::size_t i = 0; i < term.size(); ++i) acc[i + static_cast<std::size_t>(r)] += term[i];
  }
  const BigInt nfac = factorial(static_cast<unsigned long>(n));
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (auto& c : acc) coeffs.emplace_back(std::move(c), nfac);
  return {n, k, Poly(std::move(coeffs))};
}

inline Rational probability(long n, long k, long r) {
  return generating_polynomial(n, k).probability(r);
}

/// Exact distribution of the wrong-seat count by depth-first recursion over
/// the seating process itself, multiplying branch probabilities. Independent
/// of the generating-polynomial formula; guarded to n <= 10.
inline std::vector<Rational> enumerate_exact(long n, long k) {
  detail::check_domain(n, k);
  if (n > 10) throw guard_error("enumerate_exact: exhaustive recursion guarded to n <= 10");
  std::vector<Rational> dist(static_cast<std::size_t>(n) + 1, Rational(0));
  std::vector<long> free_seats(static_cast<std::size_t>(n));
  for (long s = 0; s < n; ++s) free_seats[static_cast<std::size_t>(s)] = s;

  // Removes `seat` from the free list, recurses, restores the set.
  auto take = [&](auto&& self, long idx, long wrong, const Rational& prob, long seat) -> void {
    const auto it = std::find(free_seats.begin(), free_seats.end(), seat);
    std::iter_swap(it, free_seats.end() - 1);
    free_seats.pop_back();
    self(self, idx + 1, wrong + (seat != idx ? 1 : 0), prob);
    free_seats.push_back(seat);
  };
  auto step = [&](auto&& self, long idx, long wrong, const Rational& prob) -> void {
    if (idx == n) {
      dist[static_cast<std::size_t>(wrong)] += prob;
      return;
    }
    const bool own_free =
        idx >= k && std::find(free_seats.begin(), free_seats.end(), idx) != free_seats.end();
    if (own_free) {  // shy passenger, own seat still available
      take(self, idx, wrong, prob, idx);
      return;
    }
    const std::vector<long> choices = free_seats;  // stable snapshot for this node
    const Rational branch = prob / Rational(static_cast<long>(choices.size()));
    for (const long seat : choices) take(self, idx, wrong, branch, seat);
  };
  step(step, 0, 0, Rational(1));
  return dist;
}

}  // namespace ampass

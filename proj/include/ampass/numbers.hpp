#pragma once

#include <mutex>
#include <vector>

#include "ampass/poly.hpp"
#include "ampass/rational.hpp"

namespace ampass {

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// (2l-1)!! = 1 * 3 * ... * (2l-1), l >= 1.
inline BigInt double_factorial_odd(unsigned long l) {
  if (l < 1) throw std::domain_error("double_factorial_odd: l must be >= 1");
  BigInt out = 1;
  for (unsigned long i = 1; i <= l; ++i) out *= 2 * i - 1;
  return out;
}

/// Stirling number of the second kind S(l,r) via the additive recurrence,
/// memoized per process. Requires 0 <= r <= l.
inline BigInt stirling2(unsigned l, unsigned r) {
  if (r > l) throw std::domain_error("stirling2: require r <= l");
  static std::mutex mu;
  static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};  // rows[l][r]
  std::lock_guard lock(mu);
  while (rows.size() <= l) {
    const auto& prev = rows.back();
    const unsigned ll = static_cast<unsigned>(rows.size());
    std::vector<BigInt> row(ll + 1);
    row[0] = 0;
    for (unsigned rr = 1; rr <= ll; ++rr) {
      row[rr] = prev[rr - 1];
      if (rr < prev.size()) row[rr] += BigInt(rr) * prev[rr];
    }
    rows.push_back(std::move(row));
  }
  return rows[l][r];
}

/// Bernoulli number B_j with the B_1 = -1/2 convention, memoized.
inline Rational bernoulli(unsigned j) {
  static std::mutex mu;
  static std::vector<Rational> table = {Rational(1)};
  std::lock_guard lock(mu);
  while (table.size() <= j) {
    const unsigned m = static_cast<unsigned>(table.size());
    // sum_{i=0}^{m} C(m+1,i) B_i = 0
    Rational acc(0);
    for (unsigned i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * table[i];
    table.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return table[j];
}

/// The rising factorial (2 + r*w)_len as a polynomial in w:
/// product over i = 0..len-1 of (2 + i + r*w); len = 0 gives 1.
inline Poly pochhammer_poly(unsigned long r, unsigned long len) {
  Poly p = Poly::constant(Rational(1));
  for (unsigned long i = 0; i < len; ++i)
    p *= Poly({Rational(static_cast<long>(2 + i)), Rational(static_cast<long>(r))});
  return p;
}

/// Memoized generalized harmonic numbers S_o(m) = sum_{i=1}^m 1/i^o.
/// Thread-safe; concurrent lookups observe identical values.
class HarmonicCache {
public:
  /// S_o(m); o >= 1, m >= 0 (S_o(0) = 0).
  Rational s(unsigned o, unsigned long m) const {
    if (o < 1) throw std::domain_error("HarmonicCache: order must be >= 1");
    std::lock_guard lock(mu_);
    if (prefix_.size() <= o) prefix_.resize(o + 1);
    auto& v = prefix_[o];
    if (v.empty()) v.push_back(Rational(0));
    while (v.size() <= m) {
      const long i = static_cast<long>(v.size());
      v.push_back(v.back() + Rational(BigInt(1), BigInt(i)).pow(o));
    }
    return v[m];
  }

  /// S-bar_o(m) = S_o(m-1); m >= 1.
  Rational sbar(unsigned o, unsigned long m) const {
    if (m < 1) throw std::domain_error("HarmonicCache: sbar requires m >= 1");
    return s(o, m - 1);
  }

private:
  mutable std::mutex mu_;
  mutable std::vector<std::vector<Rational>> prefix_;
};

/// Process-wide shared cache; fine for all library entry points.
inline HarmonicCache& shared_harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}

/// S_o(m) through the shared cache.
inline Rational harmonic(unsigned o, unsigned long m) { return shared_harmonic_cache().s(o, m); }

}  // namespace ampass

#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ampass/numbers.hpp"
#include "ampass/ratfun.hpp"

namespace ampass {

/// Normalized symbolic expression in the modified harmonic numbers
/// Sb_j(n) = S_j(n-1): a map from exponent vectors (e_1, ..., e_L) over
/// monomials prod_j Sb_j(n)^(e_j) to rational-function-in-n coefficients.
/// All harmonic arguments are anchored at n; shifted arguments are folded
/// into the coefficients at construction time, so equal expressions have
/// identical maps.
class HarmonicExpr {
public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, RationalFunction>;

  HarmonicExpr() = default;
  HarmonicExpr(const RationalFunction& c) { add_term({}, c); }  // NOLINT: implicit by design
  HarmonicExpr(const Rational& c) { add_term({}, RationalFunction(c)); }

  static HarmonicExpr zero() { return {}; }

  /// Sb_j(n)
  static HarmonicExpr harmonic(unsigned j) {
    HarmonicExpr e;
    Exponents key(j, 0);
    key[j - 1] = 1;
    e.add_term(key, RationalFunction(Rational(1)));
    return e;
  }

  /// S_j(n + c) rewritten onto the Sb_j(n) anchor:
  ///   c >= 0:  Sb_j(n) + sum_{t=0}^{c} 1/(n+t)^j
  ///   c <= -1: Sb_j(n) - sum_{t=c+1}^{-1} 1/(n+t)^j   (c = -1 is Sb_j(n) itself)
  static HarmonicExpr shifted_harmonic(unsigned j, long c) {
    HarmonicExpr e = harmonic(j);
    auto inv_pow = [j](long t) {
      Poly den = Poly::constant(Rational(1));
      for (unsigned u = 0; u < j; ++u) den *= Poly::linear(Rational(t));
      return RationalFunction(Poly::constant(Rational(1)), den);
    };
    if (c >= 0)
      for (long t = 0; t <= c; ++t) e = e + HarmonicExpr(inv_pow(t));
    else
      for (long t = c + 1; t <= -1; ++t) e = e - HarmonicExpr(inv_pow(t));
    return e;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend HarmonicExpr operator+(const HarmonicExpr& a, const HarmonicExpr& b) {
    HarmonicExpr out = a;
    for (const auto& [key, coef] : b.terms_) out.add_term(key, coef);
    return out;
  }
  friend HarmonicExpr operator-(const HarmonicExpr& a, const HarmonicExpr& b) {
    HarmonicExpr out = a;
    for (const auto& [key, coef] : b.terms_) out.add_term(key, -coef);
    return out;
  }
  friend HarmonicExpr operator*(const HarmonicExpr& a, const HarmonicExpr& b) {
    HarmonicExpr out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Exponents key(std::max(ka.size(), kb.size()), 0);
        for (std::size_t i = 0; i < ka.size(); ++i) key[i] += ka[i];
        for (std::size_t i = 0; i < kb.size(); ++i) key[i] += kb[i];
        out.add_term(key, ca * cb);
      }
    return out;
  }
  friend HarmonicExpr operator*(const HarmonicExpr& a, const RationalFunction& s) {
    HarmonicExpr out;
    for (const auto& [key, coef] : a.terms_) out.add_term(key, coef * s);
    return out;
  }
  friend HarmonicExpr operator*(const RationalFunction& s, const HarmonicExpr& a) { return a * s; }
  HarmonicExpr& operator+=(const HarmonicExpr& o) { return *this = *this + o; }
  HarmonicExpr& operator-=(const HarmonicExpr& o) { return *this = *this - o; }
  HarmonicExpr& operator*=(const HarmonicExpr& o) { return *this = *this * o; }

  friend bool operator==(const HarmonicExpr& a, const HarmonicExpr& b) {
    return a.terms_ == b.terms_;
  }

  HarmonicExpr pow(unsigned e) const {
    HarmonicExpr out{RationalFunction(Rational(1))};
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// Already-normalized by construction; provided so idempotence is testable.
  HarmonicExpr normalized() const {
    HarmonicExpr out;
    for (const auto& [key, coef] : terms_) out.add_term(key, coef);
    return out;
  }

  /// Largest weighted degree sum_j j*e_j over the monomials.
  unsigned max_weight() const {
    unsigned w = 0;
    for (const auto& [key, coef] : terms_) {
      unsigned acc = 0;
      for (std::size_t i = 0; i < key.size(); ++i) acc += static_cast<unsigned>(i + 1) * key[i];
      w = std::max(w, acc);
    }
    return w;
  }

  /// Highest harmonic order appearing.
  unsigned max_order() const {
    unsigned m = 0;
    for (const auto& [key, coef] : terms_) m = std::max(m, static_cast<unsigned>(key.size()));
    return m;
  }

  /// Exact value at integer n >= 1 (poles in a coefficient raise).
  Rational eval(long n, const HarmonicCache& cache) const {
    if (n < 1) throw std::domain_error("HarmonicExpr::eval: require n >= 1");
    Rational acc(0);
    for (const auto& [key, coef] : terms_) {
      Rational term = coef.eval(n);
      for (std::size_t i = 0; i < key.size(); ++i)
        if (key[i] > 0)
          term *= cache.sbar(static_cast<unsigned>(i + 1), static_cast<unsigned long>(n))
                      .pow(key[i]);
      acc += term;
    }
    return acc;
  }

  /// Deterministic plain-text form: monomials sorted by exponent vector,
  /// coefficients rendered as num(n)/den(n).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, coef] : terms_) {
      if (!out.empty()) out += " + ";
      out += coef.to_string("n");
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] == 0) continue;
        out += "*Sb" + std::to_string(i + 1) + "(n)";
        if (key[i] > 1) out += "^" + std::to_string(key[i]);
      }
    }
    return out;
  }

private:
  void add_term(Exponents key, const RationalFunction& coef) {
    while (!key.empty() && key.back() == 0) key.pop_back();
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// Structural comparison with a numeric witness hunt on mismatch: scans
/// n = 2..64 (skipping coefficient poles) for a point where the two
/// expressions evaluate differently.
struct ExprEqualResult {
  bool equal = false;
  std::optional<long> witness_n;
  explicit operator bool() const { return equal; }
};

inline ExprEqualResult expr_equal(const HarmonicExpr& a, const HarmonicExpr& b,
                                  const HarmonicCache& cache = shared_harmonic_cache()) {
  if (a == b) return {true, std::nullopt};
  ExprEqualResult out;
  for (long n = 2; n <= 64; ++n) {
    try {
      if (!(a.eval(n, cache) == b.eval(n, cache))) {
        out.witness_n = n;
        return out;
      }
    } catch (const std::domain_error&) {
      continue;  // pole of some coefficient; not a witness
    }
  }
  return out;  // structurally different but numerically indistinguishable on the scan
}

}  // namespace ampass

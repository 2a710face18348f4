#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "ampass/rational.hpp"

namespace ampass {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient i belonging to x^i. The zero polynomial stores no
/// coefficients; otherwise the top coefficient is nonzero.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Rational v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
  }
  static Poly monomial(Rational coef, std::size_t deg) {
    Poly p;
    if (!coef.is_zero()) {
      p.c_.assign(deg + 1, Rational(0));
      p.c_[deg] = std::move(coef);
    }
    return p;
  }
  /// x + shift
  static Poly linear(Rational shift) { return Poly({std::move(shift), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * Rational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const Rational& s) {
    if (s.is_zero()) return {};
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend Poly operator*(const Rational& s, Poly a) { return std::move(a) * s; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) { return *this = std::move(*this) * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
  }

  /// x * d/dx
  Poly theta() const {
    std::vector<Rational> out(c_.size(), Rational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Sum of coefficients, i.e. eval(1) without the Horner multiplies.
  Rational eval_one() const {
    Rational acc(0);
    for (const auto& c : c_) acc += c;
    return acc;
  }

  /// Deterministic rendering, descending powers: "n^2 - 3*n + 2".
  std::string to_string(const std::string& var = "n") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      const Rational a = c.abs();
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      const bool unit = (a == Rational(1)) && i > 0;
      if (!unit) out += a.to_string();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string("x"); }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Quotient and remainder over the rationals; divisor must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  std::vector<Rational> q;
  const long dd = den.degree();
  if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Rational(0));
  while (!num.is_zero() && num.degree() >= dd) {
    const long shift = num.degree() - dd;
    const Rational f = num.leading() / den.leading();
    q[static_cast<std::size_t>(shift)] = f;
    num -= Poly::monomial(f, static_cast<std::size_t>(shift)) * den;
  }
  return {Poly(std::move(q)), std::move(num)};
}

/// Monic greatest common divisor (Euclid over the rationals).
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.leading().reciprocal();
}

}  // namespace ampass

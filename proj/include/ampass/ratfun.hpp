#pragma once

#include <string>
#include <utility>

#include "ampass/poly.hpp"

namespace ampass {

/// Rational function in one symbol (the seat count n) with exact
/// coefficients, kept fully reduced: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
  RationalFunction() : den_(Poly::constant(Rational(1))) {}
  RationalFunction(const Rational& c)  // NOLINT: implicit by design
      : num_(Poly::constant(c)), den_(Poly::constant(Rational(1))) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(Rational(1))) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at integer n; pole raises a domain error naming the factor.
  Rational eval(long n) const {
    const Rational d = den_.eval(Rational(n));
    if (d.is_zero())
      throw std::domain_error("RationalFunction: denominator " + den_.to_string("n") +
                              " vanishes at n = " + std::to_string(n));
    return num_.eval(Rational(n)) / d;
  }

  std::string to_string(const std::string& var = "n") const {
    if (den_.degree() == 0) {
      // den is monic constant 1
      if (num_.degree() <= 0) return num_.to_string(var);
      return "(" + num_.to_string(var) + ")";
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(Rational(1));
      return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_divmod(num_, g).first;
      den_ = poly_divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (!(lead == Rational(1))) {
      const Rational inv = lead.reciprocal();
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace ampass

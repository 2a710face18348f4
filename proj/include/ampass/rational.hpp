#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ampass/common.hpp"

namespace ampass {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational, always held in canonical form:
/// gcd(|num|, den) = 1, den > 0, sign carried by the numerator.
/// Serialized as "num/den" with the denominator omitted when it is 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}        // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }

  /// Parses "num" or "num/den" (base 10, optional leading sign on each part).
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
      BigInt num(std::string(text.substr(0, slash)));
      BigInt den(std::string(text.substr(slash + 1)));
      return Rational(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    }
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den(), num());
  }

  /// Integer power; negative exponents invert (and reject zero base).
  Rational pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(out));  // powers of a canonical fraction stay canonical
  }

  std::string to_string() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatch form of the four basic operations; division by zero raises.
inline Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("rational_arith: unknown op");
}

}  // namespace ampass

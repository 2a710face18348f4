#pragma once

#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "ampass/rational.hpp"

namespace ampass {

/// Binary floating-point value with an explicit per-value mantissa precision
/// (MPFR, round-to-nearest). Binary operations produce results at the wider
/// of the two operand precisions.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from(long v, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, v, MPFR_RNDN);
    return x;
  }
  static BigFloat from(const BigInt& v, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_z(x.v_, v.get_mpz_t(), MPFR_RNDN);
    return x;
  }
  static BigFloat from(const Rational& v, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, v.raw().get_mpq_t(), MPFR_RNDN);
    return x;
  }
  static BigFloat from(double v, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_d(x.v_, v, MPFR_RNDN);
    return x;
  }

  static BigFloat euler(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_euler(x.v_, MPFR_RNDN);
    return x;
  }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
  }
  static BigFloat zeta(unsigned long j, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_zeta_ui(x.v_, j, MPFR_RNDN);
    return x;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigFloat rounded_to(mpfr_prec_t prec) const {
    BigFloat x(prec);
    mpfr_set(x.v_, v_, MPFR_RNDN);
    return x;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  BigFloat abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat log() const {
    BigFloat r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat exp() const {
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat pow_int(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal rendering carrying the full precision of the value.
  std::string to_string() const {
    const int digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

private:
  mpfr_t v_;
};

/// |a - b| / max(|a|, |b|); zero when both vanish.
inline BigFloat relative_difference(const BigFloat& a, const BigFloat& b) {
  const BigFloat diff = (a - b).abs();
  const BigFloat scale = std::max(a.abs(), b.abs());
  if (scale.is_zero()) return BigFloat(std::max(a.precision(), b.precision()));
  return diff / scale;
}

/// 2^(-bits) at a matching precision, for tolerance checks.
inline BigFloat ulp_threshold(long bits, mpfr_prec_t prec) {
  return BigFloat::from(2.0, prec).pow_int(-bits);
}

}  // namespace ampass

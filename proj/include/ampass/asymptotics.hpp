#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ampass/bigfloat.hpp"
#include "ampass/common.hpp"
#include "ampass/moments_large_n.hpp"
#include "ampass/symbolic.hpp"

namespace ampass {

/// Shared numeric constants at one working precision.
struct ConstantPool {
  mpfr_prec_t prec = 128;
  BigFloat gamma;
  std::map<unsigned, BigFloat> zeta_values;

  static ConstantPool make(mpfr_prec_t prec, unsigned max_zeta_order = 12) {
    ConstantPool pool;
    pool.prec = prec;
    pool.gamma = BigFloat::euler(prec);
    for (unsigned j = 2; j <= max_zeta_order; ++j)
      pool.zeta_values.emplace(j, BigFloat::zeta(j, prec));
    return pool;
  }

  const BigFloat& zeta(unsigned j) const {
    const auto it = zeta_values.find(j);
    if (it == zeta_values.end())
      throw std::domain_error("ConstantPool: zeta(" + std::to_string(j) + ") not materialized");
    return it->second;
  }
};

/// Truncated expansion in 1/n with log powers: coefficient map
/// (j, t) -> c for terms c * n^(-j) * log(n)^t, kept for j <= order.
/// The remainder is O(n^-(order+1)) up to log factors.
class AsymptoticSeries {
public:
  using Key = std::pair<int, int>;

  AsymptoticSeries(int order, mpfr_prec_t prec) : order_(order), prec_(prec) {}

  int order() const { return order_; }
  int error_exponent() const { return order_ + 1; }
  mpfr_prec_t precision() const { return prec_; }
  const std::map<Key, BigFloat>& coefficients() const { return coeff_; }

  void add_term(int j, int t, const BigFloat& c) {
    if (j > order_ || c.is_zero()) return;
    auto [it, inserted] = coeff_.try_emplace({j, t}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeff_.erase(it);
    }
  }

  BigFloat coefficient(int j, int t) const {
    const auto it = coeff_.find({j, t});
    return it == coeff_.end() ? BigFloat(prec_) : it->second;
  }

  friend AsymptoticSeries operator+(const AsymptoticSeries& a, const AsymptoticSeries& b) {
    AsymptoticSeries out(std::min(a.order_, b.order_), std::max(a.prec_, b.prec_));
    for (const auto& [key, c] : a.coeff_) out.add_term(key.first, key.second, c);
    for (const auto& [key, c] : b.coeff_) out.add_term(key.first, key.second, c);
    return out;
  }

  friend AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b) {
    AsymptoticSeries out(std::min(a.order_, b.order_), std::max(a.prec_, b.prec_));
    for (const auto& [ka, ca] : a.coeff_)
      for (const auto& [kb, cb] : b.coeff_)
        out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }

  friend AsymptoticSeries operator*(const AsymptoticSeries& a, const BigFloat& s) {
    AsymptoticSeries out(a.order_, a.prec_);
    for (const auto& [key, c] : a.coeff_) out.add_term(key.first, key.second, c * s);
    return out;
  }

  /// Drops any spurious positive-power (j < 0) residue below `tol`; a residue
  /// above it means the expression did not actually decay and is an error.
  void prune_laurent_residue(const BigFloat& tol) {
    for (auto it = coeff_.begin(); it != coeff_.end();) {
      if (it->first.first < 0) {
        if (it->second.abs() > tol)
          throw std::logic_error("AsymptoticSeries: unexpected positive power of n survived");
        it = coeff_.erase(it);
      } else {
        ++it;
      }
    }
  }

  BigFloat eval(const BigFloat& n) const {
    const BigFloat log_n = n.log();
    BigFloat acc(std::max(prec_, n.precision()));
    for (const auto& [key, c] : coeff_)
      acc += c * n.pow_int(-key.first) * log_n.pow_int(key.second);
    return acc;
  }

  /// Deterministic rendering sorted by (j, t).
  std::string to_string() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : coeff_) {
      if (!out.empty()) out += " + ";
      out += c.to_string();
      if (key.first != 0) out += " * n^" + std::to_string(-key.first);
      if (key.second > 0) {
        out += " * log(n)";
        if (key.second > 1) out += "^" + std::to_string(key.second);
      }
    }
    return out;
  }

private:
  int order_;
  mpfr_prec_t prec_;
  std::map<Key, BigFloat> coeff_;
};

/// Euler-Maclaurin expansion of Sb_o(n) = S_o(n-1) truncated at 1/n^N:
///   o = 1:  log n + gamma - 1/(2n) - sum_t B_{2t}/(2t) n^(-2t)
///   o >= 2: zeta(o) - n^(1-o)/(o-1) - n^(-o)/2
///           - sum_t B_{2t} (o)_{2t-1}/(2t)! n^(-(o+2t-1))
inline AsymptoticSeries harmonic_expansion(unsigned o, int N, mpfr_prec_t prec) {
  if (o < 1 || N < 1) throw std::domain_error("harmonic_expansion: require o >= 1, N >= 1");
  AsymptoticSeries s(N, prec);
  if (o == 1) {
    s.add_term(0, 1, BigFloat::from(1L, prec));
    s.add_term(0, 0, BigFloat::euler(prec));
    s.add_term(1, 0, BigFloat::from(Rational(-1, 2), prec));
    for (int t = 1; 2 * t <= N; ++t)
      s.add_term(2 * t, 0, BigFloat::from(-bernoulli(static_cast<unsigned>(2 * t)) / Rational(2L * t), prec));
    return s;
  }
  s.add_term(0, 0, BigFloat::zeta(o, prec));
  s.add_term(static_cast<int>(o) - 1, 0,
             BigFloat::from(Rational(-1, static_cast<long>(o) - 1), prec));
  s.add_term(static_cast<int>(o), 0, BigFloat::from(Rational(-1, 2), prec));
  for (int t = 1; static_cast<int>(o) + 2 * t - 1 <= N; ++t) {
    Rational rising(1);
    for (int u = 0; u + 1 < 2 * t; ++u) rising *= Rational(static_cast<long>(o) + u);
    s.add_term(static_cast<int>(o) + 2 * t - 1, 0,
               BigFloat::from(-bernoulli(static_cast<unsigned>(2 * t)) * rising /
                                  Rational(factorial(static_cast<unsigned long>(2 * t))),
                              prec));
  }
  return s;
}

namespace detail {

/// Rational function in n as a series in x = 1/n; exact power-series
/// division of the reversed coefficient lists, shifted by the degree gap.
inline AsymptoticSeries rational_function_series(const RationalFunction& rf, int N,
                                                 mpfr_prec_t prec) {
  AsymptoticSeries out(N, prec);
  if (rf.is_zero()) return out;
  const long dn = rf.num().degree();
  const long dq = rf.den().degree();
  const long shift = dq - dn;  // first output key
  const long terms = N - std::min(shift, 0L) + 1;
  std::vector<Rational> p(static_cast<std::size_t>(terms), Rational(0));
  std::vector<Rational> q(static_cast<std::size_t>(terms), Rational(0));
  for (long m = 0; m < terms; ++m) {
    if (dn - m >= 0) p[static_cast<std::size_t>(m)] = rf.num().coeff(static_cast<std::size_t>(dn - m));
    if (dq - m >= 0) q[static_cast<std::size_t>(m)] = rf.den().coeff(static_cast<std::size_t>(dq - m));
  }
  std::vector<Rational> c(static_cast<std::size_t>(terms), Rational(0));
  for (long m = 0; m < terms; ++m) {
    Rational acc = p[static_cast<std::size_t>(m)];
    for (long i = 0; i < m; ++i) acc -= c[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(m - i)];
    c[static_cast<std::size_t>(m)] = acc / q[0];  // q[0] = 1, denominator monic
  }
  for (long m = 0; m < terms; ++m)
    out.add_term(static_cast<int>(m + shift), 0, BigFloat::from(c[static_cast<std::size_t>(m)], prec));
  return out;
}

}  // namespace detail

/// Expansion of the central moment m_l(n, k) at fixed numeric k: substitutes
/// the Euler-Maclaurin harmonic series into the symbolic closed form and
/// collects by (n^-j, log^t n) through order N.
inline AsymptoticSeries expand_moment(long k, int l, int N, mpfr_prec_t prec = 128) {
  const HarmonicExpr expr = symbolic_central_moment(k, l);
  AsymptoticSeries total(N, prec);
  std::vector<AsymptoticSeries> sbar;  // sbar[j-1]
  for (unsigned j = 1; j <= expr.max_order(); ++j) sbar.push_back(harmonic_expansion(j, N, prec));
  for (const auto& [key, rf] : expr.terms()) {
    AsymptoticSeries term = detail::rational_function_series(rf, N, prec);
    for (std::size_t j = 0; j < key.size(); ++j)
      for (unsigned e = 0; e < key[j]; ++e) term = term * sbar[j];
    total = total + term;
  }
  total.prune_laurent_residue(ulp_threshold(prec / 2, prec));
  return total;
}

/// One normalized-moment limit experiment: ratios m_l / m_2^(l/2) at the
/// sample points and their extrapolation in x = 1/log n.
struct LimitEstimate {
  long k = 0;
  int l = 0;
  mpfr_prec_t precision = 0;
  std::vector<std::pair<std::int64_t, BigFloat>> samples;
  BigFloat extrapolated;
  BigInt claimed;  // (l-1)!! for even l, 0 for odd l
};

/// Neville polynomial extrapolation to x = 0 through the last
/// min(3, count) sample points. Linear extrapolation alone leaves a
/// 1/log^2 n residue too large at l = 8; the quadratic step removes it.
inline BigFloat extrapolate_in_reciprocal_log(const std::vector<std::pair<std::int64_t, BigFloat>>& pts,
                                              mpfr_prec_t prec) {
  const std::size_t use = std::min<std::size_t>(3, pts.size());
  const std::size_t base = pts.size() - use;
  std::vector<BigFloat> x, y;
  for (std::size_t i = base; i < pts.size(); ++i) {
    x.push_back(BigFloat::from(1L, prec) / BigFloat::from(static_cast<long>(pts[i].first), prec).log());
    y.push_back(pts[i].second);
  }
  for (std::size_t level = 1; level < x.size(); ++level)
    for (std::size_t i = 0; i + level < x.size(); ++i)
      y[i] = (x[i + level] * y[i] - x[i] * y[i + 1]) / (x[i + level] - x[i]);
  return y[0];
}

inline LimitEstimate limit_ratio(long k, int l, const std::vector<std::int64_t>& n_samples,
                                 mpfr_prec_t precision = 128) {
  if (l < 2) throw std::domain_error("limit_ratio: require l >= 2");
  if (n_samples.empty()) throw std::domain_error("limit_ratio: no sample points");
  for (std::size_t i = 1; i < n_samples.size(); ++i)
    if (n_samples[i] <= n_samples[i - 1])
      throw std::domain_error("limit_ratio: samples must be strictly increasing");
  LimitEstimate est;
  est.k = k;
  est.l = l;
  est.precision = precision;
  est.claimed = (l % 2 == 0) ? double_factorial_odd(static_cast<unsigned long>(l / 2)) : BigInt(0);
  for (const std::int64_t n : n_samples) {
    const auto res = big_n_moments(n, k, l, precision);
    const BigFloat& m2 = res.central_moments[2];
    const BigFloat denom = (l % 2 == 0) ? m2.pow_int(l / 2) : m2.sqrt().pow_int(l);
    est.samples.emplace_back(n, res.central_moments[static_cast<std::size_t>(l)] / denom);
  }
  est.extrapolated = extrapolate_in_reciprocal_log(est.samples, precision);
  return est;
}

}  // namespace ampass

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "rings.hpp"

namespace tcorelab::qs {

/// Power series in q known exactly below `order`; coefficients at or past the order
/// are never consulted. Binary operations truncate to the smaller order.
template <class R> class Series {
public:
  explicit Series(int order) : c_(static_cast<std::size_t>(check_order(order)), R(0)) {}

  static Series one(int order) {
    Series s(order);
    s.c_[0] = R(1);
    return s;
  }
  /// coeff * q^power (zero when power >= order).
  static Series monomial(const R &coeff, int power, int order) {
    Series s(order);
    if (power < 0)
      fail(ErrorCode::invalid_argument, "negative q-power");
    if (power < order)
      s.c_[power] = coeff;
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()); }
  const R &coeff(int n) const {
    if (n < 0 || n >= order())
      fail(ErrorCode::invalid_argument, "coefficient index " + std::to_string(n) + " outside truncation order");
    return c_[n];
  }
  /// Adds v to the coefficient of q^n; ignored when n is past the order.
  void add_to(int n, const R &v) {
    if (n >= 0 && n < order())
      c_[n] = R(c_[n] + v);
  }
  const std::vector<R> &coeffs() const noexcept { return c_; }

  Series truncated(int order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.order(), s.c_.begin());
    return s;
  }

  friend Series operator+(const Series &a, const Series &b) {
    Series s(std::min(a.order(), b.order()));
    for (int n = 0; n < s.order(); ++n)
      s.c_[n] = R(a.c_[n] + b.c_[n]);
    return s;
  }
  friend Series operator-(const Series &a, const Series &b) {
    Series s(std::min(a.order(), b.order()));
    for (int n = 0; n < s.order(); ++n)
      s.c_[n] = R(a.c_[n] - b.c_[n]);
    return s;
  }
  friend Series operator*(const Series &a, const Series &b) {
    Series s(std::min(a.order(), b.order()));
    const int N = s.order();
    for (int i = 0; i < N; ++i) {
      if (is_zero(a.c_[i]))
        continue;
      for (int j = 0; i + j < N; ++j) {
        if (is_zero(b.c_[j]))
          continue;
        s.c_[i + j] = R(s.c_[i + j] + a.c_[i] * b.c_[j]);
      }
    }
    return s;
  }
  Series scaled(const R &k) const {
    Series s(order());
    for (int n = 0; n < order(); ++n)
      s.c_[n] = R(c_[n] * k);
    return s;
  }
  /// Multiplication by q^k (shift up).
  Series shifted(int k) const {
    Series s(order());
    for (int n = k; n < order(); ++n)
      s.c_[n] = c_[n - k];
    return s;
  }

  /// Multiplicative inverse; the constant term must be 1 or -1.
  Series inverse() const {
    R c0 = c_[0];
    R unit;
    if (c0 == R(1))
      unit = R(1);
    else if (c0 == R(-1))
      unit = R(-1);
    else
      fail(ErrorCode::non_invertible, "series constant term is not a unit");
    const int N = order();
    Series s(N);
    s.c_[0] = unit;
    for (int n = 1; n < N; ++n) {
      R acc(0);
      for (int k = 1; k <= n; ++k)
        if (!is_zero(c_[k]))
          acc = R(acc + c_[k] * s.c_[n - k]);
      s.c_[n] = R(-(acc * unit));
    }
    return s;
  }

  /// *= (1 - a q^k), k >= 0
  void mul_binomial(const R &a, int k) {
    if (k == 0) {
      R f = R(R(1) - a);
      for (auto &v : c_)
        v = R(v * f);
      return;
    }
    for (int n = order() - 1; n >= k; --n)
      if (!is_zero(c_[n - k]))
        c_[n] = R(c_[n] - a * c_[n - k]);
  }
  /// /= (1 - a q^k), k >= 1
  void div_binomial(const R &a, int k) {
    if (k <= 0)
      fail(ErrorCode::non_invertible, "cannot divide by a factor with zero q-power");
    for (int n = k; n < order(); ++n)
      if (!is_zero(c_[n - k]))
        c_[n] = R(c_[n] + a * c_[n - k]);
  }

  /// First index below n where the coefficients differ, or -1.
  int first_difference(const Series &o, int n) const {
    const int lim = std::min({n, order(), o.order()});
    for (int i = 0; i < lim; ++i)
      if (!(c_[i] == o.c_[i]))
        return i;
    return -1;
  }
  bool eq_upto(const Series &o, int n) const {
    if (n > order() || n > o.order())
      fail(ErrorCode::invalid_argument, "comparison beyond truncation order");
    return first_difference(o, n) < 0;
  }

private:
  static int check_order(int order) {
    if (order < 1)
      fail(ErrorCode::invalid_argument, "truncation order must be positive");
    return order;
  }
  std::vector<R> c_;
};

/// prod_{j>=0} (1 - a q^{qpow + step*j})^exponent truncated at `order`.
template <class R> Series<R> poch_inf(const R &a, int qpow, int step, int exponent, int order) {
  if (step < 1)
    fail(ErrorCode::invalid_argument, "step must be positive");
  if (qpow < 0)
    fail(ErrorCode::invalid_argument, "negative q-power in Pochhammer argument");
  if (exponent == 0)
    fail(ErrorCode::invalid_argument, "exponent must be nonzero");
  if (qpow == 0 && exponent < 0 && !is_zero(a))
    fail(ErrorCode::non_invertible, "leading factor (1 - a) is not invertible");
  Series<R> s = Series<R>::one(order);
  if (is_zero(a))
    return s;
  for (int k = qpow; k < order; k += step) {
    for (int e = 0; e < std::abs(exponent); ++e) {
      if (exponent > 0)
        s.mul_binomial(a, k);
      else
        s.div_binomial(a, k);
    }
  }
  return s;
}

/// prod_{j>=0} (1 - a r^j q^{qpow + step*j})^exponent: Pochhammer products whose base
/// carries a ring factor, such as (a; q^2 w^2) with w^4 = 1.
template <class R>
Series<R> poch_geom(const R &a, const R &ratio, int qpow, int step, int exponent, int order) {
  if (step < 1 || qpow < 1 || exponent == 0)
    fail(ErrorCode::invalid_argument, "poch_geom needs positive step and q-power and a nonzero exponent");
  Series<R> s = Series<R>::one(order);
  R cur = a;
  for (int k = qpow; k < order && !is_zero(cur); k += step) {
    for (int e = 0; e < std::abs(exponent); ++e) {
      if (exponent > 0)
        s.mul_binomial(cur, k);
      else
        s.div_binomial(cur, k);
    }
    cur = R(cur * ratio);
  }
  return s;
}

/// Convenience for integer-coefficient arguments: (c q^qpow; q^step)_inf^exponent.
template <class R> Series<R> poch(int c, int qpow, int step, int exponent, int order) {
  return poch_inf<R>(R(c), qpow, step, exponent, order);
}

/// Keeps the coefficients of q^{m n + r}, reindexed by n.
template <class R> Series<R> sift(const Series<R> &s, int m, int r) {
  if (m < 1 || r < 0 || r >= m)
    fail(ErrorCode::invalid_argument, "sift needs 0 <= r < m");
  int out_order = (s.order() - r + m - 1) / m;
  if (out_order < 1)
    fail(ErrorCode::invalid_argument, "series too short to sift");
  Series<R> out(out_order);
  for (int n = 0; n < out_order; ++n)
    out.add_to(n, s.coeff(m * n + r));
  return out;
}

/// sum_{n in Z} z^n q^{n^2}, z the variable of index `var`.
inline Series<Laurent<Integer>> theta_jtp(int order, int var = 2) {
  Series<Laurent<Integer>> s(order);
  for (long long n = 0; n * n < order; ++n) {
    s.add_to(static_cast<int>(n * n), Laurent<Integer>::var(var, static_cast<int>(n)));
    if (n > 0)
      s.add_to(static_cast<int>(n * n), Laurent<Integer>::var(var, static_cast<int>(-n)));
  }
  return s;
}

} // namespace tcorelab::qs

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "../core/error.hpp"

namespace tcorelab::qs {

/// Arbitrary-precision integer coefficients.
using Integer = mpz_class;

inline bool is_zero(const Integer &v) { return sgn(v) == 0; }

// ---------------------------------------------------------------------------

/// Exponents of the auxiliary variables x, y, z.
using Monomial = std::array<int, 3>;
inline constexpr std::array<const char *, 3> kVariableNames{"x", "y", "z"};

/// Sparse Laurent polynomial in x, y, z over a coefficient ring.
template <class Base> class Laurent {
public:
  using Terms = std::map<Monomial, Base>;

  Laurent() = default;
  Laurent(int constant) {
    if (constant != 0)
      terms_[Monomial{0, 0, 0}] = Base(constant);
  }
  static Laurent monomial(const Base &coeff, Monomial exps) {
    Laurent l;
    if (!is_zero(coeff))
      l.terms_[exps] = coeff;
    return l;
  }
  static Laurent var(int index, int power = 1) {
    Monomial m{0, 0, 0};
    m.at(index) = power;
    return monomial(Base(1), m);
  }

  const Terms &terms() const noexcept { return terms_; }
  bool zero() const noexcept { return terms_.empty(); }

  Laurent &operator+=(const Laurent &o) {
    for (const auto &[m, c] : o.terms_)
      accumulate(m, c);
    return *this;
  }
  Laurent &operator-=(const Laurent &o) {
    for (const auto &[m, c] : o.terms_)
      accumulate(m, Base(-c));
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
  friend Laurent operator-(const Laurent &a) { return Laurent() - a; }
  friend Laurent operator*(const Laurent &a, const Laurent &b) {
    Laurent out;
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_)
        out.accumulate(Monomial{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, Base(ca * cb));
    return out;
  }
  Laurent &operator*=(const Laurent &o) { return *this = *this * o; }
  friend bool operator==(const Laurent &a, const Laurent &b) { return a.terms_ == b.terms_; }

  /// Adds coeff * x^m; zero results are erased so equality stays structural.
  void accumulate(const Monomial &m, const Base &coeff) {
    if (is_zero(coeff))
      return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, coeff);
      return;
    }
    it->second = Base(it->second + coeff);
    if (is_zero(it->second))
      terms_.erase(it);
  }

private:
  Terms terms_;
};

template <class Base> bool is_zero(const Laurent<Base> &v) { return v.zero(); }

// ---------------------------------------------------------------------------

/// Z[zeta_N] (N = 4 or 5) over a base ring, stored in the power basis
/// 1, zeta, ..., zeta^{d-1} reduced modulo the N-th cyclotomic polynomial.
template <int N, class Base = Integer> class Cyclotomic {
  static_assert(N == 4 || N == 5, "only 4th and 5th roots of unity are supported");

public:
  static constexpr int degree = (N == 5) ? 4 : 2;
  using Coeffs = std::array<Base, degree>;

  Cyclotomic() { c_.fill(Base(0)); }
  Cyclotomic(int constant) {
    c_.fill(Base(0));
    c_[0] = Base(constant);
  }
  explicit Cyclotomic(Coeffs c) : c_(std::move(c)) {}

  /// zeta^k for any integer k.
  static Cyclotomic root_power(long long k) {
    Cyclotomic r;
    auto basis = basis_of(k);
    for (int i = 0; i < degree; ++i)
      r.c_[i] = Base(basis[i]);
    return r;
  }

  const Coeffs &coeffs() const noexcept { return c_; }
  bool zero() const {
    for (const auto &v : c_)
      if (!is_zero(v))
        return false;
    return true;
  }

  Cyclotomic &operator+=(const Cyclotomic &o) {
    for (int i = 0; i < degree; ++i)
      c_[i] = Base(c_[i] + o.c_[i]);
    return *this;
  }
  Cyclotomic &operator-=(const Cyclotomic &o) {
    for (int i = 0; i < degree; ++i)
      c_[i] = Base(c_[i] - o.c_[i]);
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator-(const Cyclotomic &a) { return Cyclotomic() - a; }
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    std::array<Base, 2 * degree - 1> wide;
    wide.fill(Base(0));
    for (int i = 0; i < degree; ++i)
      for (int j = 0; j < degree; ++j)
        wide[i + j] = Base(wide[i + j] + a.c_[i] * b.c_[j]);
    Cyclotomic out;
    for (int k = 0; k < 2 * degree - 1; ++k) {
      if (is_zero(wide[k]))
        continue;
      auto basis = basis_of(k);
      for (int i = 0; i < degree; ++i)
        if (basis[i] != 0)
          out.c_[i] = Base(out.c_[i] + wide[k] * Base(basis[i]));
    }
    return out;
  }
  Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) { return a.c_ == b.c_; }

private:
  static std::array<int, degree> basis_of(long long k) {
    std::array<int, degree> b{};
    long long r = mod(k, N);
    if constexpr (N == 5) {
      if (r < 4)
        b[r] = 1;
      else
        b = {-1, -1, -1, -1};
    } else {
      if (r < 2)
        b[r] = 1;
      else
        b[r - 2] = -1;
    }
    return b;
  }

  Coeffs c_;
};

template <int N, class Base> bool is_zero(const Cyclotomic<N, Base> &v) { return v.zero(); }

/// Integer combinations of the fifth roots of unity.
using Cyclo5 = Cyclotomic<5>;
/// Gaussian integers: y = sqrt(-1).
using Gaussian = Cyclotomic<4>;

} // namespace tcorelab::qs

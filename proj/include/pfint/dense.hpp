// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over an exact commutative ring R, coefficient
// of x^k stored at index k. R must be default-constructible to zero and
// provide + - * == together with a free is_zero(R). Exact division in R is
// spelled exact_quo(a, b) and found by ADL.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pfint/rat.hpp"

namespace pfint {

template <class R>
R ring_one();

template <>
inline Rat ring_one<Rat>() {
  return Rat(1);
}

inline Rat exact_quo(const Rat& a, const Rat& b) { return a / b; }

namespace detail {
template <class T>
bool coeff_zero(const T& t) {
  return is_zero(t);
}
}  // namespace detail

template <class R>
class Dense {
 public:
  using value_type = R;

  Dense() = default;
  explicit Dense(std::vector<R> c) : c_(std::move(c)) { trim(); }
  explicit Dense(R c0) {
    if (!detail::coeff_zero(c0)) c_.push_back(std::move(c0));
  }

  static Dense monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1);
    v[k] = std::move(c);
    return Dense(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R{}; }
  const R& operator[](std::size_t k) const { return c_[k]; }
  const R& lc() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }

  Dense operator-() const {
    Dense r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Dense& operator+=(const Dense& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Dense& operator-=(const Dense& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  friend Dense operator+(Dense a, const Dense& b) { return a += b; }
  friend Dense operator-(Dense a, const Dense& b) { return a -= b; }
  friend Dense operator*(const Dense& a, const Dense& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Dense(std::move(r));
  }
  Dense& operator*=(const Dense& o) { return *this = *this * o; }

  Dense scaled(const R& s) const {
    std::vector<R> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] * s;
    return Dense(std::move(r));
  }
  /// Divides every coefficient exactly by s.
  Dense divided(const R& s) const {
    std::vector<R> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = exact_quo(c_[k], s);
    return Dense(std::move(r));
  }
  /// Multiplies by x^k.
  Dense shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return Dense(std::move(r));
  }

  Dense pow(unsigned e) const {
    Dense result(ring_one<R>()), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Horner evaluation at a point of R.
  R eval(const R& x) const {
    R acc{};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  friend bool operator==(const Dense& a, const Dense& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const Dense<R>& p) {
  return p.is_zero();
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
template <class R>
Dense<R> prem(const Dense<R>& a, const Dense<R>& b) {
  if (b.is_zero()) throw DivisionByZero();
  int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<R> r = a.coeffs();
  const R& lb = b.lc();
  // Exactly deg a - deg b + 1 scalings by lc(b), one per degree step.
  for (int d = a.degree(); d >= db; --d) {
    R lead = r[static_cast<std::size_t>(d)];
    for (auto& x : r) x = x * lb;
    for (int k = 0; k <= db; ++k) {
      auto idx = static_cast<std::size_t>(d - db + k);
      r[idx] = r[idx] - lead * b[static_cast<std::size_t>(k)];
    }
  }
  return Dense<R>(std::move(r));
}

/// Determinant by fraction-free (Bareiss) elimination.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring_one<R>();
  bool negate = false;
  R prev = ring_one<R>();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m[piv][k])) ++piv;
      if (piv == n) return R{};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quo(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = R{};
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Sylvester matrix with f's shifted coefficient rows on top, highest
/// power first in each row.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Dense<R>& f, const Dense<R>& g) {
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t sz = m + n;
  std::vector<std::vector<R>> s(sz, std::vector<R>(sz));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g[n - k];
  return s;
}

template <class R>
R sylvester_resultant(const Dense<R>& f, const Dense<R>& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw Error("resultant requires positive degree in the eliminated variable");
  return bareiss_det(sylvester_matrix(f, g));
}

}  // namespace pfint

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>

#include "pfint/upoly.hpp"

namespace pfint {

enum class Var { X, Y };

/// Exponent pair of x^x y^y.
struct Mono {
  unsigned x = 0;
  unsigned y = 0;
  unsigned degree() const { return x + y; }
  bool divides(const Mono& o) const { return x <= o.x && y <= o.y; }
  friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded-lex descending with x > y; the first key is the leading monomial.
struct GrLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

/// Sparse polynomial in Q[x,y]. No zero coefficient is ever stored.
class BiPoly {
 public:
  using Terms = std::map<Mono, Rat, GrLexGreater>;

  BiPoly() = default;
  BiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rat(c)) {}  // NOLINT
  BiPoly(int c) : BiPoly(Rat(c)) {}   // NOLINT

  static BiPoly x() { return monomial(Rat(1), 1, 0); }
  static BiPoly y() { return monomial(Rat(1), 0, 1); }
  static BiPoly monomial(const Rat& c, unsigned i, unsigned j);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(Var v) const;
  Rat coeff(unsigned i, unsigned j) const;
  const Mono& leading_mono() const { return t_.begin()->first; }
  const Rat& leading_coeff() const { return t_.begin()->second; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BiPoly scaled(const Rat& s) const;
  BiPoly pow(unsigned e) const;
  /// Adds c * x^i y^j.
  void add_term(const Mono& m, const Rat& c);

  /// x <-> y.
  BiPoly swapped() const;

  /// Primitive integer multiple with positive leading coefficient.
  BiPoly normalized() const;

 private:
  Terms t_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

template <>
inline BiPoly ring_one<BiPoly>() {
  return BiPoly(Rat(1));
}

/// Raised when an exact division leaves a remainder.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, BiPoly remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const BiPoly& remainder() const { return remainder_; }

 private:
  BiPoly remainder_;
};

struct BiDivision {
  BiPoly quotient;
  BiPoly remainder;
};

/// Division by a single polynomial under graded-lex; the remainder is zero
/// exactly when g divides f.
BiDivision divide(const BiPoly& f, const BiPoly& g);

/// q with q*g = f, or NotDivisible carrying the remainder.
BiPoly exact_div(const BiPoly& f, const BiPoly& g);
inline BiPoly exact_quo(const BiPoly& f, const BiPoly& g) { return exact_div(f, g); }

BiPoly partial(const BiPoly& f, Var v);
/// Formal antiderivative in v with zero integration constant.
BiPoly antiderivative(const BiPoly& f, Var v);
Rat evaluate(const BiPoly& f, const Rat& x0, const Rat& y0);

/// Normalized gcd (see BiPoly::normalized); both zero is an error.
BiPoly gcd(const BiPoly& f, const BiPoly& g);
bool coprime(const BiPoly& f, const BiPoly& g);

/// Sylvester resultant eliminating v; the result lives in the other variable.
BiPoly resultant(const BiPoly& f, const BiPoly& g, Var v);

/// Homogeneous component of top total degree.
BiPoly leading_form(const BiPoly& f);

/// No repeated factor over C: gcd(f, f_x, f_y) is constant.
bool is_squarefree(const BiPoly& f);

/// Coefficients of powers of v, each a univariate polynomial in the other
/// variable.
Dense<UPoly> as_univariate(const BiPoly& f, Var v);
BiPoly from_univariate(const Dense<UPoly>& p, Var v);
/// Embeds a univariate polynomial in the variable v.
BiPoly embed(const UPoly& p, Var v);
/// Univariate view of a polynomial that does not involve the other variable.
UPoly restrict_to(const BiPoly& f, Var v);

std::string to_string(const BiPoly& f);

}  // namespace pfint

// SPDX-License-Identifier: Apache-2.0
//
// Planar polynomial vector fields x' = P, y' = Q and their polynomial first
// integrals given in factored form H = u_1^k_1 ... u_p^k_p.
#pragma once

#include <optional>
#include <vector>

#include "pfint/bipoly.hpp"
#include "pfint/check.hpp"

namespace pfint {

class VectorField {
 public:
  VectorField(BiPoly p, BiPoly q);

  const BiPoly& P() const { return p_; }
  const BiPoly& Q() const { return q_; }
  /// max(deg P, deg Q).
  int degree() const { return std::max(p_.total_degree(), q_.total_degree()); }
  BiPoly divergence() const { return partial(p_, Var::X) + partial(q_, Var::Y); }

  friend VectorField operator*(const BiPoly& g, const VectorField& v) { return {g * v.p_, g * v.q_}; }
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  BiPoly p_, q_;
};

struct Factor {
  BiPoly u;
  unsigned k = 1;
};

/// Ordered factor list (u_i, k_i). Factors are nonconstant and pairwise
/// coprime; irreducibility is the caller's claim and is not tested.
class FactoredIntegral {
 public:
  explicit FactoredIntegral(std::vector<Factor> factors);

  std::size_t size() const { return f_.size(); }
  const Factor& operator[](std::size_t i) const { return f_[i]; }
  auto begin() const { return f_.begin(); }
  auto end() const { return f_.end(); }
  const std::vector<Factor>& factors() const { return f_; }

  int sum_of_degrees() const;
  bool has_repeated_factor() const;

 private:
  std::vector<Factor> f_;
};

BiPoly expand(const FactoredIntegral& f);

/// X = sum_l k_l (prod_{i != l} u_i) (du_l/dy, -du_l/dx).
VectorField construct_field(const FactoredIntegral& f);

/// H_x P + H_y Q.
BiPoly lie_derivative(const VectorField& x, const BiPoly& h);
bool is_first_integral(const VectorField& x, const BiPoly& h);
bool is_coprime(const VectorField& x);

struct ReducedField {
  VectorField field;
  BiPoly multiplier;  // normalized gcd(P, Q)
};
/// X = multiplier * field with coprime components.
ReducedField reduce_field(const VectorField& x);

/// G with X2 = G * X1 for coprime X1; NotDivisible if there is none.
BiPoly quotient_multiplier(const VectorField& x2, const VectorField& x1);

/// H with P = H_y, Q = -H_x and no constant term, when div X = 0.
std::optional<BiPoly> is_hamiltonian(const VectorField& x);

/// K with f_x P + f_y Q = K f, if f = 0 is invariant.
std::optional<BiPoly> cofactor(const BiPoly& f, const VectorField& x);

/// Constructed field has degree sum(deg u_i) - 1 and coprime components.
CheckResult theorem_b_degree_check(const FactoredIntegral& f);

}  // namespace pfint

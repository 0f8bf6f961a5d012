// SPDX-License-Identifier: Apache-2.0
#include "pfint/linearize.hpp"

namespace pfint {

KMatrix k_matrix(const FactoredIntegral& f) {
  const std::size_t p = f.size();
  if (p < 2) throw Error("K-matrix needs at least two factors");
  KMatrix k;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    BiPoly others(Rat(static_cast<long>(f[i].k)));
    for (std::size_t j = 0; j + 1 < p; ++j)
      if (j != i) others *= f[j].u;
    k.K1 += others * partial(f[i].u, Var::X);
    k.K2 += others * partial(f[i].u, Var::Y);
  }
  const Rat kp(static_cast<long>(f[p - 1].k));
  k.K3 = partial(f[p - 1].u, Var::X).scaled(kp);
  k.K4 = partial(f[p - 1].u, Var::Y).scaled(kp);
  return k;
}

FactoredIntegral factor_split(const FactoredIntegral& f, std::size_t pivot) {
  if (pivot < 1 || pivot > f.size())
    throw Error("pivot " + std::to_string(pivot) + " out of range 1.." + std::to_string(f.size()));
  std::vector<Factor> v = f.factors();
  Factor moved = v[pivot - 1];
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(pivot - 1));
  v.push_back(std::move(moved));
  return FactoredIntegral(std::move(v));
}

LinearizationCertificate linearize(const FactoredIntegral& f, const VectorField& x) {
  return linearize(f, x, f.size());
}

LinearizationCertificate linearize(const FactoredIntegral& f0, const VectorField& x, std::size_t pivot) {
  const FactoredIntegral f = factor_split(f0, pivot);
  const std::size_t p = f.size();
  if (p < 2) throw Error("linearization needs at least two factors");

  LinearizationCertificate c;
  c.pivot = pivot;
  c.hamiltonian = is_hamiltonian(x).has_value();
  auto [K1, K2, K3, K4] = k_matrix(f);
  c.K1 = K1;
  c.K2 = K2;
  c.K3 = K3;
  c.K4 = K4;
  c.D = K1 * K4 - K2 * K3;
  if (c.D.is_zero()) throw Error("degenerate split: D vanishes identically");

  BiPoly rest(Rat(1));
  c.u_expr = BiPoly(Rat(1));
  for (std::size_t i = 0; i + 1 < p; ++i) {
    rest *= f[i].u;
    c.u_expr *= f[i].u.pow(f[i].k);
  }
  const BiPoly& up = f[p - 1].u;
  c.v_expr = up.pow(f[p - 1].k);

  const BiPoly n1 = K4 * rest + K2 * up;
  const BiPoly n2 = -(K1 * up) - K3 * rest;
  c.G = !x.P().is_zero() ? exact_div(n1, x.P()) : exact_div(n2, x.Q());
  BiPoly r1 = n1 - c.G * x.P(), r2 = n2 - c.G * x.Q();
  if (!r1.is_zero()) throw NotDivisible("G P does not match the first numerator", r1);
  if (!r2.is_zero()) throw NotDivisible("G Q does not match the second numerator", r2);
  if (!is_coprime(x)) throw Error("linearization needs a field with coprime components");
  if (!is_first_integral(x, expand(f))) throw Error("the integral is not conserved by the field");

  c.determinant_identity = c.D == K1 * K4 - K2 * K3;
  c.field_identity = c.G * x.P() == n1 && c.G * x.Q() == n2;
  c.u_identity = c.G * lie_derivative(x, c.u_expr) == c.D * c.u_expr;
  c.v_identity = c.G * lie_derivative(x, c.v_expr) == -(c.D * c.v_expr);
  return c;
}

}  // namespace pfint

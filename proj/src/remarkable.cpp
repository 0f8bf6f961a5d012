// SPDX-License-Identifier: Apache-2.0
#include "pfint/remarkable.hpp"

#include <algorithm>
#include <map>

#include "pfint/roots.hpp"

namespace pfint {

BiPoly integrating_factor(const FactoredIntegral& f) {
  BiPoly r(Rat(1));
  for (const auto& [u, k] : f) r *= u.pow(k - 1);
  return r;
}

BiPoly inverse_integrating_factor(const FactoredIntegral& f) {
  BiPoly v(Rat(1));
  for (const auto& [u, k] : f) v *= u;
  return v;
}

bool verify_integrating_factor(const VectorField& x, const BiPoly& r) {
  return (partial(r * x.P(), Var::X) + partial(r * x.Q(), Var::Y)).is_zero();
}

BiPoly integral_from_factor(const VectorField& x, const BiPoly& r) {
  BiPoly h = antiderivative(r * x.P(), Var::Y);
  BiPoly fprime = -(r * x.Q()) - partial(h, Var::X);
  if (fprime.degree_in(Var::Y) > 0)
    throw Error("not an integrating factor: the x-part of the integral depends on y");
  return h + antiderivative(fprime, Var::X);
}

namespace {

// Lifts the coefficients of a polynomial in v (univariate in the other
// variable w) into Q[w, c], with w as the first variable.
Dense<BiPoly> lift(const BiPoly& f, Var v, bool add_c) {
  Dense<UPoly> d = as_univariate(f, v);
  std::vector<BiPoly> coeffs;
  for (const auto& c : d.coeffs()) coeffs.push_back(embed(c, Var::X));
  if (add_c) {
    if (coeffs.empty()) coeffs.emplace_back();
    coeffs[0] += BiPoly::y();
  }
  return Dense<BiPoly>(std::move(coeffs));
}

// Polynomial in c vanishing exactly at the c for which H + c and h share a
// factor of positive degree in v.
UPoly elimination_candidates(const BiPoly& h_full, const BiPoly& h_common, Var v) {
  BiPoly res = sylvester_resultant(lift(h_full, v, true), lift(h_common, v, false));
  if (res.is_zero()) throw Error("elimination degenerated: resultant vanishes for every c");
  std::map<unsigned, std::vector<Rat>> by_w;
  for (const auto& [m, c] : res.terms()) {
    auto& row = by_w[m.x];
    if (row.size() <= m.y) row.resize(m.y + 1);
    row[m.y] = c;
  }
  UPoly g;
  for (auto& [w, row] : by_w) {
    g = gcd(g, UPoly(std::move(row)));
    if (g.degree() == 0) break;
  }
  return g;
}

}  // namespace

CriticalValues critical_remarkable_values(const BiPoly& h) {
  if (h.is_constant()) throw Error("critical values of a constant polynomial");
  BiPoly hx = partial(h, Var::X), hy = partial(h, Var::Y);
  if (hx.is_zero() || hy.is_zero())
    throw Error("degenerate integral: it does not depend on both variables");

  CriticalValues out;
  // Every common factor of H + c, H_x, H_y divides this.
  BiPoly common = gcd(hx, hy);
  if (common.is_constant()) return out;

  UPoly cands(Rat(1));
  for (Var v : {Var::Y, Var::X}) {
    if (common.degree_in(v) < 1) continue;
    UPoly g = elimination_candidates(h, common, v);
    cands = exact_quo(cands * g, gcd(cands, g));
  }
  UPoly sqf = squarefree_part(cands);
  out.count = static_cast<unsigned>(std::max(sqf.degree(), 0));
  UPoly rest = sqf;
  for (const auto& [c, mult] : rational_roots(sqf)) {
    rest = exact_quo(rest, UPoly(std::vector<Rat>{-c, Rat(1)}));
    if (gcd(h + BiPoly(c), common).is_constant()) {
      --out.count;
      continue;
    }
    out.rational.push_back(c);
  }
  if (rest.degree() >= 1) out.residual = rest;
  return out;
}

RemarkableAnalysis remarkable_analysis(const FactoredIntegral& f) {
  RemarkableAnalysis a;
  CriticalValues cv = critical_remarkable_values(expand(f));
  a.critical_values = cv.rational;
  a.residual = cv.residual;
  a.s = cv.count;
  a.R = integrating_factor(f);
  a.V = inverse_integrating_factor(f);
  a.d = a.R.total_degree();
  return a;
}

namespace {

void require_integral_hypotheses(const FactoredIntegral& f, const VectorField& x) {
  if (!f.has_repeated_factor()) throw Error("hypothesis violated: no exponent is greater than 1");
  if (!is_coprime(x)) throw Error("hypothesis violated: field components are not coprime");
  if (!is_first_integral(x, expand(f))) throw Error("hypothesis violated: H is not a first integral of the field");
}

}  // namespace

CheckResult theorem_a_check(const FactoredIntegral& f, const VectorField& x) {
  require_integral_hypotheses(f, x);
  const int m = x.degree();
  const int sum = f.sum_of_degrees();
  const bool degree_side = sum == m + 1;
  const CriticalValues cv = critical_remarkable_values(expand(f));
  const bool value_side = cv.count == 1;
  std::string detail = "sum of factor degrees " + std::to_string(sum) + ", m+1 = " + std::to_string(m + 1) + ", " +
                       std::to_string(cv.count) + " critical remarkable value(s)";
  if (degree_side == value_side) return CheckResult::pass(detail);
  Witness w;
  w.note = degree_side ? "degree side holds but the critical value count is not one"
                       : "critical value count is one but the degree side fails";
  return CheckResult::fail(detail, w);
}

CheckResult degree_formula_check(const RemarkableAnalysis& a, int m) {
  if (a.s == 0) throw Error("degree formula needs at least one critical remarkable value");
  const int s = static_cast<int>(a.s);
  const int expected = (s - 1) * a.d + (m + 1) * s;
  const int actual = a.V.total_degree();
  std::string detail = "deg V = " + std::to_string(actual) + ", (s-1)d + (m+1)s = " + std::to_string(expected) +
                       " with s = " + std::to_string(s) + ", d = " + std::to_string(a.d) + ", m = " + std::to_string(m);
  if (actual == expected) return CheckResult::pass(detail);
  Witness w;
  w.note = "computed " + std::to_string(actual) + ", expected " + std::to_string(expected);
  return CheckResult::fail(detail, w);
}

CheckResult degree_relation_check(const FactoredIntegral& f, const VectorField& x) {
  require_integral_hypotheses(f, x);
  if (is_hamiltonian(x)) throw Error("hypothesis violated: the field is Hamiltonian");
  const int m = x.degree();
  const int dh = expand(f).total_degree();
  const int dr = integrating_factor(f).total_degree();
  std::string detail = "deg H = " + std::to_string(dh) + ", m + 1 + deg R = " + std::to_string(m + 1 + dr);
  if (dh == m + 1 + dr) return CheckResult::pass(detail);
  Witness w;
  w.note = "computed " + std::to_string(dh) + ", expected " + std::to_string(m + 1 + dr);
  return CheckResult::fail(detail, w);
}

}  // namespace pfint

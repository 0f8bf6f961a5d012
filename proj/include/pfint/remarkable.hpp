// SPDX-License-Identifier: Apache-2.0
//
// Integrating factors and critical remarkable values of a polynomial first
// integral H. A constant c is treated as critical when H + c, H_x and H_y
// share a nonconstant factor.
#pragma once

#include <optional>
#include <vector>

#include "pfint/field.hpp"

namespace pfint {

struct CriticalValues {
  /// Rational critical values, ascending, each verified by an exact gcd.
  std::vector<Rat> rational;
  /// Squarefree polynomial in c whose roots are exactly the remaining,
  /// nonrational critical values; absent when there are none.
  std::optional<UPoly> residual;
  /// Number of distinct critical values, rational or not.
  unsigned count = 0;
};

struct RemarkableAnalysis {
  std::vector<Rat> critical_values;
  std::optional<UPoly> residual;
  BiPoly R;  // prod u_i^(k_i - 1)
  BiPoly V;  // prod u_i
  unsigned s = 0;
  int d = 0;  // deg R
};

BiPoly integrating_factor(const FactoredIntegral& f);
BiPoly inverse_integrating_factor(const FactoredIntegral& f);

/// d(RP)/dx + d(RQ)/dy == 0.
bool verify_integrating_factor(const VectorField& x, const BiPoly& r);

/// H with H_y = R P, H_x = -R Q and no constant term.
BiPoly integral_from_factor(const VectorField& x, const BiPoly& r);

CriticalValues critical_remarkable_values(const BiPoly& h);

RemarkableAnalysis remarkable_analysis(const FactoredIntegral& f);

/// Both sides of "sum deg u_i = m + 1  <=>  exactly one critical value".
CheckResult theorem_a_check(const FactoredIntegral& f, const VectorField& x);

/// deg V = (s - 1) d + (m + 1) s.
CheckResult degree_formula_check(const RemarkableAnalysis& a, int m);

/// deg H = m + 1 + deg R.
CheckResult degree_relation_check(const FactoredIntegral& f, const VectorField& x);

}  // namespace pfint

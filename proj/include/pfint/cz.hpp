// SPDX-License-Identifier: Apache-2.0
//
// Christopher-Zoladek genericity conditions for a family of affine curves,
// decided over C^2.
#pragma once

#include <vector>

#include "pfint/field.hpp"

namespace pfint {

struct CZReport {
  CheckResult condition_i;    // each curve is nonsingular
  CheckResult condition_ii;   // each leading form is squarefree
  CheckResult condition_iii;  // transversal crossings, no triple points
  CheckResult condition_iv;   // pairwise coprime leading forms
  CheckResult overall;
};

struct VarietyOptions {
  /// Width of the root boxes attached to nonrational witnesses.
  Rat witness_width = Rat(1, Int(1) << 64);
  unsigned precision_cap_bits = 1024;
};

/// Holds iff the polynomials have no common zero in C^2. Decided by exact
/// elimination; a Fails verdict carries a rational point, a certified box, or
/// the common factor of a curve shared by all of them.
CheckResult variety_empty(const std::vector<BiPoly>& polys, const VarietyOptions& opts = {});

CheckResult check_nonsingular(const BiPoly& u);
CheckResult check_leading_squarefree(const BiPoly& u);
CheckResult check_pair_transversal(const BiPoly& u, const BiPoly& v);
CheckResult check_no_triple_points(const std::vector<BiPoly>& curves);
CheckResult check_pairwise_leading_coprime(const std::vector<BiPoly>& curves);

CZReport cz_report(const FactoredIntegral& f);

}  // namespace pfint

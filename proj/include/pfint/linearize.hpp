// SPDX-License-Identifier: Apache-2.0
//
// Polynomial change of variables taking a field with first integral
// u_1^k_1 ... u_p^k_p to the saddle u' = u, v' = -v, with the time rescaled
// by dtau = (D/G) dt.
#pragma once

#include <string>

#include "pfint/field.hpp"

namespace pfint {

struct KMatrix {
  BiPoly K1, K2, K3, K4;
};

/// K1, K2 from the first p-1 factors (x and y derivatives), K3, K4 from the
/// last one.
KMatrix k_matrix(const FactoredIntegral& f);

/// Moves factor `pivot` (1-based) to the end.
FactoredIntegral factor_split(const FactoredIntegral& f, std::size_t pivot);

struct LinearizationCertificate {
  BiPoly u_expr;  // prod_{i<p} u_i^k_i
  BiPoly v_expr;  // u_p^k_p
  BiPoly K1, K2, K3, K4;
  BiPoly D;
  BiPoly G;
  std::size_t pivot = 0;  // 1-based position of the factor used for v
  bool hamiltonian = false;

  bool determinant_identity = false;  // D = K1 K4 - K2 K3
  bool field_identity = false;        // G P, G Q match the K-numerators
  bool u_identity = false;            // G X(u) = D u
  bool v_identity = false;            // G X(v) = -D v

  bool verified() const { return determinant_identity && field_identity && u_identity && v_identity; }
  std::string time_rescaling() const { return "dtau = (D/G) dt"; }
};

/// Certificate for X with the last factor of F as pivot; `pivot` is the
/// 1-based index reported in the certificate. Throws NotDivisible when X does
/// not match the integral and Error when D vanishes.
LinearizationCertificate linearize(const FactoredIntegral& f, const VectorField& x);
LinearizationCertificate linearize(const FactoredIntegral& f, const VectorField& x, std::size_t pivot);

}  // namespace pfint

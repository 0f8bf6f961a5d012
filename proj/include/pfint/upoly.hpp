// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfint/dense.hpp"

namespace pfint {

/// Univariate polynomial over Q.
using UPoly = Dense<Rat>;

template <>
inline UPoly ring_one<UPoly>() {
  return UPoly(Rat(1));
}

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);

/// Quotient a/b; throws when b does not divide a.
UPoly exact_quo(const UPoly& a, const UPoly& b);

UPoly derivative(const UPoly& a);
UPoly monic(const UPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct XGcd {
  UPoly g;  // monic gcd
  UPoly s;  // s*a + t*b = g
  UPoly t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);

UPoly squarefree_part(const UPoly& a);

/// Yun's decomposition a = lc * prod s_k^k with squarefree, pairwise
/// coprime monic s_k. Only factors of positive degree are returned.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& a);

/// Integer coefficient vector of a positive rational multiple of a with
/// content 1 (sign of the leading coefficient is preserved).
std::vector<Int> integer_primitive(const UPoly& a);

std::string to_string(const UPoly& a, char var = 'x');

}  // namespace pfint

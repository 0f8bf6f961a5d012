// SPDX-License-Identifier: Apache-2.0
//
// Floating-point orbits and conservation of a claimed first integral.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pfint/field.hpp"

namespace pfint {

/// BiPoly with double coefficients, evaluated by Horner in y then x.
class NumPoly {
 public:
  explicit NumPoly(const BiPoly& f);
  double operator()(double x, double y) const;

 private:
  std::vector<std::vector<double>> c_;  // c_[i][j] multiplies x^i y^j
};

struct Orbit {
  std::vector<std::pair<double, double>> points;
  double step = 0;
  std::string method = "RK4";
};

/// Classical fixed-step RK4 from (x0, y0) for n steps. Stops early once a
/// coordinate exceeds 1e12 in magnitude or stops being finite.
Orbit integrate_orbit(const VectorField& x, double x0, double y0, double step, unsigned n);

/// max |H(p) - H(p0)| / max(1, |H(p0)|) over the orbit.
double conservation_drift(const BiPoly& h, const Orbit& orbit);

/// CSV with header "t,x,y,H", one row per orbit point.
void write_csv(std::ostream& os, const BiPoly& h, const Orbit& orbit);

}  // namespace pfint

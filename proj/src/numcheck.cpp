// SPDX-License-Identifier: Apache-2.0
#include "pfint/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace pfint {

NumPoly::NumPoly(const BiPoly& f) {
  const int dx = std::max(f.degree_in(Var::X), 0), dy = std::max(f.degree_in(Var::Y), 0);
  c_.assign(static_cast<std::size_t>(dx) + 1, std::vector<double>(static_cast<std::size_t>(dy) + 1, 0.0));
  for (const auto& [m, c] : f.terms()) c_[m.x][m.y] = c.to_double();
}

double NumPoly::operator()(double x, double y) const {
  double acc = 0;
  for (auto row = c_.rbegin(); row != c_.rend(); ++row) {
    double inner = 0;
    for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * y + *it;
    acc = acc * x + inner;
  }
  return acc;
}

Orbit integrate_orbit(const VectorField& x, double x0, double y0, double step, unsigned n) {
  if (!(step > 0)) throw Error("integration step must be positive");
  if (n < 1) throw Error("integration needs at least one step");
  const NumPoly P(x.P()), Q(x.Q());
  Orbit o;
  o.step = step;
  o.points.reserve(n + 1);
  o.points.emplace_back(x0, y0);
  double px = x0, py = y0;
  const double h = step;
  for (unsigned i = 0; i < n; ++i) {
    const double k1x = P(px, py), k1y = Q(px, py);
    const double k2x = P(px + h / 2 * k1x, py + h / 2 * k1y), k2y = Q(px + h / 2 * k1x, py + h / 2 * k1y);
    const double k3x = P(px + h / 2 * k2x, py + h / 2 * k2y), k3y = Q(px + h / 2 * k2x, py + h / 2 * k2y);
    const double k4x = P(px + h * k3x, py + h * k3y), k4y = Q(px + h * k3x, py + h * k3y);
    px += h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
    py += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    if (!std::isfinite(px) || !std::isfinite(py) || std::abs(px) > 1e12 || std::abs(py) > 1e12) break;
    o.points.emplace_back(px, py);
  }
  return o;
}

double conservation_drift(const BiPoly& h, const Orbit& orbit) {
  if (orbit.points.empty()) throw Error("empty orbit");
  const NumPoly H(h);
  const double h0 = H(orbit.points.front().first, orbit.points.front().second);
  const double scale = std::max(1.0, std::abs(h0));
  double worst = 0;
  for (const auto& [x, y] : orbit.points) worst = std::max(worst, std::abs(H(x, y) - h0) / scale);
  return worst;
}

void write_csv(std::ostream& os, const BiPoly& h, const Orbit& orbit) {
  const NumPoly H(h);
  os << "t,x,y,H\n";
  const auto old = os.precision(17);
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    const auto& [x, y] = orbit.points[i];
    os << static_cast<double>(i) * orbit.step << ',' << x << ',' << y << ',' << H(x, y) << '\n';
  }
  os.precision(old);
}

}  // namespace pfint

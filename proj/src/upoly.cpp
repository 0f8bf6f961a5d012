// SPDX-License-Identifier: Apache-2.0
#include "pfint/upoly.hpp"

#include <sstream>

namespace pfint {

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat inv = Rat(1) / b.lc();
  for (int d = a.degree(); d >= db; --d) {
    Rat c = r[static_cast<std::size_t>(d)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(d - db + k)] -= c * b[static_cast<std::size_t>(k)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_quo(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("univariate division is not exact");
  return q;
}

UPoly derivative(const UPoly& a) {
  if (a.degree() < 1) return {};
  std::vector<Rat> d(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = a[k] * Rat(static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly monic(const UPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.lc());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0(Rat(1)), s1, t0, t1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() < 1) return monic(a);
  return monic(exact_quo(a, gcd(a, derivative(a))));
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& a) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (a.degree() < 1) return out;
  UPoly da = derivative(a);
  UPoly g = gcd(a, da);
  UPoly w = exact_quo(a, g);
  UPoly y = exact_quo(da, g);
  unsigned k = 1;
  for (;;) {
    UPoly z = y - derivative(w);
    if (z.is_zero()) {
      if (w.degree() >= 1) out.emplace_back(monic(w), k);
      break;
    }
    UPoly s = gcd(w, z);
    if (s.degree() >= 1) out.emplace_back(s, k);
    w = exact_quo(w, s);
    y = exact_quo(z, s);
    ++k;
    if (w.degree() < 1) break;
  }
  return out;
}

std::vector<Int> integer_primitive(const UPoly& a) {
  Int l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Int> v;
  Int g = 0;
  for (const auto& c : a.coeffs()) {
    Int n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    v.push_back(n);
  }
  if (g != 0 && g != 1)
    for (auto& n : v) n /= g;
  return v;
}

std::string to_string(const UPoly& a, char var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = a.size(); k-- > 0;) {
    const Rat& c = a[k];
    if (c.is_zero()) continue;
    Rat mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rat(1)) os << mag.str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace pfint

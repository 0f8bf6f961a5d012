// SPDX-License-Identifier: Apache-2.0
#include "pfint/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace pfint {

BiPoly::BiPoly(const Rat& c) {
  if (!c.is_zero()) t_.emplace(Mono{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rat& c, unsigned i, unsigned j) {
  BiPoly p;
  if (!c.is_zero()) p.t_.emplace(Mono{i, j}, c);
  return p;
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.degree() == 0);
}

int BiPoly::total_degree() const {
  return t_.empty() ? -1 : static_cast<int>(t_.begin()->first.degree());
}

int BiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(v == Var::X ? m.x : m.y));
  return d;
}

Rat BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = t_.find(Mono{i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(const Mono& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(Mono{ma.x + mb.x, ma.y + mb.y}, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const Rat& s) const {
  if (s.is_zero()) return {};
  BiPoly r = *this;
  for (auto& [m, c] : r.t_) c *= s;
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(Rat(1)), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(Mono{m.y, m.x}, c);
  return r;
}

BiPoly BiPoly::normalized() const {
  if (t_.empty()) return *this;
  Int l = 1, g = 0;
  for (const auto& [m, c] : t_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
  }
  // Scaling by lcm(den)/gcd(num) makes the coefficients coprime integers.
  Rat s(l, g);
  if (leading_coeff().sign() < 0) s = -s;
  return scaled(s);
}

BiDivision divide(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  BiDivision out;
  BiPoly p = f;
  const Mono lm = g.leading_mono();
  const Rat inv = Rat(1) / g.leading_coeff();
  while (!p.is_zero()) {
    const Mono m = p.leading_mono();
    const Rat c = p.leading_coeff();
    if (lm.divides(m)) {
      Mono shift{m.x - lm.x, m.y - lm.y};
      Rat t = c * inv;
      out.quotient.add_term(shift, t);
      for (const auto& [gm, gc] : g.terms()) p.add_term(Mono{gm.x + shift.x, gm.y + shift.y}, -t * gc);
    } else {
      out.remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return out;
}

BiPoly exact_div(const BiPoly& f, const BiPoly& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw NotDivisible("polynomial division is not exact", r);
  return q;
}

BiPoly partial(const BiPoly& f, Var v) {
  BiPoly r;
  for (const auto& [m, c] : f.terms()) {
    unsigned e = v == Var::X ? m.x : m.y;
    if (e == 0) continue;
    Mono d = v == Var::X ? Mono{m.x - 1, m.y} : Mono{m.x, m.y - 1};
    r.add_term(d, c * Rat(static_cast<long>(e)));
  }
  return r;
}

BiPoly antiderivative(const BiPoly& f, Var v) {
  BiPoly r;
  for (const auto& [m, c] : f.terms()) {
    unsigned e = (v == Var::X ? m.x : m.y) + 1;
    Mono up = v == Var::X ? Mono{e, m.y} : Mono{m.x, e};
    r.add_term(up, c / Rat(static_cast<long>(e)));
  }
  return r;
}

Rat evaluate(const BiPoly& f, const Rat& x0, const Rat& y0) {
  Rat acc;
  for (const auto& [m, c] : f.terms()) acc += c * x0.pow(m.x) * y0.pow(m.y);
  return acc;
}

Dense<UPoly> as_univariate(const BiPoly& f, Var v) {
  const int dv = f.degree_in(v);
  if (dv < 0) return {};
  const int dw = f.degree_in(v == Var::X ? Var::Y : Var::X);
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(dv + 1),
                                    std::vector<Rat>(static_cast<std::size_t>(dw + 1)));
  for (const auto& [m, c] : f.terms()) {
    unsigned main = v == Var::X ? m.x : m.y;
    unsigned other = v == Var::X ? m.y : m.x;
    raw[main][other] = c;
  }
  std::vector<UPoly> coeffs;
  coeffs.reserve(raw.size());
  for (auto& r : raw) coeffs.emplace_back(std::move(r));
  return Dense<UPoly>(std::move(coeffs));
}

BiPoly from_univariate(const Dense<UPoly>& p, Var v) {
  BiPoly r;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const UPoly& c = p[k];
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto main = static_cast<unsigned>(k), other = static_cast<unsigned>(j);
      r.add_term(v == Var::X ? Mono{main, other} : Mono{other, main}, c[j]);
    }
  }
  return r;
}

BiPoly embed(const UPoly& p, Var v) {
  BiPoly r;
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto e = static_cast<unsigned>(k);
    r.add_term(v == Var::X ? Mono{e, 0} : Mono{0, e}, p[k]);
  }
  return r;
}

UPoly restrict_to(const BiPoly& f, Var v) {
  if (f.degree_in(v == Var::X ? Var::Y : Var::X) > 0)
    throw Error("polynomial involves both variables");
  std::vector<Rat> c(static_cast<std::size_t>(std::max(f.degree_in(v), 0)) + 1);
  for (const auto& [m, a] : f.terms()) c[v == Var::X ? m.x : m.y] = a;
  return UPoly(std::move(c));
}

namespace {

using YPoly = Dense<UPoly>;

UPoly content(const YPoly& p) {
  UPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly primitive_part(const YPoly& p) {
  if (p.is_zero()) return p;
  return p.divided(content(p));
}

// Subresultant PRS gcd of two primitive polynomials of positive degree in
// Q[x][y]; the result is primitive.
YPoly subresultant_gcd(YPoly a, YPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  UPoly g(Rat(1)), h(Rat(1));
  for (;;) {
    const int delta = a.degree() - b.degree();
    YPoly r = prem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return YPoly(UPoly(Rat(1)));
    a = std::move(b);
    b = r.divided(g * h.pow(static_cast<unsigned>(delta)));
    g = a.lc();
    if (delta > 0) h = exact_quo(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  return primitive_part(b);
}

}  // namespace

BiPoly gcd(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error("gcd of two zero polynomials");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  YPoly a = as_univariate(f, Var::Y), b = as_univariate(g, Var::Y);
  UPoly ca = content(a), cb = content(b);
  UPoly c = gcd(ca, cb);
  YPoly pa = a.divided(ca), pb = b.divided(cb);
  YPoly pg = (pa.degree() < 1 || pb.degree() < 1) ? YPoly(UPoly(Rat(1))) : subresultant_gcd(pa, pb);
  return (from_univariate(pg, Var::Y) * embed(c, Var::X)).normalized();
}

bool coprime(const BiPoly& f, const BiPoly& g) { return gcd(f, g).is_constant(); }

BiPoly resultant(const BiPoly& f, const BiPoly& g, Var v) {
  if (f.is_zero() || g.is_zero()) throw Error("resultant of a zero polynomial");
  YPoly a = as_univariate(f, v), b = as_univariate(g, v);
  if (a.degree() < 1 || b.degree() < 1)
    throw Error("resultant requires positive degree in the eliminated variable");
  return embed(sylvester_resultant(a, b), v == Var::X ? Var::Y : Var::X);
}

BiPoly leading_form(const BiPoly& f) {
  if (f.is_zero()) throw Error("leading form of the zero polynomial");
  const unsigned d = f.leading_mono().degree();
  BiPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != d) break;
    r.add_term(m, c);
  }
  return r;
}

bool is_squarefree(const BiPoly& f) {
  if (f.is_zero()) throw Error("squarefree test of the zero polynomial");
  if (f.is_constant()) return true;
  BiPoly g = gcd(f, partial(f, Var::X));
  if (g.is_constant()) return true;
  return gcd(g, partial(f, Var::Y)).is_constant();
}

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rat mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (m.degree() == 0) {
      os << mag.str();
      continue;
    }
    bool need_star = false;
    if (mag != Rat(1)) {
      os << mag.str();
      need_star = true;
    }
    auto var = [&](char name, unsigned e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e > 1) os << '^' << e;
      need_star = true;
    };
    var('x', m.x);
    var('y', m.y);
  }
  return os.str();
}

}  // namespace pfint

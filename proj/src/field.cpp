// SPDX-License-Identifier: Apache-2.0
#include "pfint/field.hpp"

#include <initializer_list>

namespace pfint {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Status combine(std::initializer_list<Status> parts) {
  bool inconclusive = false;
  for (Status s : parts) {
    if (s == Status::Fails) return Status::Fails;
    if (s == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Status::Inconclusive : Status::Holds;
}

VectorField::VectorField(BiPoly p, BiPoly q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() && q_.is_zero()) throw Error("vector field with both components zero");
}

FactoredIntegral::FactoredIntegral(std::vector<Factor> factors) : f_(std::move(factors)) {
  if (f_.empty()) throw Error("factored integral needs at least one factor");
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i].u.is_constant()) throw Error("factor " + std::to_string(i + 1) + " is constant");
    if (f_[i].k == 0) throw Error("factor " + std::to_string(i + 1) + " has exponent 0");
    for (std::size_t j = 0; j < i; ++j)
      if (!coprime(f_[i].u, f_[j].u))
        throw Error("factors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                    " share the factor " + to_string(gcd(f_[i].u, f_[j].u)));
  }
}

int FactoredIntegral::sum_of_degrees() const {
  int s = 0;
  for (const auto& f : f_) s += f.u.total_degree();
  return s;
}

bool FactoredIntegral::has_repeated_factor() const {
  for (const auto& f : f_)
    if (f.k > 1) return true;
  return false;
}

BiPoly expand(const FactoredIntegral& f) {
  BiPoly h(Rat(1));
  for (const auto& [u, k] : f) h *= u.pow(k);
  return h;
}

VectorField construct_field(const FactoredIntegral& f) {
  BiPoly p, q;
  for (std::size_t l = 0; l < f.size(); ++l) {
    BiPoly others(Rat(static_cast<long>(f[l].k)));
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != l) others *= f[i].u;
    p += others * partial(f[l].u, Var::Y);
    q -= others * partial(f[l].u, Var::X);
  }
  return {p, q};
}

BiPoly lie_derivative(const VectorField& x, const BiPoly& h) {
  return partial(h, Var::X) * x.P() + partial(h, Var::Y) * x.Q();
}

bool is_first_integral(const VectorField& x, const BiPoly& h) { return lie_derivative(x, h).is_zero(); }

bool is_coprime(const VectorField& x) { return coprime(x.P(), x.Q()); }

ReducedField reduce_field(const VectorField& x) {
  BiPoly g = gcd(x.P(), x.Q());
  return {VectorField(exact_div(x.P(), g), exact_div(x.Q(), g)), g};
}

BiPoly quotient_multiplier(const VectorField& x2, const VectorField& x1) {
  if (!is_coprime(x1)) throw Error("quotient multiplier needs a field with coprime components");
  if (x2.degree() < x1.degree()) throw Error("quotient multiplier needs deg X2 >= deg X1");
  BiPoly g = !x1.P().is_zero() ? exact_div(x2.P(), x1.P()) : exact_div(x2.Q(), x1.Q());
  BiPoly rp = x2.P() - g * x1.P();
  if (!rp.is_zero()) throw NotDivisible("fields are not proportional", rp);
  BiPoly rq = x2.Q() - g * x1.Q();
  if (!rq.is_zero()) throw NotDivisible("fields are not proportional", rq);
  return g;
}

std::optional<BiPoly> is_hamiltonian(const VectorField& x) {
  if (!x.divergence().is_zero()) return std::nullopt;
  BiPoly h = antiderivative(x.P(), Var::Y);
  // Divergence zero makes -Q - h_x independent of y.
  h += antiderivative(-x.Q() - partial(h, Var::X), Var::X);
  return h;
}

std::optional<BiPoly> cofactor(const BiPoly& f, const VectorField& x) {
  if (f.is_constant()) throw Error("cofactor of a constant polynomial");
  auto [k, r] = divide(lie_derivative(x, f), f);
  if (!r.is_zero()) return std::nullopt;
  return k;
}

CheckResult theorem_b_degree_check(const FactoredIntegral& f) {
  if (f.size() < 2) throw Error("degree check needs at least two factors");
  VectorField x = construct_field(f);
  const int expected = f.sum_of_degrees() - 1;
  BiPoly g = gcd(x.P(), x.Q());
  std::string degrees =
      "degree " + std::to_string(x.degree()) + ", sum of factor degrees minus one " + std::to_string(expected);
  if (!g.is_constant()) {
    Witness w;
    w.common_factor = g;
    return CheckResult::fail("constructed field is not coprime; " + degrees, w);
  }
  if (x.degree() != expected) {
    Witness w;
    w.note = "constructed field degree " + std::to_string(x.degree());
    return CheckResult::fail(degrees, w);
  }
  return CheckResult::pass(degrees + ", coprime");
}

}  // namespace pfint

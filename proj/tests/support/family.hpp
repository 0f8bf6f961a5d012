// SPDX-License-Identifier: Apache-2.0
//
// Seeded random generators shared by the property and acceptance tests.
#pragma once

#include <optional>
#include <random>
#include <vector>

#include "pfint/field.hpp"

namespace pfint::testing {

struct FamilyLimits {
  int min_factors = 1;
  int max_factors = 3;
  int max_degree = 3;
  unsigned max_exponent = 3;
  int max_coeff = 9;  // bound on numerators and denominators
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rat coefficient(int bound, bool nonzero = false) {
    for (;;) {
      Rat c(Int(uniform(-bound, bound)), Int(uniform(1, bound)));
      if (!nonzero || !c.is_zero()) return c;
    }
  }

  /// Polynomial of total degree exactly d; each lower monomial is present
  /// with probability one half.
  BiPoly polynomial(int d, int bound) {
    BiPoly f;
    for (int t = 0; t <= d; ++t)
      for (int i = 0; i <= t; ++i)
        if (coin())
          f.add_term(Mono{static_cast<unsigned>(i), static_cast<unsigned>(t - i)}, coefficient(bound));
    if (f.total_degree() < d) f.add_term(Mono{static_cast<unsigned>(d), 0}, coefficient(bound, true));
    return f;
  }

  /// Random valid factored integral. Candidates are redrawn until the factors
  /// are nonconstant, pairwise coprime and pairwise functionally independent
  /// (nonzero Jacobian), so that H genuinely depends on both variables.
  FactoredIntegral integral(const FamilyLimits& lim) {
    for (;;) {
      const int p = uniform(lim.min_factors, lim.max_factors);
      std::vector<Factor> fs;
      for (int i = 0; i < p; ++i)
        fs.push_back({polynomial(uniform(1, lim.max_degree), lim.max_coeff),
                      static_cast<unsigned>(uniform(1, static_cast<int>(lim.max_exponent)))});
      if (auto f = accept(std::move(fs))) return *f;
    }
  }

  static std::optional<FactoredIntegral> accept(std::vector<Factor> fs) {
    for (const auto& f : fs)
      if (f.u.is_constant()) return std::nullopt;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        if (!coprime(fs[i].u, fs[j].u)) return std::nullopt;
        BiPoly jac = partial(fs[i].u, Var::X) * partial(fs[j].u, Var::Y) -
                     partial(fs[i].u, Var::Y) * partial(fs[j].u, Var::X);
        if (jac.is_zero()) return std::nullopt;
      }
    if (fs.size() == 1) {
      const BiPoly& u = fs[0].u;
      if (partial(u, Var::X).is_zero() || partial(u, Var::Y).is_zero()) return std::nullopt;
    }
    return FactoredIntegral(std::move(fs));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pfint::testing

// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "pfint/linearize.hpp"
#include "pfint/parse.hpp"
#include "support/family.hpp"

using namespace pfint;

namespace {
BiPoly P(const char* s) { return parse_bipoly(s); }
VectorField F(const char* p, const char* q) { return {P(p), P(q)}; }
FactoredIntegral I(std::initializer_list<std::pair<const char*, unsigned>> fs) {
  std::vector<Factor> v;
  for (const auto& [u, k] : fs) v.push_back({P(u), k});
  return FactoredIntegral(std::move(v));
}

// Recomputes every identity of a certificate from its printed parts.
void check_certificate(const LinearizationCertificate& c, const VectorField& x) {
  CHECK(c.verified());
  CHECK(c.D == c.K1 * c.K4 - c.K2 * c.K3);
  CHECK(c.G * partial(c.u_expr, Var::X) * x.P() + c.G * partial(c.u_expr, Var::Y) * x.Q() == c.D * c.u_expr);
  CHECK(c.G * partial(c.v_expr, Var::X) * x.P() + c.G * partial(c.v_expr, Var::Y) * x.Q() == -(c.D * c.v_expr));
}
}  // namespace

TEST_CASE("K-matrix") {
  KMatrix k = k_matrix(I({{"x", 2}, {"y", 1}}));
  CHECK(k.K1 == P("2"));
  CHECK(k.K2.is_zero());
  CHECK(k.K3.is_zero());
  CHECK(k.K4 == P("1"));
  KMatrix m = k_matrix(I({{"x", 1}, {"y", 1}, {"x + y", 3}}));
  // Product rule on x y: K1 = y, K2 = x.
  CHECK(m.K1 == P("y"));
  CHECK(m.K2 == P("x"));
  CHECK(m.K3 == P("3"));
  CHECK(m.K4 == P("3"));
  CHECK_THROWS(k_matrix(I({{"x", 2}})));
}

TEST_CASE("factor split moves the pivot last") {
  FactoredIntegral f = I({{"x", 1}, {"y", 2}, {"x + y", 3}});
  FactoredIntegral g = factor_split(f, 1);
  CHECK(g[2].u == P("x"));
  CHECK(g[0].u == P("y"));
  CHECK(factor_split(f, 3)[2].u == P("x + y"));
  CHECK_THROWS(factor_split(f, 0));
  CHECK_THROWS(factor_split(f, 4));
}

TEST_CASE("linearization of the worked examples") {
  auto a = linearize(I({{"x", 2}, {"y", 1}}), F("x", "-2*y"));
  CHECK(a.pivot == 2);
  CHECK(a.u_expr == P("x^2"));
  CHECK(a.v_expr == P("y"));
  CHECK(a.D == P("2"));
  CHECK(a.G == P("1"));
  CHECK_FALSE(a.hamiltonian);
  check_certificate(a, F("x", "-2*y"));
  CHECK(a.time_rescaling() == "dtau = (D/G) dt");

  auto b = linearize(I({{"x", 2}, {"y", 1}}), F("x", "-2*y"), 1);
  CHECK(b.u_expr == P("y"));
  CHECK(b.v_expr == P("x^2"));
  CHECK(b.D == P("-2"));
  check_certificate(b, F("x", "-2*y"));

  FactoredIntegral pc = I({{"y - x^2", 1}, {"y + x^2", 2}});
  VectorField xp = F("3*y - x^2", "6*x^3 - 2*x*y");
  auto c = linearize(pc, xp);
  CHECK(c.D == P("-8*x"));
  CHECK(c.G == P("1"));
  check_certificate(c, xp);
  auto d = linearize(pc, xp, 1);
  CHECK(d.D == P("8*x"));
  check_certificate(d, xp);

  auto e = linearize(I({{"x", 1}, {"y", 1}}), F("x", "-y"));
  CHECK(e.hamiltonian);
  check_certificate(e, F("x", "-y"));
}

TEST_CASE("unreduced fields carry the common factor into G") {
  FactoredIntegral f = I({{"x", 2}, {"y", 1}});
  CHECK_THROWS(linearize(f, F("x*(x + 1)", "-2*y*(x + 1)")));
  auto c = linearize(f, F("x", "-2*y"));
  CHECK(c.G == P("1"));
}

TEST_CASE("a perturbed field is rejected with a remainder") {
  try {
    linearize(I({{"x", 2}, {"y", 1}}), F("x", "-3*y"));
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK_FALSE(e.remainder().is_zero());
  }
  CHECK_THROWS_AS(linearize(I({{"x", 2}, {"y", 1}}), F("x + y", "-2*y")), NotDivisible);
}

TEST_CASE("every pivot certifies on random integrals") {
  testing::Generator gen(51);
  testing::FamilyLimits lim;
  lim.min_factors = 2;
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    FactoredIntegral f = gen.integral(lim);
    const VectorField x = reduce_field(construct_field(f)).field;
    for (std::size_t piv = 1; piv <= f.size(); ++piv) {
      LinearizationCertificate c;
      try {
        c = linearize(f, x, piv);
      } catch (const NotDivisible&) {
        FAIL("unexpected remainder at pivot " << piv);
        continue;
      } catch (const Error&) {
        continue;  // D vanished for this split
      }
      check_certificate(c, x);
      ++checked;
    }
  }
  CHECK(checked > 60);
}

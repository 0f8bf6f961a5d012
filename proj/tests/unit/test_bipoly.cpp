// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "pfint/parse.hpp"
#include "support/family.hpp"
#include "support/oracles.hpp"

using namespace pfint;

namespace {
BiPoly P(const char* s) { return parse_bipoly(s); }
Rat R(long n, long d = 1) { return Rat(Int(n), Int(d)); }
const BiPoly X = BiPoly::x(), Y = BiPoly::y();
}  // namespace

TEST_CASE("parser builds the expected terms") {
  BiPoly f = P("y - x^2");
  CHECK(f.terms().size() == 2);
  CHECK(f.coeff(0, 1) == R(1));
  CHECK(f.coeff(2, 0) == R(-1));
  BiPoly g = P("3/2*x*y + 1");
  CHECK(g.coeff(1, 1) == R(3, 2));
  CHECK(g.coeff(0, 0) == R(1));
  CHECK(P("-x^2") == -(X * X));
  CHECK(P("(x+y)^3") == (X + Y).pow(3));
  CHECK(P("2*(x - 1/3)*y") == BiPoly(R(2)) * (X - BiPoly(R(1, 3))) * Y);
  CHECK(P("x - -y") == X + Y);
}

TEST_CASE("parser rejects malformed input with a position") {
  CHECK_THROWS_AS(P("x^(-1)"), ParseError);
  CHECK_THROWS_AS(P("x + z"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("(x + y"), ParseError);
  CHECK_THROWS_AS(P("x y"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  try {
    P("x + z");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }
}

TEST_CASE("printing is canonical and reparses") {
  CHECK(to_string(P("y - x^2")) == "-x^2 + y");
  CHECK(to_string(P("1 + 3/2*x*y")) == "3/2*x*y + 1");
  CHECK(to_string(P("-2*y")) == "-2*y");
  CHECK(to_string(BiPoly()) == "0");
  testing::Generator gen(1);
  for (int i = 0; i < 50; ++i) {
    BiPoly f = gen.polynomial(gen.uniform(0, 4), 9);
    CHECK(P(to_string(f).c_str()) == f);
  }
}

TEST_CASE("ring operations") {
  CHECK((X + Y) * (X - Y) == P("x^2 - y^2"));
  CHECK(P("y - x^2").pow(2) == P("y^2 - 2*x^2*y + x^4"));
  BiPoly f = P("3*x*y - 7/2");
  CHECK((f + (-f)).is_zero());
  CHECK((f + (-f)).terms().empty());
  CHECK(f.scaled(R(2)) == P("6*x*y - 7"));
  CHECK(f.pow(0) == BiPoly(R(1)));
}

TEST_CASE("products agree with pointwise evaluation") {
  testing::Generator gen(2);
  for (int i = 0; i < 60; ++i) {
    BiPoly f = gen.polynomial(gen.uniform(0, 3), 9), g = gen.polynomial(gen.uniform(0, 3), 9);
    Rat x0 = gen.coefficient(5), y0 = gen.coefficient(5);
    CHECK(oracle::eval(f * g, x0, y0) == oracle::eval(f, x0, y0) * oracle::eval(g, x0, y0));
    CHECK(oracle::eval(f - g, x0, y0) == oracle::eval(f, x0, y0) - oracle::eval(g, x0, y0));
    CHECK(evaluate(f, x0, y0) == oracle::eval(f, x0, y0));
  }
}

TEST_CASE("partial derivatives and antiderivatives") {
  CHECK(partial(P("x^2*y"), Var::X) == P("2*x*y"));
  CHECK(partial(P("x^2*y"), Var::Y) == P("x^2"));
  CHECK(partial(P("y^3 + 7"), Var::X).is_zero());
  testing::Generator gen(3);
  for (int i = 0; i < 30; ++i) {
    BiPoly f = gen.polynomial(gen.uniform(0, 4), 9);
    CHECK(partial(antiderivative(f, Var::X), Var::X) == f);
    CHECK(partial(antiderivative(f, Var::Y), Var::Y) == f);
    CHECK(antiderivative(f, Var::Y).coeff(0, 0).is_zero());
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  CHECK(exact_div(P("x^2*y"), X) == P("x*y"));
  CHECK_THROWS_AS(exact_div(P("x^2 + 1"), X), NotDivisible);
  try {
    exact_div(P("x^2 + 1"), X);
  } catch (const NotDivisible& e) {
    CHECK_FALSE(e.remainder().is_zero());
  }
  testing::Generator gen(4);
  for (int i = 0; i < 30; ++i) {
    BiPoly f = gen.polynomial(gen.uniform(0, 3), 9), g = gen.polynomial(gen.uniform(1, 3), 9);
    CHECK(exact_div(f * g, g) == f);
    auto [q, r] = divide(f * g + BiPoly(R(1)), g);
    CHECK(q * g + r == f * g + BiPoly(R(1)));
  }
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P("x^2*y"), P("x*y^2")) == P("x*y"));
  CHECK(gcd(P("x + y"), P("x - y")) == BiPoly(R(1)));
  CHECK(gcd(P("(x+y+1)*x"), P("(x+y+1)*(y-x^2)")) == P("x + y + 1"));
  CHECK(gcd(P("3*x^2 - 3"), P("6*x + 6")) == P("x + 1"));
  CHECK_THROWS(gcd(BiPoly(), BiPoly()));
}

TEST_CASE("gcd recovers a planted common factor") {
  // a and b are coprime when their resultants in both variables are nonzero
  // (a nonzero Res_y excludes common factors involving y, Res_x the rest).
  testing::Generator gen(5);
  int checked = 0;
  while (checked < 40) {
    BiPoly a = gen.polynomial(gen.uniform(1, 3), 9), b = gen.polynomial(gen.uniform(1, 3), 9);
    BiPoly g = gen.polynomial(gen.uniform(0, 2), 9);
    if (g.is_zero() || a.degree_in(Var::Y) < 1 || b.degree_in(Var::Y) < 1 || a.degree_in(Var::X) < 1 ||
        b.degree_in(Var::X) < 1)
      continue;
    if (resultant(a, b, Var::Y).is_zero() || resultant(a, b, Var::X).is_zero()) continue;
    BiPoly h = gcd(g * a, g * b);
    CHECK(exact_div(h, g).is_constant());
    CHECK_NOTHROW(exact_div(g * a, h));
    CHECK_NOTHROW(exact_div(g * b, h));
    ++checked;
  }
}

TEST_CASE("resultants") {
  CHECK(resultant(P("y - x^2"), P("y + x^2"), Var::Y) == P("2*x^2"));
  CHECK(resultant(P("y - x"), P("y - x"), Var::Y).is_zero());
  CHECK(resultant(X, P("x + 1"), Var::X) == BiPoly(R(1)));
  CHECK_THROWS(resultant(X, P("x + 1"), Var::Y));
  // Against root differences: f = prod (y - a_i(x)) with a_i linear in x.
  BiPoly f = (Y - X) * (Y - BiPoly(R(2)) * X), g = Y + X;
  // prod (a_i - b) with b = -x: (x + x)(2x + x) = 6x^2.
  CHECK(resultant(f, g, Var::Y) == P("6*x^2"));
}

TEST_CASE("leading form and squarefreeness") {
  CHECK(leading_form(P("y - x^2")) == P("-x^2"));
  CHECK(leading_form(P("x^2 + y^2 - 1")) == P("x^2 + y^2"));
  CHECK(leading_form(P("x*y + x + y")) == P("x*y"));
  CHECK_THROWS(leading_form(BiPoly()));
  CHECK(is_squarefree(P("x^2 + y^2")));
  CHECK_FALSE(is_squarefree(P("x^2")));
  CHECK_FALSE(is_squarefree(P("(x+y)^2*y")));
  CHECK(is_squarefree(P("x*y")));
  CHECK_FALSE(is_squarefree(P("(y - x^2)^2*(x + 1)")));
  CHECK_THROWS(is_squarefree(BiPoly()));
}

TEST_CASE("evaluation examples") {
  CHECK(evaluate(P("y - x^2"), R(2), R(4)) == R(0));
  CHECK(evaluate(P("x^2*y"), R(1), R(3)) == R(3));
  CHECK(evaluate(BiPoly(), R(5), R(-2)) == R(0));
}

TEST_CASE("univariate views round-trip") {
  testing::Generator gen(6);
  for (int i = 0; i < 20; ++i) {
    BiPoly f = gen.polynomial(gen.uniform(0, 4), 9);
    CHECK(from_univariate(as_univariate(f, Var::Y), Var::Y) == f);
    CHECK(from_univariate(as_univariate(f, Var::X), Var::X) == f);
    CHECK(f.swapped().swapped() == f);
  }
  CHECK(restrict_to(P("x^2 - 2"), Var::X) == UPoly(std::vector<Rat>{R(-2), R(0), R(1)}));
  CHECK_THROWS(restrict_to(P("x*y"), Var::X));
}

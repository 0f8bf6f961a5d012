// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <complex>
#include <numeric>
#include <random>

#include "pfint/roots.hpp"
#include "support/oracles.hpp"

using namespace pfint;

namespace {

// Reduced fraction over int64, the reference for Rat arithmetic.
struct Frac {
  long n, d;
  Frac(long a, long b) {
    long g = std::gcd(a, b);
    if (b < 0) g = -g;
    n = a / g;
    d = b / g;
  }
};

Rat R(long n, long d = 1) { return Rat(Int(n), Int(d)); }

}  // namespace

TEST_CASE("rational arithmetic agrees with int64 fractions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  for (int i = 0; i < 500; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Frac s(a * d + c * b, b * d), p(a * c, b * d);
    CHECK(R(a, b) + R(c, d) == R(s.n, s.d));
    CHECK(R(a, b) * R(c, d) == R(p.n, p.d));
    CHECK(R(a, b) - R(c, d) == R(a * d - c * b, b * d));
    if (c != 0) {
      Frac q(a * d, b * c);
      CHECK(R(a, b) / R(c, d) == R(q.n, q.d));
    }
    CHECK((R(a, b) < R(c, d)) == (a * d < c * b));
  }
}

TEST_CASE("rationals are canonical") {
  CHECK(R(6, -4).str() == "-3/2");
  CHECK(R(0, 5).str() == "0");
  CHECK(R(10, 5).is_integer());
  CHECK(R(-7, 2).floor() == -4);
  CHECK(R(-7, 2).ceil() == -3);
  CHECK(R(2, 3).pow(3) == R(8, 27));
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("3/4") == R(3, 4));
  CHECK(Rat::parse("-12") == R(-12));
  CHECK(Rat::parse("-6/8") == R(-3, 4));
  CHECK_THROWS_AS(Rat::parse("1/0"), DivisionByZero);
  CHECK_THROWS(Rat::parse("abc"));
  CHECK_THROWS_AS(R(1) / R(0), DivisionByZero);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_between(R(1, 3), R(1, 2)) == R(1, 2));
  CHECK(simplest_between(R(-1), R(1)) == R(0));
  CHECK(simplest_between(R(32, 100), R(34, 100)) == R(1, 3));
  CHECK(simplest_between(R(-34, 100), R(-32, 100)) == R(-1, 3));
  // Brute force over denominators: the first q with a fraction inside.
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    long a = std::uniform_int_distribution<long>(1, 500)(rng);
    long w = std::uniform_int_distribution<long>(1, 20)(rng);
    Rat lo = R(a, 97), hi = R(a + w, 97);
    Rat s = simplest_between(lo, hi);
    CHECK(lo <= s);
    CHECK(s <= hi);
    for (long q = 1; q < s.den().get_si(); ++q) {
      Int p = (lo * R(q)).ceil();
      CHECK_FALSE(Rat(p, Int(q)) <= hi);
    }
  }
}

TEST_CASE("univariate division and gcd") {
  UPoly a = oracle::from_roots({R(1), R(2), R(-3)});
  UPoly b = oracle::from_roots({R(2), R(5)}, R(3));
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == oracle::from_roots({R(2)}));
  CHECK(gcd(UPoly(), UPoly()).is_zero());
  XGcd e = xgcd(a, b);
  CHECK(e.s * a + e.t * b == e.g);
  CHECK_THROWS(exact_quo(a, b));
  CHECK(exact_quo(a * b, b) == a);
}

TEST_CASE("squarefree decomposition reassembles the input") {
  UPoly p = oracle::from_roots({R(1), R(1), R(1), R(-2), R(-2), R(1, 3)}, R(5));
  auto parts = squarefree_decomposition(p);
  UPoly back(p.lc());
  for (const auto& [s, k] : parts) back = back * s.pow(k);
  CHECK(back == p);
  CHECK(squarefree_part(p) == oracle::from_roots({R(1), R(-2), R(1, 3)}));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[2].second == 3);
}

TEST_CASE("sylvester resultant matches the product of root differences") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> root(-6, 6), lead(1, 4);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rat> ra, rb;
    int na = 1 + i % 4, nb = 1 + (i / 4) % 3;
    for (int k = 0; k < na; ++k) ra.push_back(R(root(rng), 2));
    for (int k = 0; k < nb; ++k) rb.push_back(R(root(rng)));
    Rat la = R(lead(rng)), lb = R(-lead(rng));
    CHECK(sylvester_resultant(oracle::from_roots(ra, la), oracle::from_roots(rb, lb)) ==
          oracle::resultant_from_roots(ra, la, rb, lb));
  }
  CHECK_THROWS(sylvester_resultant(UPoly(R(3)), oracle::from_roots({R(1)})));
}

TEST_CASE("rational roots agree with divisor enumeration") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> n(-9, 9), d(1, 4);
  for (int i = 0; i < 80; ++i) {
    std::vector<Rat> roots;
    for (int k = 0; k < 1 + i % 4; ++k) roots.push_back(R(n(rng), d(rng)));
    UPoly p = oracle::from_roots(roots, R(d(rng)));
    p = p * UPoly(std::vector<Rat>{R(1 + i % 3), R(0), R(1)});  // x^2 + c, no rational roots
    std::set<Rat> expected = oracle::rational_roots_by_divisors(p);
    auto got = rational_roots(p);
    std::set<Rat> got_set;
    unsigned total = 0;
    for (const auto& [r, m] : got) {
      got_set.insert(r);
      total += m;
    }
    CHECK(got_set == expected);
    CHECK(total == roots.size());
  }
  CHECK(rational_roots(UPoly(std::vector<Rat>{R(-2), R(0), R(1)})).empty());
}

TEST_CASE("complex root isolation on cyclotomic and clustered polynomials") {
  for (int n : {2, 3, 5, 8}) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    c[0] = R(-1);
    c[static_cast<std::size_t>(n)] = R(1);
    auto boxes = isolate_complex_roots(UPoly(c), {R(1, 1000000)});
    REQUIRE(boxes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      std::complex<double> z = std::polar(1.0, 2 * M_PI * k / n);
      int hits = 0;
      for (const auto& b : boxes)
        if (b.re_lo.to_double() - 1e-12 <= z.real() && z.real() <= b.re_hi.to_double() + 1e-12 &&
            b.im_lo.to_double() - 1e-12 <= z.imag() && z.imag() <= b.im_hi.to_double() + 1e-12)
          ++hits;
      CHECK(hits == 1);
    }
  }
  // Roots 1 and 1 + 2^-40 are separated; the double root at -1 is one box.
  UPoly p = oracle::from_roots({R(1), Rat(Int(1), Int(1)) + Rat(Int(1), Int(1) << 40), R(-1), R(-1)});
  auto boxes = isolate_complex_roots(p);
  REQUIRE(boxes.size() == 3);
  CHECK(boxes[0].multiplicity == 2);
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      CHECK((boxes[i].re_hi < boxes[j].re_lo || boxes[j].re_hi < boxes[i].re_lo ||
             boxes[i].im_hi < boxes[j].im_lo || boxes[j].im_hi < boxes[i].im_lo));
}

TEST_CASE("precision cap is reported, not guessed") {
  UPoly p = oracle::from_roots({R(1), Rat(Int(1), Int(1)) + Rat(Int(1), Int(1) << 200)});
  IsolationOptions tight;
  tight.precision_cap_bits = 64;
  CHECK_THROWS_AS(isolate_complex_roots(p, tight), PrecisionExhausted);
  CHECK(isolate_complex_roots(p).size() == 2);
}

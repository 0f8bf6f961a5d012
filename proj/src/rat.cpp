// SPDX-License-Identifier: Apache-2.0
#include "pfint/rat.hpp"

#include <cctype>

namespace pfint {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

namespace {

Int parse_int(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  bool neg = false;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    ++i;
  }
  if (i == s.size()) throw Error("malformed rational: '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error("malformed rational: '" + std::string(s) + "'");
  Int v(std::string(s.substr(i)), 10);
  return neg ? Int(-v) : v;
}

}  // namespace

Rat Rat::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s, true));
  Int num = parse_int(s.substr(0, slash), true);
  Int den = parse_int(s.substr(slash + 1), false);
  if (den == 0) throw DivisionByZero();
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rat(n, d);
}

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent.
  Int c = lo.ceil();
  if (Rat(c) <= hi) return Rat(c);
  Int f = lo.floor();
  Rat frac_lo = lo - Rat(f), frac_hi = hi - Rat(f);
  // lo is not an integer here, so frac_lo > 0.
  Rat inner = simplest_between(Rat(1) / frac_hi, Rat(1) / frac_lo);
  return Rat(f) + Rat(1) / inner;
}

}  // namespace pfint

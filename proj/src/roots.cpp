// SPDX-License-Identifier: Apache-2.0
//
// Root isolation: Durand-Kerner approximations in GMP floating point, then
// an exact inclusion certificate. For a squarefree p of degree n with
// pairwise distinct approximations z_i, the Weierstrass corrections
// W_i = p(z_i) / (lc * prod_{j!=i} (z_i - z_j)) give Gershgorin disks
// D(z_i, n|W_i|) whose connected components hold as many roots as disks.
// W_i is evaluated in Gaussian rationals, so pairwise disjoint boxes around
// those disks each hold exactly one root.
#include "pfint/roots.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace pfint {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator*(const Interval& a, const Interval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
CInterval operator*(const CInterval& a, const CInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInterval eval(const UPoly& p, const CInterval& z) {
  CInterval acc{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + CInterval{{p[k], p[k]}, {Rat(0), Rat(0)}};
  return acc;
}

namespace {

struct QC {
  Rat re, im;
  QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
  QC operator*(const QC& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Rat norm2() const { return re * re + im * im; }
};

QC horner(const UPoly& p, const QC& z) {
  QC acc{Rat(0), Rat(0)};
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * z;
    acc.re += p[k];
  }
  return acc;
}

mpf_class to_mpf(const Rat& q, unsigned prec) {
  mpf_class f(0, prec);
  mpf_set_q(f.get_mpf_t(), q.raw().get_mpq_t());
  return f;
}

Rat to_rat(const mpf_class& f) {
  mpq_class q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return Rat(q);
}

// Smallest convenient rational r with r*r >= q.
Rat sqrt_upper(const Rat& q) {
  if (q.is_zero()) return Rat(0);
  mpf_class f = to_mpf(q, 96), s(0, 96);
  mpf_sqrt(s.get_mpf_t(), f.get_mpf_t());
  s *= mpf_class(1.0 + std::ldexp(1.0, -40), 96);
  Rat r = to_rat(s);
  while (r * r < q) r *= Rat(2);
  return r;
}

class DurandKerner {
 public:
  explicit DurandKerner(const UPoly& p) : p_(p), n_(static_cast<std::size_t>(p.degree())) {
    Rat bound(0);
    for (std::size_t k = 0; k < n_; ++k) bound = std::max(bound, (p[k] / p.lc()).abs());
    radius_ = 1.0 + bound.to_double();
    if (!std::isfinite(radius_)) radius_ = 1e300;
    for (std::size_t k = 0; k < n_; ++k) {
      double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_) + 0.4;
      re_.emplace_back(radius_ * std::cos(th));
      im_.emplace_back(radius_ * std::sin(th));
    }
  }

  void refine(unsigned prec) {
    for (std::size_t i = 0; i < n_; ++i) {
      re_[i].set_prec(prec);
      im_[i].set_prec(prec);
    }
    std::vector<mpf_class> a;
    for (std::size_t k = 0; k <= n_; ++k) a.push_back(to_mpf(p_[k], prec));
    mpf_class tol(radius_, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec > 8 ? prec - 8 : 0);
    mpf_class tol2(0, prec);
    tol2 = tol * tol;

    mpf_class vr(0, prec), vi(0, prec), dr(0, prec), di(0, prec), tr(0, prec), ti(0, prec), t(0, prec),
        den(0, prec), wr(0, prec), wi(0, prec), w2(0, prec);
    const std::size_t max_iter = 200 + 40 * n_ * (prec / 64 + 1);
    for (std::size_t it = 0; it < max_iter; ++it) {
      mpf_class worst(0, prec);
      for (std::size_t i = 0; i < n_; ++i) {
        vr = a[n_];
        vi = 0;
        for (std::size_t k = n_; k-- > 0;) {
          t = vr * re_[i] - vi * im_[i] + a[k];
          vi = vr * im_[i] + vi * re_[i];
          vr = t;
        }
        dr = a[n_];
        di = 0;
        for (std::size_t j = 0; j < n_; ++j) {
          if (j == i) continue;
          tr = re_[i] - re_[j];
          ti = im_[i] - im_[j];
          t = dr * tr - di * ti;
          di = dr * ti + di * tr;
          dr = t;
        }
        den = dr * dr + di * di;
        if (sgn(den) == 0) {
          re_[i] += tol;
          continue;
        }
        wr = (vr * dr + vi * di) / den;
        wi = (vi * dr - vr * di) / den;
        re_[i] -= wr;
        im_[i] -= wi;
        w2 = wr * wr + wi * wi;
        if (w2 > worst) worst = w2;
      }
      if (worst <= tol2) break;
    }
  }

  std::vector<QC> approximations() const {
    std::vector<QC> z;
    for (std::size_t i = 0; i < n_; ++i) z.push_back({to_rat(re_[i]), to_rat(im_[i])});
    return z;
  }

 private:
  UPoly p_;
  std::size_t n_;
  double radius_ = 1.0;
  std::vector<mpf_class> re_, im_;
};

struct Disk {
  QC center;
  Rat radius;
  unsigned multiplicity;
};

// Inclusion disks for the approximations, or false if two coincide.
bool certify(const UPoly& p, const std::vector<QC>& z, unsigned mult, std::vector<Disk>& out) {
  const std::size_t n = z.size();
  const Rat nn(static_cast<long>(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    QC den{p.lc(), Rat(0)};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den = den * (z[i] - z[j]);
    Rat d2 = den.norm2();
    if (d2.is_zero()) return false;
    Rat w2 = horner(p, z[i]).norm2() / d2;
    out.push_back({z[i], sqrt_upper(nn * w2), mult});
  }
  return true;
}

bool boxes_disjoint(const Disk& a, const Disk& b) {
  Rat reach = a.radius + b.radius;
  return (a.center.re - b.center.re).abs() > reach || (a.center.im - b.center.im).abs() > reach;
}

}  // namespace

std::vector<RootBox> isolate_complex_roots(const UPoly& p, const IsolationOptions& opts) {
  if (p.is_zero()) throw Error("root isolation of the zero polynomial");
  if (p.degree() < 1) throw Error("root isolation needs degree >= 1");

  struct Factor {
    UPoly poly;
    unsigned mult;
    std::unique_ptr<DurandKerner> dk;
  };
  std::vector<Factor> factors;
  for (auto& [s, k] : squarefree_decomposition(p)) factors.push_back({s, k, nullptr});
  for (auto& f : factors)
    if (f.poly.degree() > 1) f.dk = std::make_unique<DurandKerner>(f.poly);

  unsigned cap = opts.precision_cap_bits;
  if (!opts.max_width.is_zero()) {
    // Enough bits to reach the requested width with margin.
    Int inv = (Rat(1) / opts.max_width).ceil();
    cap = std::max<unsigned>(cap, static_cast<unsigned>(mpz_sizeinbase(inv.get_mpz_t(), 2)) * 2 + 128);
  }

  for (unsigned prec = 64;; prec *= 2) {
    std::vector<Disk> disks;
    bool ok = true;
    for (auto& f : factors) {
      if (f.poly.degree() == 1) {
        disks.push_back({{-f.poly[0] / f.poly[1], Rat(0)}, Rat(0), f.mult});
        continue;
      }
      f.dk->refine(prec);
      if (!certify(f.poly, f.dk->approximations(), f.mult, disks)) ok = false;
    }
    for (std::size_t i = 0; ok && i < disks.size(); ++i) {
      if (!opts.max_width.is_zero() && disks[i].radius * Rat(2) > opts.max_width) ok = false;
      for (std::size_t j = i + 1; ok && j < disks.size(); ++j)
        if (!boxes_disjoint(disks[i], disks[j])) ok = false;
    }
    if (ok) {
      std::vector<RootBox> boxes;
      for (const auto& d : disks)
        boxes.push_back({d.center.re - d.radius, d.center.re + d.radius, d.center.im - d.radius,
                         d.center.im + d.radius, d.multiplicity});
      std::sort(boxes.begin(), boxes.end(), [](const RootBox& a, const RootBox& b) {
        if (a.re_lo != b.re_lo) return a.re_lo < b.re_lo;
        return a.im_lo < b.im_lo;
      });
      return boxes;
    }
    if (prec >= cap) throw PrecisionExhausted("root boxes could not be separated within the precision cap");
  }
}

std::vector<std::pair<Rat, unsigned>> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  std::vector<std::pair<Rat, unsigned>> out;
  for (const auto& [s, k] : squarefree_decomposition(p)) {
    if (s.degree() == 1) {
      out.emplace_back(-s[0] / s[1], k);
      continue;
    }
    // A rational root q/r of the primitive integer form has r | lc, so in
    // an interval narrower than 1/lc^2 it is the simplest rational there.
    std::vector<Int> ints = integer_primitive(s);
    Int lead = abs(ints.back());
    Rat width = Rat(Int(1), lead * lead * 2);
    IsolationOptions opts;
    opts.max_width = width;
    for (const auto& box : isolate_complex_roots(s, opts)) {
      if (!box.touches_real_axis()) continue;
      Rat cand = simplest_between(box.re_lo, box.re_hi);
      if (s.eval(cand).is_zero()) out.emplace_back(cand, k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pfint

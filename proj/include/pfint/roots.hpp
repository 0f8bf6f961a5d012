// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "pfint/upoly.hpp"

namespace pfint {

struct Interval {
  Rat lo;
  Rat hi;
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  Rat width() const { return hi - lo; }
};

/// Rectangular complex interval.
struct CInterval {
  Interval re;
  Interval im;
};

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
/// Interval Horner evaluation; the result encloses p(z) for every z in the box.
CInterval eval(const UPoly& p, const CInterval& z);

/// Axis-aligned box in C certified to hold exactly `multiplicity` roots
/// (counted with multiplicity) of the polynomial it was produced for.
struct RootBox {
  Rat re_lo, re_hi, im_lo, im_hi;
  unsigned multiplicity = 1;

  bool contains(const Rat& re, const Rat& im) const {
    return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
  }
  bool touches_real_axis() const { return im_lo.sign() <= 0 && im_hi.sign() >= 0; }
  Rat width() const { return std::max(re_hi - re_lo, im_hi - im_lo); }
  CInterval as_interval() const { return {{re_lo, re_hi}, {im_lo, im_hi}}; }
  double re_mid() const { return ((re_lo + re_hi) / Rat(2)).to_double(); }
  double im_mid() const { return ((im_lo + im_hi) / Rat(2)).to_double(); }
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

struct IsolationOptions {
  /// Every returned box is at most this wide; zero means "just isolate".
  Rat max_width{0};
  /// Working-precision ceiling in bits; the search gives up beyond it.
  unsigned precision_cap_bits = 1024;
};

/// Disjoint boxes, one per distinct complex root, sorted by real then
/// imaginary part of the lower corner. Multiplicities sum to the degree.
std::vector<RootBox> isolate_complex_roots(const UPoly& p, const IsolationOptions& opts = {});

/// Every rational root with its multiplicity, ascending.
std::vector<std::pair<Rat, unsigned>> rational_roots(const UPoly& p);

}  // namespace pfint

// SPDX-License-Identifier: Apache-2.0
#include "pfint/cz.hpp"

#include <algorithm>

namespace pfint {

namespace {

// Polynomials in y over K = Q[x]/(s) for squarefree s, coefficients low to
// high and reduced mod s. K is a product of fields, so Euclid works as long
// as every leading coefficient is a unit; a zero divisor c splits s into
// gcd(c, s) and its cofactor and the computation restarts on each part.
using KPoly = std::vector<UPoly>;

struct Split {
  UPoly d;
};

class Quotient {
 public:
  explicit Quotient(UPoly s) : s_(std::move(s)) {}

  UPoly reduce(const UPoly& a) const { return divmod(a, s_).remainder; }
  UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }

  UPoly inverse(const UPoly& c) const {
    XGcd e = xgcd(c, s_);
    if (e.g.degree() > 0) throw Split{e.g};
    return reduce(e.s);
  }

  KPoly lift(const BiPoly& f) const {
    KPoly out;
    const Dense<UPoly> d = as_univariate(f, Var::Y);
    for (const auto& c : d.coeffs()) out.push_back(reduce(c));
    trim(out);
    return out;
  }

  // Drops vanishing leading terms and scales to a monic polynomial.
  void make_monic(KPoly& p) const {
    trim(p);
    if (p.empty()) return;
    UPoly inv = inverse(p.back());
    for (auto& c : p) c = mul(c, inv);
  }

  // p mod b for monic b.
  KPoly rem(KPoly p, const KPoly& b) const {
    trim(p);
    while (p.size() >= b.size()) {
      const UPoly t = p.back();
      const std::size_t shift = p.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) p[shift + k] = reduce(p[shift + k] - t * b[k]);
      trim(p);
    }
    return p;
  }

  KPoly gcd(KPoly a, KPoly b) const {
    make_monic(a);
    make_monic(b);
    while (!b.empty()) {
      KPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
      make_monic(b);
    }
    return a;
  }

 private:
  static void trim(KPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  }
  UPoly s_;
};

struct Branch {
  UPoly s;
  KPoly g;  // monic gcd over Q[x]/(s); empty when every polynomial vanishes
};

void gcd_branches(const UPoly& s, const std::vector<BiPoly>& polys, std::vector<Branch>& out) {
  Quotient k(s);
  try {
    KPoly g;
    for (const auto& f : polys) g = k.gcd(g, k.lift(f));
    out.push_back({s, std::move(g)});
  } catch (const Split& split) {
    UPoly d = split.d;
    gcd_branches(d, polys, out);
    gcd_branches(exact_quo(s, d), polys, out);
  }
}

UPoly specialize_x(const BiPoly& f, const Rat& x0) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(f.degree_in(Var::Y), 0)) + 1);
  for (const auto& [m, a] : f.terms()) c[m.y] += a * x0.pow(m.x);
  return UPoly(std::move(c));
}

Witness rational_fibre_witness(const std::vector<BiPoly>& polys, const Rat& x0, const VarietyOptions& opts) {
  UPoly g;
  for (const auto& f : polys) g = gcd(g, specialize_x(f, x0));
  Witness w;
  w.x = x0;
  if (g.is_zero()) {
    w.y = Rat(0);
    w.note = "every polynomial vanishes on the line x = " + x0.str();
    return w;
  }
  auto roots = rational_roots(g);
  if (!roots.empty()) {
    w.y = roots.front().first;
    return w;
  }
  auto boxes = isolate_complex_roots(g, {opts.witness_width, opts.precision_cap_bits});
  w.y_box = boxes.front();
  w.note = "y is a root of " + to_string(g, 'y');
  return w;
}

Witness branch_witness(const Branch& b, const std::vector<BiPoly>& polys, const VarietyOptions& opts) {
  auto xs = rational_roots(b.s);
  if (!xs.empty()) return rational_fibre_witness(polys, xs.front().first, opts);

  Witness w;
  const RootBox xb = isolate_complex_roots(b.s, {opts.witness_width, opts.precision_cap_bits}).front();
  w.x_box = xb;
  if (b.g.size() == 2) {
    // Monic linear in y: y = -g0(x).
    CInterval y = eval(-b.g[0], xb.as_interval());
    w.y_box = RootBox{y.re.lo, y.re.hi, y.im.lo, y.im.hi, 1};
    w.note = "x is a root of " + to_string(b.s, 'x');
  } else {
    w.note = "x is a root of " + to_string(b.s, 'x') + "; the fibre gcd has degree " +
             std::to_string(static_cast<int>(b.g.size()) - 1) + " in y";
  }
  return w;
}

std::string point_text(const Witness& w) {
  if (w.exact_point()) return "(" + w.x->str() + ", " + w.y->str() + ")";
  return "a nonrational point";
}

CheckResult solve(std::vector<BiPoly> fs, const VarietyOptions& opts) {
  fs.erase(std::remove_if(fs.begin(), fs.end(), [](const BiPoly& f) { return f.is_zero(); }), fs.end());
  for (const auto& f : fs)
    if (f.is_constant()) return CheckResult::pass("a nonzero constant is among the polynomials");
  if (fs.empty()) {
    Witness w;
    w.x = Rat(0);
    w.y = Rat(0);
    w.note = "all polynomials are zero";
    return CheckResult::fail("all polynomials vanish identically", w);
  }

  BiPoly common = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) common = gcd(common, fs[i]);
  if (!common.is_constant()) {
    Witness w;
    w.common_factor = common;
    return CheckResult::fail("the polynomials share the curve " + to_string(common) + " = 0", w);
  }

  std::size_t a = fs.size(), b = fs.size();
  for (std::size_t i = 0; i < fs.size() && a == fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (coprime(fs[i], fs[j])) {
        a = i;
        b = j;
        break;
      }
  if (a == fs.size()) {
    // No coprime pair: split off h = gcd(f0, f1).
    BiPoly h = gcd(fs[0], fs[1]);
    std::vector<BiPoly> on_h{h}, off_h{exact_div(fs[0], h), exact_div(fs[1], h)};
    for (std::size_t i = 2; i < fs.size(); ++i) {
      on_h.push_back(fs[i]);
      off_h.push_back(fs[i]);
    }
    CheckResult r = solve(on_h, opts);
    if (!r.holds()) return r;
    return solve(off_h, opts);
  }

  // Project the common zeros onto the x-axis.
  UPoly r;
  if (fs[a].degree_in(Var::Y) < 1)
    r = restrict_to(fs[a], Var::X);
  else if (fs[b].degree_in(Var::Y) < 1)
    r = restrict_to(fs[b], Var::X);
  else
    r = restrict_to(resultant(fs[a], fs[b], Var::Y), Var::X);
  if (r.degree() < 1) return CheckResult::pass("elimination of y leaves a nonzero constant");

  std::vector<Branch> branches;
  gcd_branches(squarefree_part(r), fs, branches);
  for (const auto& br : branches) {
    if (!br.g.empty() && br.g.size() == 1) continue;  // unit gcd: no common y
    Witness w;
    try {
      w = branch_witness(br, fs, opts);
    } catch (const PrecisionExhausted&) {
      w.note = "common zero exists over the roots of " + to_string(br.s, 'x') +
               "; no root box within the precision cap";
    }
    std::string where = point_text(w);
    return CheckResult::fail("common zero at " + where, w);
  }
  return CheckResult::pass("no fibre over the eliminant " + to_string(r, 'x') + " carries a common root");
}

CheckResult relabel(CheckResult r, const std::string& prefix) {
  if (!r.holds()) r.reason = prefix + ": " + r.reason;
  return r;
}

// Folds sub-results: the first failure (or else the first inconclusive one)
// decides the verdict and keeps its witness.
CheckResult aggregate(const std::vector<CheckResult>& parts, const std::string& holds_text) {
  for (Status wanted : {Status::Fails, Status::Inconclusive})
    for (const auto& r : parts)
      if (r.status == wanted) return r;
  return CheckResult::pass(holds_text);
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

CheckResult variety_empty(const std::vector<BiPoly>& polys, const VarietyOptions& opts) {
  if (polys.size() < 2) throw Error("variety test needs at least two polynomials");
  return solve(polys, opts);
}

CheckResult check_nonsingular(const BiPoly& u) {
  if (u.is_constant()) throw Error("nonsingularity of a constant polynomial");
  CheckResult r = variety_empty({u, partial(u, Var::X), partial(u, Var::Y)});
  if (r.holds()) r.reason = "no point where the curve and both partials vanish";
  else r.reason = "singular point: " + r.reason;
  return r;
}

CheckResult check_leading_squarefree(const BiPoly& u) {
  if (u.is_constant()) throw Error("leading form of a constant polynomial");
  BiPoly lf = leading_form(u);
  if (is_squarefree(lf)) return CheckResult::pass("leading form " + to_string(lf) + " is squarefree");
  BiPoly g = gcd(gcd(lf, partial(lf, Var::X)), partial(lf, Var::Y));
  Witness w;
  w.common_factor = g;
  return CheckResult::fail("leading form " + to_string(lf) + " has the repeated factor " + to_string(g), w);
}

CheckResult check_pair_transversal(const BiPoly& u, const BiPoly& v) {
  if (u.is_constant() || v.is_constant()) throw Error("transversality of a constant polynomial");
  if (!coprime(u, v)) throw Error("transversality needs coprime curves; they share " + to_string(gcd(u, v)));
  BiPoly jac = partial(u, Var::X) * partial(v, Var::Y) - partial(u, Var::Y) * partial(v, Var::X);
  CheckResult r = variety_empty({u, v, jac});
  if (r.holds()) r.reason = "no common point with parallel gradients";
  else r.reason = "tangency: " + r.reason;
  return r;
}

CheckResult check_no_triple_points(const std::vector<BiPoly>& curves) {
  const std::size_t n = curves.size();
  if (n < 3) return CheckResult::pass("fewer than three curves");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        CheckResult r = variety_empty({curves[i], curves[j], curves[k]});
        if (!r.holds()) return relabel(r, "curves " + idx(i) + ", " + idx(j) + ", " + idx(k) + " meet");
      }
  return CheckResult::pass("no three curves share a point");
}

CheckResult check_pairwise_leading_coprime(const std::vector<BiPoly>& curves) {
  if (curves.size() < 2) throw Error("leading-form coprimality needs at least two curves");
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      BiPoly g = gcd(leading_form(curves[i]), leading_form(curves[j]));
      if (!g.is_constant()) {
        Witness w;
        w.common_factor = g;
        return CheckResult::fail(
            "leading forms of curves " + idx(i) + " and " + idx(j) + " share the factor " + to_string(g), w);
      }
    }
  return CheckResult::pass("leading forms are pairwise coprime");
}

CZReport cz_report(const FactoredIntegral& f) {
  std::vector<BiPoly> curves;
  for (const auto& fac : f) curves.push_back(fac.u);
  const std::size_t n = curves.size();

  CZReport rep;
  std::vector<CheckResult> ci, cii, ciii;
  for (std::size_t i = 0; i < n; ++i) {
    ci.push_back(relabel(check_nonsingular(curves[i]), "curve " + idx(i)));
    cii.push_back(relabel(check_leading_squarefree(curves[i]), "curve " + idx(i)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      ciii.push_back(relabel(check_pair_transversal(curves[i], curves[j]), "curves " + idx(i) + ", " + idx(j)));
  ciii.push_back(check_no_triple_points(curves));

  rep.condition_i = aggregate(ci, "every curve is nonsingular");
  rep.condition_ii = aggregate(cii, "every leading form is squarefree");
  rep.condition_iii = n < 2 ? CheckResult::pass("a single curve has no crossings")
                            : aggregate(ciii, "crossings are transversal with no triple points");
  rep.condition_iv = n < 2 ? CheckResult::pass("a single curve") : check_pairwise_leading_coprime(curves);

  const Status s = combine({rep.condition_i.status, rep.condition_ii.status, rep.condition_iii.status,
                            rep.condition_iv.status});
  std::string failed;
  const CheckResult* parts[] = {&rep.condition_i, &rep.condition_ii, &rep.condition_iii, &rep.condition_iv};
  const char* names[] = {"i", "ii", "iii", "iv"};
  for (int c = 0; c < 4; ++c)
    if (parts[c]->status == s && s != Status::Holds) failed += (failed.empty() ? "" : ", ") + std::string(names[c]);
  if (s == Status::Holds) rep.overall = CheckResult::pass("all four conditions hold");
  else if (s == Status::Fails) rep.overall = CheckResult::fail("conditions failing: " + failed);
  else rep.overall = CheckResult::inconclusive("conditions undecided: " + failed);
  return rep;
}

}  // namespace pfint

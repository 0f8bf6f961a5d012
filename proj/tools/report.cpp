// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <fstream>
#include <sstream>

#include "pfint/cz.hpp"
#include "pfint/linearize.hpp"
#include "pfint/numcheck.hpp"
#include "pfint/parse.hpp"
#include "pfint/remarkable.hpp"

namespace pfint::cli {

namespace {

constexpr const char* kSchema = "1";
constexpr const char* kNotApplicable = "not_applicable";

BiPoly parse_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a polynomial string");
  try {
    return parse_bipoly(j.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json box_json(const RootBox& b) {
  return Json{{"re", {b.re_lo.str(), b.re_hi.str()}}, {"im", {b.im_lo.str(), b.im_hi.str()}},
              {"multiplicity", b.multiplicity}};
}

Json witness_json(const Witness& w) {
  Json j = Json::object();
  if (w.x) j["x"] = w.x->str();
  if (w.y) j["y"] = w.y->str();
  if (w.x_box) j["x_box"] = box_json(*w.x_box);
  if (w.y_box) j["y_box"] = box_json(*w.y_box);
  if (w.common_factor) j["common_factor"] = to_string(*w.common_factor);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json check_json(const std::string& name, const CheckResult& r) {
  Json j{{"name", name}, {"status", std::string(to_string(r.status))}, {"reason", r.reason}};
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

Json not_applicable(const std::string& name, const std::string& why) {
  return Json{{"name", name}, {"status", kNotApplicable}, {"reason", why}};
}

Json bool_check(const std::string& name, bool ok, const std::string& holds, const std::string& fails) {
  return check_json(name, ok ? CheckResult::pass(holds) : CheckResult::fail(fails));
}

Json field_json(const VectorField& x) {
  return Json{{"P", to_string(x.P())}, {"Q", to_string(x.Q())}, {"degree", x.degree()}};
}

// Worst verdict over a list of checks.
std::string worst(const Json& checks) {
  bool inconclusive = false;
  for (const auto& c : checks) {
    const std::string s = c.at("status").get<std::string>();
    if (s == "fails") return "fails";
    if (s == "inconclusive") inconclusive = true;
  }
  return inconclusive ? "inconclusive" : "holds";
}

Json header(const std::string& command, const Problem& p) {
  return Json{{"schema_version", kSchema}, {"command", command}, {"problem", p.name}};
}

Json finish(Json report, Json checks) {
  report["status"] = worst(checks);
  report["checks"] = std::move(checks);
  return report;
}

// Field in which the integrating factor and Hamiltonian structure are read.
VectorField base_field(const Problem& p) { return p.field_given ? p.field : construct_field(p.integral); }

}  // namespace

Problem parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("problem must be a JSON object");
  std::string name = j.value("name", std::string("unnamed"));
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    throw InputError("problem needs a nonempty \"factors\" array");

  std::vector<Factor> factors;
  std::size_t i = 0;
  for (const auto& f : j["factors"]) {
    ++i;
    const std::string where = "factor " + std::to_string(i);
    if (!f.is_object() || !f.contains("poly")) throw InputError(where + ": expected {\"poly\", \"exponent\"}");
    Factor fac;
    fac.u = parse_field(f["poly"], where + " poly");
    const Json e = f.value("exponent", Json(1));
    if (!e.is_number_integer() || e.get<long long>() < 1)
      throw InputError(where + ": exponent must be a positive integer");
    fac.k = static_cast<unsigned>(e.get<long long>());
    factors.push_back(std::move(fac));
  }

  try {
    FactoredIntegral integral(std::move(factors));
    if (j.contains("field")) {
      const Json& fj = j["field"];
      if (!fj.is_object() || !fj.contains("p") || !fj.contains("q"))
        throw InputError("field must be an object with \"p\" and \"q\"");
      VectorField x(parse_field(fj["p"], "field p"), parse_field(fj["q"], "field q"));
      return {name, std::move(integral), std::move(x), true};
    }
    VectorField x = reduce_field(construct_field(integral)).field;
    return {name, std::move(integral), std::move(x), false};
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json cmd_construct(const Problem& p) {
  Json r = header("construct", p);
  Json factors = Json::array();
  for (const auto& [u, k] : p.integral) factors.push_back({{"poly", to_string(u)}, {"exponent", k}});
  r["integral"] = {{"factors", factors}, {"H", to_string(expand(p.integral))}};
  const VectorField xc = construct_field(p.integral);
  const ReducedField red = reduce_field(xc);
  r["constructed"] = field_json(xc);
  r["reduced"] = field_json(red.field);
  r["reduced"]["multiplier"] = to_string(red.multiplier);
  r["field"] = field_json(p.field);
  r["field"]["source"] = p.field_given ? "given" : "constructed";
  r["m"] = p.field.degree();
  r["sum_of_degrees_minus_one"] = p.integral.sum_of_degrees() - 1;

  Json checks = Json::array();
  if (p.integral.size() >= 2)
    checks.push_back(check_json("minimal_degree", theorem_b_degree_check(p.integral)));
  else
    checks.push_back(bool_check("coprime", is_coprime(xc), "constructed field is coprime",
                                "constructed field components share " + to_string(red.multiplier)));
  checks.push_back(bool_check("first_integral", is_first_integral(p.field, expand(p.integral)),
                              "H is a first integral of the field", "H is not conserved by the field"));
  return finish(std::move(r), std::move(checks));
}

Json cmd_analyze(const Problem& p) {
  Json r = header("analyze", p);
  const BiPoly h = expand(p.integral);
  const VectorField xb = base_field(p);
  const RemarkableAnalysis a = remarkable_analysis(p.integral);
  const int m = p.field.degree();

  r["H"] = to_string(h);
  r["R"] = to_string(a.R);
  r["V"] = to_string(a.V);
  r["m"] = m;
  r["deg_R"] = a.d;
  Json cv = Json::array();
  for (const auto& c : a.critical_values) cv.push_back(c.str());
  r["critical_values"] = {{"rational", cv}, {"count", a.s}};
  if (a.residual) r["critical_values"]["residual"] = to_string(*a.residual, 'c');

  Json checks = Json::array();
  const bool rf = verify_integrating_factor(xb, a.R);
  checks.push_back(bool_check("integrating_factor", rf, "d(RP)/dx + d(RQ)/dy = 0",
                              "R is not an integrating factor of the field"));
  if (rf) {
    BiPoly recovered = integral_from_factor(xb, a.R);
    const BiPoly shifted = h - BiPoly(evaluate(h, Rat(0), Rat(0)));
    r["integral_from_R"] = to_string(recovered);
    const bool proportional = !recovered.is_zero() && recovered.scaled(shifted.leading_coeff()) ==
                                                          shifted.scaled(recovered.leading_coeff());
    checks.push_back(bool_check("integral_from_R", proportional,
                                "quadrature of R reproduces H up to a constant factor",
                                "quadrature of R differs from H"));
  }

  if (p.integral.has_repeated_factor()) {
    auto guarded = [&](const std::string& name, auto&& fn) {
      try {
        checks.push_back(check_json(name, fn()));
      } catch (const Error& e) {
        checks.push_back(not_applicable(name, e.what()));
      }
    };
    guarded("exactly_one_critical_value", [&] { return theorem_a_check(p.integral, p.field); });
    guarded("degree_formula", [&] { return degree_formula_check(a, m); });
    guarded("degree_relation", [&] { return degree_relation_check(p.integral, p.field); });
  } else {
    Json ham = Json::object();
    auto hp = is_hamiltonian(xb);
    checks.push_back(bool_check("hamiltonian", hp.has_value() && is_first_integral(xb, *hp),
                                "the field is Hamiltonian", "the field has nonzero divergence"));
    if (hp) ham["H"] = to_string(*hp);
    Json cof = Json::array();
    std::size_t i = 0;
    for (const auto& [u, k] : p.integral) {
      ++i;
      auto kf = cofactor(u, xb);
      cof.push_back(kf ? Json(to_string(*kf)) : Json(nullptr));
      checks.push_back(bool_check("cofactor_" + std::to_string(i), kf.has_value(), "curve " + std::to_string(i) + " is invariant",
                                  "curve " + std::to_string(i) + " is not invariant"));
    }
    ham["cofactors"] = cof;
    r["hamiltonian"] = ham;
  }
  return finish(std::move(r), std::move(checks));
}

Json cmd_cz(const Problem& p) {
  Json r = header("cz", p);
  const CZReport c = cz_report(p.integral);
  Json checks = Json::array();
  checks.push_back(check_json("condition_i", c.condition_i));
  checks.push_back(check_json("condition_ii", c.condition_ii));
  checks.push_back(check_json("condition_iii", c.condition_iii));
  checks.push_back(check_json("condition_iv", c.condition_iv));
  r["overall"] = check_json("overall", c.overall);
  return finish(std::move(r), std::move(checks));
}

Json cmd_linearize(const Problem& p, std::optional<std::size_t> pivot) {
  Json r = header("linearize", p);
  const std::size_t n = p.integral.size();
  if (n < 2) throw InputError("linearize needs at least two factors");
  const std::size_t piv = pivot.value_or(n);
  if (piv < 1 || piv > n) throw InputError("pivot must lie in 1.." + std::to_string(n));
  r["pivot"] = piv;

  Json checks = Json::array();
  try {
    const LinearizationCertificate c = linearize(p.integral, p.field, piv);
    r["certificate"] = {{"u", to_string(c.u_expr)}, {"v", to_string(c.v_expr)}, {"K1", to_string(c.K1)},
                        {"K2", to_string(c.K2)},    {"K3", to_string(c.K3)},    {"K4", to_string(c.K4)},
                        {"D", to_string(c.D)},      {"G", to_string(c.G)},      {"time", c.time_rescaling()}};
    r["hypothesis"] = c.hamiltonian ? "violated: the field is Hamiltonian" : "non-Hamiltonian field";
    checks.push_back(bool_check("D_determinant", c.determinant_identity, "D = K1 K4 - K2 K3", "D mismatch"));
    checks.push_back(bool_check("G_field", c.field_identity, "G P and G Q match the numerators", "G mismatch"));
    checks.push_back(bool_check("u_equation", c.u_identity, "G X(u) = D u", "G X(u) differs from D u"));
    checks.push_back(bool_check("v_equation", c.v_identity, "G X(v) = -D v", "G X(v) differs from -D v"));
  } catch (const NotDivisible& e) {
    Witness w;
    w.note = "remainder " + to_string(e.remainder());
    checks.push_back(check_json("certificate", CheckResult::fail(e.what(), w)));
  } catch (const Error& e) {
    checks.push_back(check_json("certificate", CheckResult::fail(e.what())));
  }
  return finish(std::move(r), std::move(checks));
}

Json cmd_simulate(const Problem& p, const SimulateOptions& opts) {
  Json r = header("simulate", p);
  const BiPoly h = expand(p.integral);
  Orbit o;
  try {
    o = integrate_orbit(p.field, opts.x0, opts.y0, opts.step, opts.steps);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  const double drift = conservation_drift(h, o);
  r["method"] = o.method;
  r["start"] = {opts.x0, opts.y0};
  r["step"] = opts.step;
  r["steps_requested"] = opts.steps;
  r["steps_taken"] = o.points.size() - 1;
  r["end"] = {o.points.back().first, o.points.back().second};
  r["drift"] = drift;
  r["tolerance"] = opts.drift_tolerance;
  if (!opts.csv_path.empty()) {
    std::ofstream out(opts.csv_path);
    if (!out) throw InputError("cannot write " + opts.csv_path);
    write_csv(out, h, o);
    r["csv"] = opts.csv_path;
  }

  Json checks = Json::array();
  if (o.points.size() - 1 < opts.steps)
    checks.push_back(check_json("conservation", CheckResult::inconclusive("orbit left the bounded region after " +
                                                                         std::to_string(o.points.size() - 1) +
                                                                         " steps")));
  else
    checks.push_back(check_json("conservation", drift < opts.drift_tolerance
                                                    ? CheckResult::pass("drift below tolerance")
                                                    : CheckResult::fail("drift exceeds tolerance")));
  return finish(std::move(r), std::move(checks));
}

Json cmd_all(const Problem& p, std::optional<std::size_t> pivot, const SimulateOptions& opts) {
  Json r = header("all", p);
  Json sections = Json::object();
  sections["construct"] = cmd_construct(p);
  sections["analyze"] = cmd_analyze(p);
  sections["cz"] = cmd_cz(p);
  if (p.integral.size() >= 2) sections["linearize"] = cmd_linearize(p, pivot);
  sections["simulate"] = cmd_simulate(p, opts);
  Json statuses = Json::array();
  for (const auto& [name, s] : sections.items()) statuses.push_back({{"status", s["status"]}});
  r["status"] = worst(statuses);
  r["sections"] = std::move(sections);
  return r;
}

std::string report_status(const Json& report) { return report.at("status").get<std::string>(); }

int exit_code(const std::string& status, bool strict) {
  if (status == "fails") return 1;
  if (status == "inconclusive" && strict) return 3;
  return 0;
}

namespace {

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      render(os, v, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& e : v) {
        if (e.contains("name")) {
          os << pad << "  - " << e["name"].get<std::string>() << ": " << e.value("status", "") << '\n';
          if (e.contains("reason")) os << pad << "      " << e["reason"].get<std::string>() << '\n';
          if (e.contains("witness")) render(os, Json{{"witness", e["witness"]}}, indent + 3);
        } else {
          os << pad << "  -\n";
          render(os, e, indent + 2);
        }
      }
    } else {
      os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const Json& report, const std::string& stamp) {
  std::ostringstream os;
  render(os, report, 0);
  if (!stamp.empty()) os << "generated: " << stamp << '\n';
  return os.str();
}

}  // namespace pfint::cli

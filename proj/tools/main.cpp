// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"

namespace fs = std::filesystem;
using pfint::cli::Json;

namespace {

struct Options {
  std::string command;
  std::string path;
  std::string format = "text";
  bool strict = false;
  std::optional<std::size_t> pivot;
  pfint::cli::SimulateOptions sim;
  unsigned jobs = 1;
};

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Outcome {
  Json report;
  int code = 0;
  std::string error;
};

Outcome run_one(const Options& o, const std::string& path) {
  Outcome out;
  try {
    const pfint::cli::Problem p = pfint::cli::load_problem(path);
    if (o.command == "construct") out.report = pfint::cli::cmd_construct(p);
    else if (o.command == "analyze") out.report = pfint::cli::cmd_analyze(p);
    else if (o.command == "cz") out.report = pfint::cli::cmd_cz(p);
    else if (o.command == "linearize") out.report = pfint::cli::cmd_linearize(p, o.pivot);
    else if (o.command == "simulate") out.report = pfint::cli::cmd_simulate(p, o.sim);
    else out.report = pfint::cli::cmd_all(p, o.pivot, o.sim);
    out.code = pfint::cli::exit_code(pfint::cli::report_status(out.report), o.strict);
  } catch (const pfint::cli::InputError& e) {
    out.code = 2;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.code = 2;
    out.error = path + ": " + e.what();
  }
  return out;
}

std::vector<std::string> inputs(const std::string& path) {
  if (!fs::is_directory(path)) return {path};
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(path))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

int dispatch(const Options& o) {
  const auto files = inputs(o.path);
  if (files.empty()) {
    std::cerr << "error: no problem files in " << o.path << '\n';
    return 2;
  }
  std::vector<Outcome> results(files.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(files.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < files.size(); i += workers) results[i] = run_one(o, files[i]);
      });
  }

  int code = 0;
  Json batch = Json::array();
  const std::string stamp = o.format == "text" ? timestamp() : "";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& r = results[i];
    if (!r.error.empty()) std::cerr << "error: " << r.error << '\n';
    code = std::max(code, r.code);
    if (r.report.is_null()) continue;
    if (o.format == "json") batch.push_back(r.report);
    else std::cout << pfint::cli::render_text(r.report, stamp) << (i + 1 < results.size() ? "\n" : "");
  }
  if (o.format == "json") {
    if (files.size() == 1 && batch.size() == 1) std::cout << batch.front().dump(2) << '\n';
    else if (!batch.empty()) std::cout << Json{{"schema_version", "1"}, {"results", batch}}.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pfint: planar polynomial vector fields with polynomial first integrals"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", o.path, "Problem file (JSON) or a directory of them")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--strict", o.strict, "Exit with code 3 when a verdict is inconclusive");
    sub->add_option("--jobs", o.jobs, "Problems processed in parallel for a directory")->check(CLI::PositiveNumber);
  };
  auto add_pivot = [&](CLI::App* sub) {
    sub->add_option("--pivot", o.pivot, "1-based factor used for v (default: last)");
  };
  auto add_sim = [&](CLI::App* sub) {
    sub->add_option("--x0", o.sim.x0, "Start x");
    sub->add_option("--y0", o.sim.y0, "Start y");
    sub->add_option("--step", o.sim.step, "RK4 step");
    sub->add_option("--steps", o.sim.steps, "Number of steps");
    sub->add_option("--drift-tol", o.sim.drift_tolerance, "Largest acceptable relative drift");
    sub->add_option("--csv", o.sim.csv_path, "Write the orbit as CSV");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"construct", "Build the field from the factored integral and check its degree"},
      {"analyze", "Integrating factor, critical remarkable values and degree identities"},
      {"cz", "Christopher-Zoladek genericity conditions on the factor curves"},
      {"linearize", "Certificate for the polynomial change of variables to the saddle"},
      {"simulate", "RK4 orbit and conservation drift of H"},
      {"all", "Run every command on the problem"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    const std::string n = name;
    if (n == "linearize" || n == "all") add_pivot(sub);
    if (n == "simulate" || n == "all") add_sim(sub);
    sub->callback([&o, n] { o.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return dispatch(o);
}

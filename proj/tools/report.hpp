// SPDX-License-Identifier: Apache-2.0
//
// Problem files and the structured reports behind the pfint commands.
#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pfint/field.hpp"

namespace pfint::cli {

using Json = nlohmann::ordered_json;

/// Malformed or invalid problem input; maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Problem {
  std::string name;
  FactoredIntegral integral;
  VectorField field;
  /// True when the field was given in the file rather than synthesized.
  bool field_given = false;
};

Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);

struct SimulateOptions {
  double x0 = 0.5;
  double y0 = 0.5;
  double step = 1e-3;
  unsigned steps = 1000;
  double drift_tolerance = 1e-6;
  std::string csv_path;  // empty: no CSV
};

Json cmd_construct(const Problem& p);
Json cmd_analyze(const Problem& p);
Json cmd_cz(const Problem& p);
Json cmd_linearize(const Problem& p, std::optional<std::size_t> pivot);
Json cmd_simulate(const Problem& p, const SimulateOptions& opts);
Json cmd_all(const Problem& p, std::optional<std::size_t> pivot, const SimulateOptions& opts);

/// "holds", "fails" or "inconclusive"; the worst verdict in the report.
std::string report_status(const Json& report);

/// 0 holds, 1 fails, 3 inconclusive under strict, else 0.
int exit_code(const std::string& status, bool strict);

/// Human-readable rendering; `stamp` is appended as a trailing line.
std::string render_text(const Json& report, const std::string& stamp);

}  // namespace pfint::cli

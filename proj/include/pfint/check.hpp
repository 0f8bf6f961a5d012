// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pfint/bipoly.hpp"
#include "pfint/roots.hpp"

namespace pfint {

enum class Status { Holds, Fails, Inconclusive };

std::string_view to_string(Status s);

/// Evidence attached to a failed check. A point is exact when both
/// coordinates are rational; otherwise a coordinate is given by a certified
/// root box.
struct Witness {
  std::optional<Rat> x, y;
  std::optional<RootBox> x_box, y_box;
  std::optional<BiPoly> common_factor;
  std::string note;

  bool exact_point() const { return x.has_value() && y.has_value(); }
};

struct CheckResult {
  Status status = Status::Holds;
  std::optional<Witness> witness;
  std::string reason;

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }

  static CheckResult pass(std::string reason) { return {Status::Holds, std::nullopt, std::move(reason)}; }
  static CheckResult fail(std::string reason, std::optional<Witness> w = std::nullopt) {
    return {Status::Fails, std::move(w), std::move(reason)};
  }
  static CheckResult inconclusive(std::string reason) {
    return {Status::Inconclusive, std::nullopt, std::move(reason)};
  }
};

/// Holds iff all hold; Fails if any fails; otherwise Inconclusive.
Status combine(std::initializer_list<Status> parts);

}  // namespace pfint

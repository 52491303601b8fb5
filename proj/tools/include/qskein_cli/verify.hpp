#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qskein/laurent_poly.hpp"

namespace qskein::cli {

/// Outcome of one property grid.
struct PropertyResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  /// First counterexample when the property fails; extra findings otherwise.
  std::string detail;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a suite ("all", "bubble", "theta", "identities", "tail",
/// "stabilization"). `max` bounds the grid; each suite has its own default.
/// Throws InvalidParams for an unknown suite.
std::vector<PropertyResult> run_suite(std::string_view suite, std::optional<int> max = std::nullopt);

/// The 121 printed tail coefficients compiled into the binary, q^0 first.
const std::vector<Integer>& golden_tail();

}  // namespace qskein::cli

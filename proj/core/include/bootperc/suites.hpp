#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bootperc/solver.hpp"

namespace bootperc {

struct ClaimResult {
  std::string id;
  std::string statement;
  /// Reported for information only; never fails the suite.
  bool observation = false;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  nlohmann::json witnesses = nlohmann::json::array();

  bool passed() const { return observation || (failures == 0 && inconclusive == 0); }
};

struct SuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;

  bool passed() const;
};

struct SuiteOptions {
  /// Size limit; each suite has its own default.
  std::optional<int> max;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

/// grid-theorem, characterization, upper-bounds, perimeter, families.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

void to_json(nlohmann::json& j, const ClaimResult& claim);
void to_json(nlohmann::json& j, const SuiteReport& report);

}  // namespace bootperc

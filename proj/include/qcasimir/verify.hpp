#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcasimir/root_system.hpp"

namespace qcasimir {

struct VerifyCase {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  std::uint64_t seed = 0;

  bool passed() const;
  std::size_t pass_count() const;
};

struct VerifyConfig {
  std::string suite = "all";
  /// Systems to check; empty means every system of the default scope
  /// admitted by the suite.
  std::vector<std::pair<LieType, int>> systems;
  int points = 20;
  int weights = 10;
  int degenerate_samples = 50;
  int max_rank = 5;
  std::uint64_t seed = 1;
};

/// B2, B3, B4, C3, C4, D4, D5.
const std::vector<std::pair<LieType, int>>& default_scope();

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" concatenates every suite). Failed identities are
/// reported as failed cases; InvalidArgument is thrown for an unknown suite or
/// a system the suite does not apply to.
VerifyReport run_suite(const VerifyConfig& cfg);

}  // namespace qcasimir

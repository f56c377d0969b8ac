#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvoronoi/json_io.hpp"

namespace tvoronoi::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct ClaimResult {
  std::string id;
  std::string title;
  bool passed = false;
  Json details;
};

struct FixtureCheck {
  std::string instance;
  bool passed = false;
  Json details;
};

/// The fixed list of reproducible claims, in report order.
const std::vector<std::string>& claim_ids();

/// Instances a claim is about (empty for randomized or sweep claims).
std::vector<std::string> claim_instances(const std::string& id);

ClaimResult run_claim(const std::string& id, std::uint64_t seed);

/// Recomputes every expected verdict of a built-in instance.
FixtureCheck check_fixture(const std::string& instance);

}  // namespace tvoronoi::cli

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvoronoi/json_io.hpp"

namespace tvoronoi::cli {

enum ExitCode : int {
  kOk = 0,
  kClaimFailure = 1,
  kParseError = 2,
  kValidationError = 3,
  kBadProfile = 4,
  kBadSpec = 5,
  kBudgetExceeded = 6,
};

/// Error carrying the process exit code it maps to.
class CommandError : public std::runtime_error {
 public:
  CommandError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct CommandResult {
  Json report;
  ExitCode code = kOk;
};

/// Graph input as read from disk: the path is echoed, the bytes digested.
struct GraphInput {
  std::string path;
  std::string bytes;
};

GraphInput read_input(const std::string& path);
std::string sha256_hex(const std::string& bytes);

/// "P1,P2" with both positions in [1, n]; throws CommandError(kBadProfile).
Profile parse_profile(const std::string& text, std::size_t n);
GameKind parse_game(const std::string& text);
/// "a..b" or "a"; throws CommandError(kBadSpec).
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

CommandResult cmd_analyze(const GraphInput& in);
CommandResult cmd_distances(const GraphInput& in, std::optional<Vertex> source);
CommandResult cmd_payoff(const GraphInput& in, GameKind kind, const std::string& profile);
CommandResult cmd_best_response(const GraphInput& in, GameKind kind,
                                const std::optional<std::string>& profile);
CommandResult cmd_nash(const GraphInput& in, GameKind kind,
                       const std::optional<std::string>& profile);
CommandResult cmd_dynamics(const GraphInput& in, GameKind kind, const std::string& start,
                           std::optional<std::size_t> max_steps);
/// `selector` is "all", an instance id or a claim id.
CommandResult cmd_reproduce(const std::string& selector, std::uint64_t seed);

struct SweepOptions {
  std::string base_class;
  std::string n = "3..3";
  std::string tau = "1..3";
  bool growing = false;
  bool shrinking = false;
  std::optional<std::size_t> changes;
  std::vector<std::string> games;  // empty means both
  std::string out_dir;
  unsigned threads = 0;
};

/// Writes records.jsonl and summary.json into out_dir.
CommandResult cmd_sweep(const SweepOptions& options);

/// Writes <id>.json per built-in instance when out_dir is set.
CommandResult cmd_fixtures(const std::optional<std::string>& out_dir);

}  // namespace tvoronoi::cli

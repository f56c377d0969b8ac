#include <CLI11.hpp>

#include <iostream>

#include "claims.hpp"
#include "commands.hpp"
#include "tvoronoi/explorer.hpp"

using namespace tvoronoi;
using namespace tvoronoi::cli;

int main(int argc, char** argv) {
  CLI::App app{"Two-player Voronoi games on temporal graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tvoronoi 0.1.0");

  std::string input;
  std::string game;
  std::optional<std::string> profile;
  std::optional<Vertex> source;
  std::optional<std::size_t> max_steps;
  std::string selector = "all";
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> out_dir;
  SweepOptions sweep;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Temporal graph JSON file")->required();
  };
  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("--game", game, "vor or rvor")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Classify a temporal graph and list distances");
  add_input(analyze);

  auto* distances = app.add_subcommand("distances", "All-pairs temporal distances");
  add_input(distances);
  distances->add_option("--source", source, "Only the foremost arrivals from this vertex");

  auto* payoff = app.add_subcommand("payoff", "Won vertex sets for a profile");
  add_input(payoff);
  add_game(payoff);
  payoff->add_option("--profile", profile, "P1,P2")->required();

  auto* best = app.add_subcommand("best-response", "Best responses or the best-response graph");
  add_input(best);
  add_game(best);
  best->add_option("--profile", profile, "P1,P2");

  auto* nash = app.add_subcommand("nash", "Check a profile or list every equilibrium");
  add_input(nash);
  add_game(nash);
  nash->add_option("--profile", profile, "P1,P2");

  auto* dynamics = app.add_subcommand("dynamics", "Alternating best-response dynamics");
  add_input(dynamics);
  add_game(dynamics);
  std::string start = "1,1";
  dynamics->add_option("--profile", start, "Start profile P1,P2")->capture_default_str();
  dynamics->add_option("--max-steps", max_steps, "Turn limit (default 4n^2 + 4)");

  auto* reproduce = app.add_subcommand("reproduce", "Re-check the built-in claims");
  reproduce->add_option("selector", selector, "all, an instance id or a claim id")
      ->capture_default_str();
  reproduce->add_option("--seed", seed, "Seed for the randomized claims")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Decide equilibria over a family of graphs");
  sweep_cmd->add_option("--class", sweep.base_class, "Base graph class")->required();
  sweep_cmd->add_option("--n", sweep.n, "Vertex range a..b")->capture_default_str();
  sweep_cmd->add_option("--tau", sweep.tau, "Lifetime range a..b")->capture_default_str();
  sweep_cmd->add_flag("--growing", sweep.growing, "Only monotonically growing graphs");
  sweep_cmd->add_flag("--shrinking", sweep.shrinking, "Only monotonically shrinking graphs");
  sweep_cmd->add_option("--changes", sweep.changes, "Bound on the total number of edge changes");
  sweep_cmd->add_option("--game", sweep.games, "vor and/or rvor (default both)");
  sweep_cmd->add_option("--out", sweep.out_dir, "Output directory")->required();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");

  auto* fixtures = app.add_subcommand("fixtures", "Dump the built-in instances");
  fixtures->add_option("--out", out_dir, "Write <id>.json files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    CommandResult result;
    if (*analyze) {
      result = cmd_analyze(read_input(input));
    } else if (*distances) {
      result = cmd_distances(read_input(input), source);
    } else if (*payoff) {
      result = cmd_payoff(read_input(input), parse_game(game), *profile);
    } else if (*best) {
      result = cmd_best_response(read_input(input), parse_game(game), profile);
    } else if (*nash) {
      result = cmd_nash(read_input(input), parse_game(game), profile);
    } else if (*dynamics) {
      result = cmd_dynamics(read_input(input), parse_game(game), start, max_steps);
    } else if (*reproduce) {
      result = cmd_reproduce(selector, seed);
    } else if (*sweep_cmd) {
      result = cmd_sweep(sweep);
    } else if (*fixtures) {
      result = cmd_fixtures(out_dir);
    }
    std::cout << result.report.dump(2) << '\n';
    return result.code;
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  }
}

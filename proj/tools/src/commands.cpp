#include "commands.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "claims.hpp"
#include "tvoronoi/constructions.hpp"
#include "tvoronoi/explorer.hpp"

namespace tvoronoi::cli {
namespace {

namespace fs = std::filesystem;

Json header(const std::string& command, const GraphInput& in) {
  Json out;
  out["command"] = command;
  out["input"] = in.path;
  out["input_digest"] = "sha256:" + sha256_hex(in.bytes);
  return out;
}

// Parses and validates; attaches the graph summary and class report.
TemporalGraph load(const GraphInput& in, Json& report) {
  TemporalGraph g;
  try {
    g = parse_graph(in.bytes);
  } catch (const GraphParseError& e) {
    throw CommandError(kParseError, std::string("parse error: ") + e.what());
  }
  const auto violations = validate(g);
  if (!violations.empty()) {
    std::string what = "invalid temporal graph:";
    for (const auto& v : violations) what += "\n  " + v.message;
    throw CommandError(kValidationError, what);
  }
  report["graph"] = {{"n", g.vertex_count()}, {"lifetime", g.lifetime()}};
  return g;
}

std::size_t parse_number(const std::string& text, ExitCode code, const std::string& what) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw CommandError(code, "invalid " + what + ": '" + text + "'");
  }
  return value;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError(kParseError, "cannot write " + path.string());
  out << content;
}

}  // namespace

GraphInput read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return {path, buffer.str()};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

Profile parse_profile(const std::string& text, std::size_t n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw CommandError(kBadProfile, "profile must look like P1,P2: '" + text + "'");
  }
  const auto p1 = parse_number(text.substr(0, comma), kBadProfile, "profile");
  const auto p2 = parse_number(text.substr(comma + 1), kBadProfile, "profile");
  if (p1 < 1 || p1 > n || p2 < 1 || p2 > n) {
    throw CommandError(kBadProfile, "profile positions must lie in [1, " + std::to_string(n) + "]");
  }
  return {static_cast<Vertex>(p1), static_cast<Vertex>(p2)};
}

GameKind parse_game(const std::string& text) {
  const auto kind = parse_game_kind(text);
  if (!kind) throw CommandError(kParseError, "unknown game '" + text + "' (vor or rvor)");
  return *kind;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_number(text, kBadSpec, "range");
    return {v, v};
  }
  return {parse_number(text.substr(0, dots), kBadSpec, "range"),
          parse_number(text.substr(dots + 2), kBadSpec, "range")};
}

CommandResult cmd_analyze(const GraphInput& in) {
  Json report = header("analyze", in);
  const auto g = load(in, report);
  const auto d = all_pairs(g);
  report["classes"] = to_json(classify(g, d));
  report["edge_changes"] = edge_change_count(g);
  report["distances"] = to_json(d);
  return {std::move(report)};
}

CommandResult cmd_distances(const GraphInput& in, std::optional<Vertex> source) {
  Json report = header("distances", in);
  const auto g = load(in, report);
  if (source) {
    if (*source < 1 || *source > g.vertex_count()) {
      throw CommandError(kBadProfile, "source must lie in [1, " +
                                          std::to_string(g.vertex_count()) + "]");
    }
    report["source"] = *source;
    report["arrivals"] = to_json(std::span<const Time>(earliest_arrivals(g, *source)));
  } else {
    report["distances"] = to_json(all_pairs(g));
  }
  return {std::move(report)};
}

CommandResult cmd_payoff(const GraphInput& in, GameKind kind, const std::string& profile) {
  Json report = header("payoff", in);
  const auto g = load(in, report);
  const Profile s = parse_profile(profile, g.vertex_count());
  const VoronoiGame game(g, kind);
  report["game"] = to_string(kind);
  report["profile"] = to_json(s);
  report["payoff"] = to_json(game.payoff(s));
  return {std::move(report)};
}

CommandResult cmd_best_response(const GraphInput& in, GameKind kind,
                                const std::optional<std::string>& profile) {
  Json report = header("best-response", in);
  const auto g = load(in, report);
  const VoronoiGame game(g, kind);
  report["game"] = to_string(kind);
  if (profile) {
    const Profile s = parse_profile(*profile, g.vertex_count());
    report["profile"] = to_json(s);
    report["player1"] = to_json(game.best_responses(Player::first, s.p2));
    report["player2"] = to_json(game.best_responses(Player::second, s.p1));
  } else {
    report["best_response_graph"] = to_json(game.best_response_graph());
  }
  return {std::move(report)};
}

CommandResult cmd_nash(const GraphInput& in, GameKind kind,
                       const std::optional<std::string>& profile) {
  Json report = header("nash", in);
  const auto g = load(in, report);
  const VoronoiGame game(g, kind);
  report["game"] = to_string(kind);
  report["classes"] = to_json(classify(g, game.distances()));
  if (profile) {
    const Profile s = parse_profile(*profile, g.vertex_count());
    report["profile"] = to_json(s);
    report["payoff"] = to_json(game.payoff(s));
    report["nash"] = to_json(game.is_nash(s));
  } else {
    const auto ne = game.enumerate_nash();
    report["equilibria"] = to_json(ne);
    report["count"] = ne.size();
  }
  return {std::move(report)};
}

CommandResult cmd_dynamics(const GraphInput& in, GameKind kind, const std::string& start,
                           std::optional<std::size_t> max_steps) {
  Json report = header("dynamics", in);
  const auto g = load(in, report);
  const Profile s = parse_profile(start, g.vertex_count());
  const std::size_t n = g.vertex_count();
  const std::size_t limit = max_steps.value_or(4 * n * n + 4);
  const VoronoiGame game(g, kind);
  report["game"] = to_string(kind);
  report["start"] = to_json(s);
  report["max_steps"] = limit;
  report["dynamics"] = to_json(game.best_response_dynamics(s, limit));
  return {std::move(report)};
}

CommandResult cmd_reproduce(const std::string& selector, std::uint64_t seed) {
  const auto& instances = instance_ids();
  const auto& claims = claim_ids();
  const bool all = selector == "all";
  const bool is_instance = std::find(instances.begin(), instances.end(), selector) != instances.end();
  const bool is_claim = std::find(claims.begin(), claims.end(), selector) != claims.end();
  if (!all && !is_instance && !is_claim) {
    throw CommandError(kParseError, "unknown selector '" + selector +
                                        "' (all, an instance id or a claim id)");
  }

  Json report;
  report["command"] = "reproduce";
  report["selector"] = selector;
  report["seed"] = seed;
  bool ok = true;
  std::size_t passed = 0, failed = 0;

  Json fixtures = Json::array();
  for (const auto& id : instances) {
    if (!all && id != selector) continue;
    auto check = check_fixture(id);
    Json entry{{"instance", id}, {"pass", check.passed}};
    entry["verdicts"] = std::move(check.details["verdicts"]);
    ok = ok && check.passed;
    fixtures.push_back(std::move(entry));
  }
  report["fixtures"] = std::move(fixtures);

  Json results = Json::array();
  for (const auto& id : claims) {
    const auto related = claim_instances(id);
    const bool wanted = all || id == selector ||
                        (is_instance &&
                         std::find(related.begin(), related.end(), selector) != related.end());
    if (!wanted) continue;
    auto r = run_claim(id, seed);
    (r.passed ? passed : failed)++;
    ok = ok && r.passed;
    results.push_back({{"claim", r.id}, {"title", r.title}, {"pass", r.passed},
                       {"details", std::move(r.details)}});
  }
  report["claims"] = std::move(results);
  report["summary"] = {{"passed", passed}, {"failed", failed}, {"all_pass", ok}};
  return {std::move(report), ok ? kOk : kClaimFailure};
}

CommandResult cmd_sweep(const SweepOptions& options) {
  FamilySpec spec;
  const auto kind = parse_class_kind(options.base_class);
  if (!kind) throw CommandError(kBadSpec, "unknown graph class '" + options.base_class + "'");
  spec.base_class = *kind;
  std::tie(spec.n_min, spec.n_max) = parse_range(options.n);
  std::tie(spec.tau_min, spec.tau_max) = parse_range(options.tau);
  if (options.growing && options.shrinking) {
    throw CommandError(kBadSpec, "--growing and --shrinking are mutually exclusive");
  }
  if (options.growing) spec.monotonicity = MonotonicityFilter::growing;
  if (options.shrinking) spec.monotonicity = MonotonicityFilter::shrinking;
  spec.max_edge_changes = options.changes;

  std::vector<GameKind> kinds;
  for (const auto& name : options.games) {
    const GameKind k = parse_game(name);
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);
  }
  if (kinds.empty()) kinds = {GameKind::vor, GameKind::rvor};

  try {
    check_family_spec(spec);
    family_size(spec);
  } catch (const InvalidFamilySpec& e) {
    throw CommandError(kBadSpec, e.what());
  } catch (const BudgetExceeded& e) {
    throw CommandError(kBudgetExceeded, std::string(e.what()) + " (limit " +
                                            std::to_string(kMaxFamilySize) + " instances)");
  }

  const fs::path dir(options.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CommandError(kParseError, "cannot create " + dir.string() + ": " + ec.message());
  std::ofstream records(dir / "records.jsonl", std::ios::binary);
  if (!records) throw CommandError(kParseError, "cannot write " + (dir / "records.jsonl").string());

  const auto summary = sweep(
      spec, kinds, [&](const InstanceRecord& r) { records << to_json(r).dump() << '\n'; },
      options.threads);
  records.close();

  Json report;
  report["command"] = "sweep";
  report["summary"] = to_json(summary);
  write_file(dir / "summary.json", report["summary"].dump(2) + "\n");
  report["files"] = {"records.jsonl", "summary.json"};
  return {std::move(report)};
}

CommandResult cmd_fixtures(const std::optional<std::string>& out_dir) {
  Json report;
  report["command"] = "fixtures";
  Json list = Json::array();
  if (out_dir) {
    std::error_code ec;
    fs::create_directories(*out_dir, ec);
    if (ec) throw CommandError(kParseError, "cannot create " + *out_dir + ": " + ec.message());
  }
  for (const auto& id : instance_ids()) {
    const auto inst = build_instance(id);
    const std::string text = canonical_string(inst.graph) + "\n";
    Json entry{{"id", id}, {"description", inst.description}};
    Json expected = Json::array();
    for (const auto& e : inst.expected) {
      Json v{{"game", to_string(e.kind)}, {"has_ne", e.has_equilibrium}};
      v["witnesses"] = to_json(e.witnesses);
      expected.push_back(std::move(v));
    }
    entry["expected"] = std::move(expected);
    if (out_dir) {
      write_file(fs::path(*out_dir) / (id + ".json"), text);
      entry["file"] = id + ".json";
      entry["digest"] = "sha256:" + sha256_hex(text);
    } else {
      entry["graph"] = to_json(inst.graph);
    }
    list.push_back(std::move(entry));
  }
  report["instances"] = std::move(list);
  return {std::move(report)};
}

}  // namespace tvoronoi::cli

#ifndef WLCIRC_CLI_COMMANDS_HPP
#define WLCIRC_CLI_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wlcirc::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Flags shared by the subcommands; mirrors the command line.
struct CommonOptions {
  int m = 2;
  std::uint64_t seed = 0;
  long long cap_nodes = 10'000'000;
  std::size_t cap_tuples = std::size_t{1} << 25;
  std::string cache_dir;  // resolved through ReportCache::resolve_dir
  bool timing = false;    // adds a wall-clock field (breaks byte determinism)
};

struct CommandResult {
  ordered_json report;
  int exit_code = 0;
  bool cache_hit = false;
};

/// Renders a report exactly as it is cached and emitted.
std::string render_report(const ordered_json& report);

/// wl: stable colorings of one or two graphs; with two inputs, the lockstep
/// equivalence verdict. `dump_path` optionally writes the coloring of the
/// first input (JSON header line + tuple,color CSV).
CommandResult run_wl(const std::vector<std::string>& graph_specs, const CommonOptions& opts,
                     const std::string& dump_path = {});

/// scheme: rank, X-group lattice, radical, normality and the decomposition
/// tree of the circulant scheme of a connection set.
CommandResult run_scheme(const std::string& circ_spec, const CommonOptions& opts);

/// iso: theorem-backed isomorphism test; exit 0 isomorphic, 1 non-isomorphic,
/// 2 undecided.
CommandResult run_iso(const std::string& circ_spec, const std::string& graph_spec,
                      const CommonOptions& opts);

/// batch: JSON-lines manifest, one job per line:
///   {"cmd": "wl"|"scheme"|"iso", "args": [...], "seed": 0}
/// Jobs run in a pool of `jobs` workers with per-job isolation; reports are
/// cached by request digest and emitted in manifest order.
struct BatchOutcome {
  std::vector<ordered_json> reports;   // per job, error entries included
  ordered_json summary;
  int exit_code = 0;
};
BatchOutcome run_batch(const std::string& manifest_path, const CommonOptions& opts, int jobs);

}  // namespace wlcirc::cli

#endif

#include "wlcirc_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "wlcirc/circulant.hpp"
#include "wlcirc/errors.hpp"
#include "wlcirc/graph_io.hpp"
#include "wlcirc/json_io.hpp"
#include "wlcirc_cli/cache.hpp"
#include "wlcirc_cli/digest.hpp"

namespace wlcirc::cli {

namespace {

ordered_json input_json(const Graph& g) {
  ordered_json j;
  j["digest"] = graph_digest(g);
  j["n"] = g.vertex_count();
  j["arcs"] = g.arc_count();
  return j;
}

ordered_json caps_json(const CommonOptions& opts) {
  ordered_json j;
  j["nodes"] = opts.cap_nodes;
  j["tuples"] = opts.cap_tuples;
  return j;
}

std::string request_key(const std::string& command, const CommonOptions& opts,
                        const std::vector<const Graph*>& graphs, const std::string& extra = {}) {
  std::ostringstream os;
  os << command << "|v" << kToolVersion << "|m=" << opts.m << "|seed=" << opts.seed
     << "|nodes=" << opts.cap_nodes << "|tuples=" << opts.cap_tuples << "|" << extra << "|";
  for (const Graph* g : graphs) os << canonical_graph_bytes(*g) << "|";
  return fnv128_hex(os.str());
}

ordered_json report_header(const std::string& command, const CommonOptions& opts) {
  ordered_json j;
  j["tool"] = "wlcirc";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["m"] = opts.m;
  j["seed"] = opts.seed;
  j["caps"] = caps_json(opts);
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

/// Caching wrapper: reports are byte-identical for identical requests; the
/// optional timing field is added after the fact and disables the cache.
CommandResult finish(const std::string& key, const CommonOptions& opts,
                     const std::function<ordered_json()>& compute, int* exit_code_out = nullptr) {
  CommandResult result;
  Timer timer;
  if (opts.timing) {
    result.report = compute();
    result.report["timing_ms"] = timer.ms();
    result.cache_hit = false;
  } else {
    ReportCache cache(ReportCache::resolve_dir(opts.cache_dir));
    auto [bytes, hit] =
        cache.get_or_compute(key, [&] { return render_report(compute()); });
    result.report = ordered_json::parse(bytes);
    result.cache_hit = hit;
  }
  if (exit_code_out) *exit_code_out = result.report.value("exit_code", 0);
  return result;
}

void write_coloring_dump(const std::string& path, const wl::TupleColoring& coloring) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw InvalidInput("cannot write coloring dump: " + path);
  out << coloring_header_json(coloring).dump() << "\n";
  write_coloring_csv(out, coloring);
}

}  // namespace

std::string render_report(const ordered_json& report) { return report.dump(2) + "\n"; }

CommandResult run_wl(const std::vector<std::string>& graph_specs, const CommonOptions& opts,
                     const std::string& dump_path) {
  if (graph_specs.empty() || graph_specs.size() > 2)
    throw InvalidInput("wl takes one or two graph inputs");
  if (opts.m < 1 || opts.m > 3) throw InvalidInput("wl supports m in {1,2,3}");
  std::vector<Graph> graphs;
  for (const std::string& spec : graph_specs) graphs.push_back(load_graph_spec(spec));
  wl::WlOptions wl_opts;
  wl_opts.max_tuples = opts.cap_tuples;

  std::vector<const Graph*> ptrs;
  for (const Graph& g : graphs) ptrs.push_back(&g);
  std::string key = request_key("wl", opts, ptrs);

  auto compute = [&]() {
    ordered_json j = report_header("wl", opts);
    ordered_json inputs = ordered_json::array();
    for (const Graph& g : graphs) inputs.push_back(input_json(g));
    j["inputs"] = std::move(inputs);
    ordered_json colorings = ordered_json::array();
    for (const Graph& g : graphs) {
      wl::TupleColoring c = wl::stable_coloring(g, opts.m, wl_opts);
      colorings.push_back(coloring_header_json(c));
    }
    j["colorings"] = std::move(colorings);
    if (graphs.size() == 2) {
      wl::EquivalenceOutcome eq = wl::wl_equivalence(graphs[0], graphs[1], opts.m, wl_opts);
      ordered_json e;
      e["equivalent"] = eq.equivalent;
      e["rounds"] = eq.rounds;
      e["diverged_round"] = eq.diverged_round;
      j["equivalence"] = std::move(e);
    }
    j["exit_code"] = 0;
    return j;
  };

  int exit_code = 0;
  CommandResult result = finish(key, opts, compute, &exit_code);
  result.exit_code = exit_code;
  if (!dump_path.empty())
    write_coloring_dump(dump_path, wl::stable_coloring(graphs[0], opts.m, wl_opts));
  return result;
}

CommandResult run_scheme(const std::string& circ_spec, const CommonOptions& opts) {
  ConnectionSet c = ConnectionSet::parse(circ_spec);
  Graph g = build_circulant(c);
  std::string key = request_key("scheme", opts, {&g});

  auto compute = [&]() {
    circ::CirculantScheme s = circ::CirculantScheme::from_cayley(c);
    SearchLimits limits{opts.cap_nodes};
    ordered_json j = report_header("scheme", opts);
    j["inputs"] = ordered_json::array({input_json(g)});
    j["modulus"] = c.modulus;
    j["connection_set"] = c.elements;
    j["prime_power"] = is_prime_power(c.modulus);
    j["rank"] = s.configuration().rank();
    std::vector<int> gens;
    for (const auto& h : s.x_groups()) gens.push_back(h.generator);
    j["x_groups"] = gens;
    j["radical"] = s.radical().generator;
    j["normal"] = circ::is_normal(s, limits);
    j["tree"] = tree_to_json(circ::classify(s, limits));
    j["exit_code"] = 0;
    return j;
  };

  int exit_code = 0;
  CommandResult result = finish(key, opts, compute, &exit_code);
  result.exit_code = exit_code;
  return result;
}

CommandResult run_iso(const std::string& circ_spec, const std::string& graph_spec,
                      const CommonOptions& opts) {
  ConnectionSet c = ConnectionSet::parse(circ_spec);
  Graph g = build_circulant(c);
  Graph h = load_graph_spec(graph_spec);
  std::string key = request_key("iso", opts, {&g, &h});

  auto compute = [&]() {
    circ::IsoTestOptions iso_opts;
    iso_opts.wl.max_tuples = opts.cap_tuples;
    iso_opts.witness_search.max_nodes = opts.cap_nodes;
    iso::IsoCertificate cert = circ::iso_test(c, h, iso_opts);
    ordered_json j = report_header("iso", opts);
    j["inputs"] = ordered_json::array({input_json(g), input_json(h)});
    j["certificate"] = certificate_to_json(cert);
    switch (cert.verdict) {
      case iso::IsoCertificate::Verdict::isomorphic:
        j["exit_code"] = 0;
        break;
      case iso::IsoCertificate::Verdict::non_isomorphic:
        j["exit_code"] = 1;
        break;
      case iso::IsoCertificate::Verdict::undecided:
        j["exit_code"] = 2;
        break;
    }
    return j;
  };

  int exit_code = 0;
  CommandResult result = finish(key, opts, compute, &exit_code);
  result.exit_code = exit_code;
  return result;
}

BatchOutcome run_batch(const std::string& manifest_path, const CommonOptions& opts, int jobs) {
  std::ifstream in(manifest_path);
  if (!in) throw InvalidInput("cannot open manifest: " + manifest_path);
  struct Job {
    int line = 0;
    std::string cmd;
    std::vector<std::string> args;
    CommonOptions opts;
    std::string error;  // parse failure
  };
  std::vector<Job> parsed;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Job job;
    job.line = lineno;
    job.opts = opts;
    try {
      ordered_json j = ordered_json::parse(line);
      job.cmd = j.at("cmd").get<std::string>();
      for (const auto& a : j.at("args")) job.args.push_back(a.get<std::string>());
      if (j.contains("seed")) job.opts.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("m")) job.opts.m = j["m"].get<int>();
    } catch (const std::exception& e) {
      job.error = std::string("manifest line ") + std::to_string(lineno) + ": " + e.what();
    }
    parsed.push_back(std::move(job));
  }

  std::vector<ordered_json> reports(parsed.size());
  std::vector<int> codes(parsed.size(), 0);
  std::vector<char> hits(parsed.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= parsed.size()) return;
      const Job& job = parsed[i];
      try {
        if (!job.error.empty()) throw InvalidInput(job.error);
        CommandResult r;
        if (job.cmd == "wl") {
          r = run_wl(job.args, job.opts);
        } else if (job.cmd == "scheme") {
          if (job.args.size() != 1) throw InvalidInput("scheme takes one connection-set spec");
          r = run_scheme(job.args[0], job.opts);
        } else if (job.cmd == "iso") {
          if (job.args.size() != 2) throw InvalidInput("iso takes a connection set and a graph");
          r = run_iso(job.args[0], job.args[1], job.opts);
        } else {
          throw InvalidInput("unknown command in manifest: " + job.cmd);
        }
        reports[i] = std::move(r.report);
        codes[i] = r.exit_code;
        hits[i] = r.cache_hit;
      } catch (const std::exception& e) {
        ordered_json err;
        err["tool"] = "wlcirc";
        err["version"] = kToolVersion;
        err["command"] = job.cmd.empty() ? "?" : job.cmd;
        err["manifest_line"] = job.line;
        err["error"] = e.what();
        reports[i] = std::move(err);
        codes[i] = -1;
      }
    }
  };
  int workers = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BatchOutcome out;
  out.reports = std::move(reports);
  int ok = 0, errors = 0, cache_hits = 0;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (codes[i] < 0)
      ++errors;
    else
      ++ok;
    cache_hits += hits[i];
  }
  out.summary["tool"] = "wlcirc";
  out.summary["command"] = "batch";
  out.summary["jobs"] = parsed.size();
  out.summary["ok"] = ok;
  out.summary["errors"] = errors;
  out.summary["cache_hits"] = cache_hits;
  out.exit_code = errors == 0 ? 0 : 1;
  return out;
}

}  // namespace wlcirc::cli

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlcirc/errors.hpp"
#include "wlcirc/graph.hpp"
#include "wlcirc_cli/commands.hpp"

namespace {

using wlcirc::cli::CommandResult;
using wlcirc::cli::CommonOptions;

void print_human_wl(const wlcirc::cli::ordered_json& r) {
  for (const auto& c : r.at("colorings"))
    std::cout << "m=" << r.at("m") << " n=" << c.at("n") << ": " << c.at("classes")
              << " classes after " << c.at("rounds") << " rounds\n";
  if (r.contains("equivalence")) {
    const auto& e = r.at("equivalence");
    std::cout << (e.at("equivalent").get<bool>() ? "equivalent" : "inequivalent");
    if (!e.at("equivalent").get<bool>())
      std::cout << " (diverged at round " << e.at("diverged_round") << ")";
    std::cout << "\n";
  }
}

void print_human_scheme(const wlcirc::cli::ordered_json& r) {
  std::cout << "scheme on Z_" << r.at("modulus") << ": rank " << r.at("rank") << ", radical <"
            << r.at("radical") << ">, " << (r.at("normal").get<bool>() ? "normal" : "not normal")
            << "\n";
  std::cout << "x-groups (generators): ";
  for (const auto& g : r.at("x_groups")) std::cout << g << " ";
  std::cout << "\ntree: " << r.at("tree").dump() << "\n";
}

void print_human_iso(const wlcirc::cli::ordered_json& r) {
  const auto& cert = r.at("certificate");
  std::cout << cert.at("verdict").get<std::string>() << "\n";
  if (!cert.at("witness").is_null()) std::cout << "witness: " << cert.at("witness").dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Leman refinement and circulant-scheme toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opts;
  bool as_json = false;
  int jobs = 1;
  app.add_option("--m", opts.m, "WL arity (1, 2 or 3)")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--cap-nodes", opts.cap_nodes, "search node budget")->capture_default_str();
  app.add_option("--cap-tuples", opts.cap_tuples, "tuple-space cap for WL refinement")
      ->capture_default_str();
  app.add_option("--cache-dir", opts.cache_dir,
                 "report cache directory (default: $WLCIRC_CACHE or .wlcache)");
  app.add_option("--jobs", jobs, "batch worker count")->capture_default_str();
  app.add_flag("--json", as_json, "emit the JSON report on stdout");
  app.add_flag("--timing", opts.timing,
               "add wall-clock timing to reports (disables the cache and byte determinism)");

  std::vector<std::string> wl_inputs;
  std::string dump_path;
  CLI::App* wl = app.add_subcommand("wl", "stable WL colorings and equivalence");
  wl->add_option("graphs", wl_inputs, "one or two graphs (circ:<n>:<list> or file)")
      ->required()
      ->expected(1, 2);
  wl->add_option("--dump", dump_path, "write the first input's coloring (JSON header + CSV)");

  std::string scheme_spec;
  bool require_pp = false;
  CLI::App* scheme = app.add_subcommand("scheme", "circulant-scheme structure report");
  scheme->add_option("spec", scheme_spec, "connection set circ:<n>:<list>")->required();
  scheme->add_flag("--require-prime-power", require_pp, "reject non-prime-power moduli");

  std::string iso_circ, iso_graph;
  CLI::App* iso = app.add_subcommand("iso", "isomorphism test for a prime-power circulant");
  iso->add_option("circulant", iso_circ, "connection set circ:<n>:<list>")->required();
  iso->add_option("graph", iso_graph, "graph to compare (spec or file)")->required();

  std::string manifest;
  CLI::App* batch = app.add_subcommand("batch", "run a JSON-lines manifest of jobs");
  batch->add_option("manifest", manifest, "manifest file, one job per line")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (wl->parsed()) {
      CommandResult r = wlcirc::cli::run_wl(wl_inputs, opts, dump_path);
      if (as_json)
        std::cout << wlcirc::cli::render_report(r.report);
      else
        print_human_wl(r.report);
      return r.exit_code;
    }
    if (scheme->parsed()) {
      if (require_pp && !wlcirc::is_prime_power(wlcirc::ConnectionSet::parse(scheme_spec).modulus))
        throw wlcirc::InvalidInput("modulus is not a prime power");
      CommandResult r = wlcirc::cli::run_scheme(scheme_spec, opts);
      if (as_json)
        std::cout << wlcirc::cli::render_report(r.report);
      else
        print_human_scheme(r.report);
      return r.exit_code;
    }
    if (iso->parsed()) {
      CommandResult r = wlcirc::cli::run_iso(iso_circ, iso_graph, opts);
      if (as_json)
        std::cout << wlcirc::cli::render_report(r.report);
      else
        print_human_iso(r.report);
      return r.exit_code;
    }
    if (batch->parsed()) {
      auto outcome = wlcirc::cli::run_batch(manifest, opts, jobs);
      if (as_json) {
        for (const auto& report : outcome.reports) std::cout << report.dump() << "\n";
        std::cout << outcome.summary.dump() << "\n";
      } else {
        std::cout << "batch: " << outcome.summary.at("ok") << " ok, "
                  << outcome.summary.at("errors") << " errors, "
                  << outcome.summary.at("cache_hits") << " cache hits\n";
      }
      return outcome.exit_code;
    }
  } catch (const wlcirc::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}

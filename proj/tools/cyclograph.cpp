//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Command-line front end: search, gc, cache, compare.
// Exit codes: 0 success, 1 I/O or input error, 2 configuration error.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cyclograph.hpp"

namespace fs = std::filesystem;
using namespace cyclograph;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;

bool ends_with(const std::string &s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// First molecule of an SDF/molfile, or a molecular-graph JSON document.
MolecularGraph load_molecule(const fs::path &path) {
  std::string text = internal::read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return from_json(text);
  auto records = parse_sdf_records(text);
  if (records.empty())
    throw MalformedRecord("no molecule in " + path.string());
  if (!records.front().graph)
    throw MalformedRecord(records.front().error, 1);
  return *records.front().graph;
}

int run_gc(const fs::path &in, int j, const fs::path &out) {
  if (j < 0)
    throw ConfigError("j must be >= 0");
  CycleGraph cg = build_cycle_graph(suppress_hydrogens(load_molecule(in)), j);
  std::string text = ends_with(out.string(), ".dot")
                         ? to_dot(cg)
                         : cycle_graph_to_json_value(cg).dump(2) + "\n";
  if (out.empty() || out == "-")
    std::cout << text;
  else
    internal::write_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Molecular similarity over graphs of cycles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "gc";
  long long budget_ms = cfg.budget.count();
  auto *search = app.add_subcommand("search", "rank a corpus against a target");
  search->add_option("--mode", mode, "mg or gc")->capture_default_str();
  search->add_option("--target", cfg.target, "corpus name, 0-based index or file")
      ->required();
  search->add_option("--corpus", cfg.corpus, "SDF corpus")->required();
  search->add_option("--j", cfg.j, "maximum cycle length, 0 for none")
      ->capture_default_str();
  search->add_option("--budget-ms", budget_ms, "per-pair time budget")
      ->capture_default_str();
  search->add_option("--tolerance", cfg.cycle_tolerance, "relative cycle length tolerance")
      ->capture_default_str();
  search->add_option("--theta-tolerance", cfg.theta_tolerance,
                     "relative theta tolerance")
      ->capture_default_str();
  search->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  search->add_option("--bin-width", cfg.bin_width, "histogram bin width")
      ->capture_default_str();
  search->add_flag("--timing", cfg.timing, "write elapsed_ms per row");
  search->add_option("--out", cfg.output, "output directory")->required();

  fs::path gc_in, gc_out;
  int gc_j = 0;
  auto *gc = app.add_subcommand("gc", "dump the graph of cycles of one molecule");
  gc->add_option("--in", gc_in, "SDF, molfile or JSON")->required();
  gc->add_option("--j", gc_j, "maximum cycle length, 0 for none")->capture_default_str();
  gc->add_option("--out", gc_out, "output .json or .dot, - for stdout");

  fs::path cache_corpus, cache_out;
  int cache_j = 9;
  auto *cache = app.add_subcommand("cache", "cycle graphs of a whole corpus");
  cache->add_option("--corpus", cache_corpus, "SDF corpus")->required();
  cache->add_option("--j", cache_j, "maximum cycle length")->capture_default_str();
  cache->add_option("--out", cache_out, "output JSON")->required();

  fs::path cmp_mg, cmp_gc, cmp_out;
  int cmp_k = 20;
  auto *compare = app.add_subcommand("compare", "top-k overlap of two rankings");
  compare->add_option("--mg", cmp_mg, "MG ranking CSV")->required();
  compare->add_option("--gc", cmp_gc, "GC ranking CSV")->required();
  compare->add_option("--k", cmp_k, "top-k size")->capture_default_str();
  compare->add_option("--out", cmp_out, "output JSON, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*search) {
      cfg.mode = search_mode_from_string(mode);
      cfg.budget = std::chrono::milliseconds(budget_ms);
      SearchReport report = run_search(cfg);
      std::cerr << report.ranking.size() << " pairs: " << report.pairs_exact
                << " exact, " << report.pairs_timeout << " timeout, "
                << report.pairs_failed << " failed\n";
      return 0;
    }
    if (*gc)
      return run_gc(gc_in, gc_j, gc_out);
    if (*cache) {
      internal::write_file(cache_out,
                           build_gc_cache(internal::read_file(cache_corpus), cache_j));
      return 0;
    }
    if (*compare) {
      auto mg = read_ranking_csv(internal::read_file(cmp_mg));
      auto gcr = read_ranking_csv(internal::read_file(cmp_gc));
      std::string text = compare_modes(mg, gcr, cmp_k).dump(2) + "\n";
      if (cmp_out.empty() || cmp_out == "-")
        std::cout << text;
      else
        internal::write_file(cmp_out, text);
      return 0;
    }
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CorpusMismatch &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}

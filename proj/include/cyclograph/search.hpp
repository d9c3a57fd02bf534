//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_SEARCH_HPP_
#define CYCLOGRAPH_SEARCH_HPP_

// Target-versus-corpus similarity runs, cycle-graph caches and ranking
// comparison. Everything here is plumbing around mces.hpp.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cyclograph/cyclegraph.hpp"
#include "cyclograph/error.hpp"
#include "cyclograph/graphcore.hpp"
#include "cyclograph/mces.hpp"
#include "cyclograph/molecule.hpp"
#include "cyclograph/molio.hpp"

namespace cyclograph {

enum class SearchMode { kMg, kGc };

inline std::string_view to_string(SearchMode m) {
  return m == SearchMode::kMg ? "mg" : "gc";
}

inline SearchMode search_mode_from_string(std::string_view s) {
  if (s == "mg")
    return SearchMode::kMg;
  if (s == "gc")
    return SearchMode::kGc;
  throw ConfigError("mode must be mg or gc, got \"" + std::string(s) + "\"");
}

struct RunConfig {
  SearchMode mode = SearchMode::kGc;
  int j = 9;
  double cycle_tolerance = 0.2;
  double theta_tolerance = 0.0;
  std::chrono::milliseconds budget{20000};
  std::string target;  // corpus name, 0-based corpus index, or a file path
  std::filesystem::path corpus;
  std::filesystem::path output;  // empty: nothing written
  int jobs = 1;
  double bin_width = 0.05;
  bool timing = false;  // fill elapsed_ms in the ranking

  void validate() const {
    if (budget.count() <= 0)
      throw ConfigError("budget must be positive");
    if (j < 0)
      throw ConfigError("j must be >= 0");
    if (cycle_tolerance < 0 || theta_tolerance < 0)
      throw ConfigError("tolerances must be >= 0");
    if (jobs < 1)
      throw ConfigError("jobs must be >= 1");
    if (!(bin_width > 0 && bin_width <= 1))
      throw ConfigError("bin width must be in (0, 1]");
    if (target.empty())
      throw ConfigError("no target given");
  }

  PiConstraint constraint() const {
    PiConstraint c;
    c.mode = mode == SearchMode::kMg ? PiMode::kMolecular : PiMode::kCycle;
    c.cycle_tolerance = cycle_tolerance;
    c.theta_tolerance = theta_tolerance;
    return c;
  }
};

enum class RowStatus { kExact, kTimeoutLowerBound, kFailed };

inline std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kExact:
      return "exact";
    case RowStatus::kTimeoutLowerBound:
      return "timeout_lower_bound";
    case RowStatus::kFailed:
      break;
  }
  return "failed";
}

inline RowStatus row_status_from_string(std::string_view s) {
  if (s == "exact")
    return RowStatus::kExact;
  if (s == "timeout_lower_bound")
    return RowStatus::kTimeoutLowerBound;
  if (s == "failed")
    return RowStatus::kFailed;
  throw SchemaViolation("unknown status \"" + std::string(s) + "\"");
}

struct RankingRow {
  std::size_t index = 0;  // corpus position
  std::string name;
  double score = 0.0;
  RowStatus status = RowStatus::kFailed;
  double elapsed_ms = 0.0;
  std::string error;
};

struct SearchReport {
  std::string target;
  std::vector<RankingRow> ranking;  // ranked order
  std::size_t pairs_exact = 0;
  std::size_t pairs_timeout = 0;
  std::size_t pairs_failed = 0;
  double wall_ms = 0.0;
};

namespace internal {

inline std::string read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw std::ios_base::failure("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path &p, std::string_view text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
    throw std::ios_base::failure("cannot write " + p.string());
}

inline std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

// Ranked order: scored rows by score descending, name, corpus index; failed
// rows last in corpus order.
inline bool ranks_before(const RankingRow &a, const RankingRow &b) {
  bool fa = a.status == RowStatus::kFailed;
  bool fb = b.status == RowStatus::kFailed;
  if (fa != fb)
    return fb;
  if (!fa && a.score != b.score)
    return a.score > b.score;
  if (!fa && a.name != b.name)
    return a.name < b.name;
  return a.index < b.index;
}

// One comparable form per molecule: the structural core for MG mode, the
// graph of cycles for GC mode.
inline LabeledGraph prepare(const MolecularGraph &g, const RunConfig &cfg) {
  MolecularGraph heavy = suppress_hydrogens(g);
  if (cfg.mode == SearchMode::kMg) {
    LabeledGraph lg = to_labeled(structural_core(heavy));
    lg.name = g.name;
    return lg;
  }
  return to_labeled(build_cycle_graph(heavy, cfg.j));
}

inline bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline MolecularGraph resolve_target(const std::string &target,
                                     const std::vector<SdfRecord> &corpus) {
  for (const auto &rec : corpus) {
    if (rec.name == target) {
      if (!rec.graph)
        throw ConfigError("target record is unreadable: " + rec.error);
      return *rec.graph;
    }
  }
  if (all_digits(target)) {
    std::size_t i = std::stoul(target);
    if (i < corpus.size()) {
      if (!corpus[i].graph)
        throw ConfigError("target record is unreadable: " + corpus[i].error);
      return *corpus[i].graph;
    }
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(target, ec)) {
    auto records = parse_sdf_records(read_file(target));
    if (records.empty())
      throw ConfigError("target file holds no molecule: " + target);
    if (!records.front().graph)
      throw ConfigError("target file is unreadable: " + records.front().error);
    return *records.front().graph;
  }
  throw ConfigError("target \"" + target + "\" not found in corpus");
}

}  // namespace internal

inline std::string ranking_csv(const SearchReport &report, bool timing) {
  std::string out = "rank,name,score,status,elapsed_ms\n";
  std::size_t rank = 0;
  for (const auto &row : report.ranking) {
    ++rank;
    out += std::to_string(rank) + ',' + internal::csv_field(row.name) + ',';
    if (row.status != RowStatus::kFailed)
      out += internal::fixed(row.score);
    out += ',';
    out += to_string(row.status);
    out += ',';
    if (timing && row.status != RowStatus::kFailed)
      out += internal::fixed(row.elapsed_ms, 3);
    out += '\n';
  }
  return out;
}

// Bins [k*w, (k+1)*w) over [0, 1]; the last bin is closed. Only exact scores
// are counted.
inline std::vector<std::size_t> score_histogram(const SearchReport &report,
                                                double bin_width) {
  std::size_t bins =
      static_cast<std::size_t>(std::ceil(1.0 / bin_width - 1e-9));
  std::vector<std::size_t> counts(bins, 0);
  for (const auto &row : report.ranking) {
    if (row.status != RowStatus::kExact)
      continue;
    auto k = static_cast<std::size_t>(std::floor(row.score / bin_width + 1e-9));
    counts[std::min(k, bins - 1)]++;
  }
  return counts;
}

inline std::string histogram_csv(const SearchReport &report, double bin_width) {
  std::string out = "bin_start,bin_end,count\n";
  auto counts = score_histogram(report, bin_width);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    double lo = static_cast<double>(k) * bin_width;
    double hi = std::min(1.0, lo + bin_width);
    out += internal::fixed(lo, 4) + ',' + internal::fixed(hi, 4) + ',' +
           std::to_string(counts[k]) + '\n';
  }
  return out;
}

inline nlohmann::ordered_json manifest(const RunConfig &cfg,
                                       const SearchReport &report) {
  nlohmann::ordered_json m;
  m["config"] = {{"mode", to_string(cfg.mode)},
                 {"j", cfg.j},
                 {"tolerance", cfg.cycle_tolerance},
                 {"theta_tolerance", cfg.theta_tolerance},
                 {"budget_ms", cfg.budget.count()},
                 {"target", cfg.target},
                 {"corpus", cfg.corpus.string()},
                 {"jobs", cfg.jobs},
                 {"bin_width", cfg.bin_width}};
  m["target_name"] = report.target;
  m["pairs_total"] = report.ranking.size();
  m["pairs_exact"] = report.pairs_exact;
  m["pairs_timeout"] = report.pairs_timeout;
  m["pairs_failed"] = report.pairs_failed;
  m["wall_ms"] = std::round(report.wall_ms);
  return m;
}

// Compares the target against every corpus record. Failures of single
// records are logged to `log` and kept in the ranking as "failed".
inline SearchReport run_search(const RunConfig &cfg,
                               std::ostream *log = &std::cerr) {
  cfg.validate();
  auto started = std::chrono::steady_clock::now();
  std::vector<SdfRecord> corpus =
      parse_sdf_records(internal::read_file(cfg.corpus));
  MolecularGraph target_mol = internal::resolve_target(cfg.target, corpus);
  const LabeledGraph target = internal::prepare(target_mol, cfg);
  const PiConstraint constraint = cfg.constraint();

  std::vector<RankingRow> rows(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      RankingRow &row = rows[i];
      row.index = i;
      row.name = corpus[i].name;
      if (!corpus[i].graph) {
        row.error = corpus[i].error;
        continue;
      }
      auto t0 = std::chrono::steady_clock::now();
      try {
        LabeledGraph other = internal::prepare(*corpus[i].graph, cfg);
        McesResult r = similarity(target, other, constraint, cfg.budget);
        row.score = r.score;
        row.status = r.status == McesStatus::kExact
                         ? RowStatus::kExact
                         : RowStatus::kTimeoutLowerBound;
      } catch (const std::exception &e) {
        row.error = e.what();
      }
      row.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    }
  };
  {
    std::vector<std::jthread> pool;
    int workers = std::min<int>(cfg.jobs, std::max<int>(1, static_cast<int>(corpus.size())));
    for (int w = 1; w < workers; ++w)
      pool.emplace_back(work);
    work();
  }

  SearchReport report;
  report.target = target_mol.name;
  for (const auto &row : rows) {
    if (row.status == RowStatus::kExact)
      ++report.pairs_exact;
    else if (row.status == RowStatus::kTimeoutLowerBound)
      ++report.pairs_timeout;
    else {
      ++report.pairs_failed;
      if (log)
        *log << "record " << row.index + 1 << " (" << row.name
             << ") failed: " << row.error << '\n';
    }
  }
  report.ranking = std::move(rows);
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   internal::ranks_before);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();

  if (!cfg.output.empty()) {
    std::filesystem::create_directories(cfg.output);
    internal::write_file(cfg.output / "ranking.csv",
                         ranking_csv(report, cfg.timing));
    internal::write_file(cfg.output / "histogram.csv",
                         histogram_csv(report, cfg.bin_width));
    internal::write_file(cfg.output / "manifest.json",
                         manifest(cfg, report).dump(2) + "\n");
  }
  return report;
}

// Cycle graph of every corpus record keyed by corpus index; unreadable
// records get a null graph and their error message.
inline std::string build_gc_cache(std::string_view sdf_text, int j,
                                  std::ostream *log = &std::cerr) {
  if (j < 0)
    throw ConfigError("j must be >= 0");
  nlohmann::ordered_json doc;
  doc["j"] = j;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto &rec : parse_sdf_records(sdf_text)) {
    nlohmann::ordered_json entry;
    entry["index"] = rec.index;
    entry["name"] = rec.name;
    std::string error = rec.error;
    if (rec.graph) {
      try {
        entry["graph"] =
            cycle_graph_to_json_value(build_cycle_graph(suppress_hydrogens(*rec.graph), j));
      } catch (const std::exception &e) {
        error = e.what();
      }
    }
    if (!entry.contains("graph")) {
      entry["graph"] = nullptr;
      entry["error"] = error;
      if (log)
        *log << "record " << rec.index + 1 << " (" << rec.name
             << ") skipped: " << error << '\n';
    }
    doc["entries"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

// Reads a ranking CSV back; elapsed_ms is optional.
inline std::vector<RankingRow> read_ranking_csv(std::string_view text) {
  std::vector<RankingRow> rows;
  auto lines = internal::split_lines(text);
  bool header = true;
  for (auto line : lines) {
    if (internal::trim(line).empty())
      continue;
    auto f = internal::csv_split(line);
    if (header) {
      if (f.size() < 4 || f[0] != "rank" || f[1] != "name")
        throw SchemaViolation("ranking CSV header missing");
      header = false;
      continue;
    }
    if (f.size() < 4)
      throw SchemaViolation("ranking CSV row has too few fields");
    RankingRow row;
    row.index = rows.size();
    row.name = f[1];
    row.status = row_status_from_string(f[3]);
    if (row.status != RowStatus::kFailed) {
      try {
        row.score = std::stod(f[2]);
      } catch (const std::exception &) {
        throw SchemaViolation("bad score \"" + f[2] + "\"");
      }
    }
    rows.push_back(std::move(row));
  }
  if (header)
    throw SchemaViolation("ranking CSV is empty");
  return rows;
}

// Top-k overlap between an MG and a GC ranking of the same corpus. Only
// exact rows take part in the top-k; the rest are counted separately.
inline nlohmann::ordered_json compare_modes(const std::vector<RankingRow> &mg,
                                            const std::vector<RankingRow> &gc,
                                            int k) {
  if (k < 1)
    throw ConfigError("k must be >= 1");
  std::vector<std::string> names_mg, names_gc;
  for (const auto &r : mg)
    names_mg.push_back(r.name);
  for (const auto &r : gc)
    names_gc.push_back(r.name);
  std::sort(names_mg.begin(), names_mg.end());
  std::sort(names_gc.begin(), names_gc.end());
  if (names_mg != names_gc)
    throw CorpusMismatch("rankings cover different molecules");

  auto top = [k](const std::vector<RankingRow> &rows) {
    std::vector<std::string> out;
    for (const auto &r : rows)
      if (r.status == RowStatus::kExact && static_cast<int>(out.size()) < k)
        out.push_back(r.name);
    return out;
  };
  auto ranks = [](const std::vector<RankingRow> &rows) {
    std::map<std::string, int> out;
    int rank = 0;
    for (const auto &r : rows)
      if (r.status == RowStatus::kExact)
        out.emplace(r.name, ++rank);
    return out;
  };
  auto not_computed = [](const std::vector<RankingRow> &rows) {
    nlohmann::ordered_json j;
    std::size_t timeout = 0, failed = 0;
    for (const auto &r : rows) {
      timeout += r.status == RowStatus::kTimeoutLowerBound;
      failed += r.status == RowStatus::kFailed;
    }
    j["timeout"] = timeout;
    j["failed"] = failed;
    return j;
  };

  auto top_mg = top(mg), top_gc = top(gc);
  auto rank_mg = ranks(mg), rank_gc = ranks(gc);
  std::vector<std::string> sorted_mg = top_mg, sorted_gc = top_gc;
  std::sort(sorted_mg.begin(), sorted_mg.end());
  std::sort(sorted_gc.begin(), sorted_gc.end());
  std::vector<std::string> both;
  std::set_intersection(sorted_mg.begin(), sorted_mg.end(), sorted_gc.begin(),
                        sorted_gc.end(), std::back_inserter(both));

  nlohmann::ordered_json out;
  out["k"] = k;
  out["overlap"] = both.size();
  out["top_mg"] = top_mg;
  out["top_gc"] = top_gc;
  std::vector<std::string> listed = top_gc;
  for (const auto &n : top_mg)
    if (std::find(listed.begin(), listed.end(), n) == listed.end())
      listed.push_back(n);
  out["displacement"] = nlohmann::ordered_json::array();
  for (const auto &n : listed) {
    nlohmann::ordered_json d;
    d["name"] = n;
    auto a = rank_mg.find(n), b = rank_gc.find(n);
    d["rank_mg"] = a == rank_mg.end() ? nlohmann::ordered_json() : nlohmann::ordered_json(a->second);
    d["rank_gc"] = b == rank_gc.end() ? nlohmann::ordered_json() : nlohmann::ordered_json(b->second);
    if (a != rank_mg.end() && b != rank_gc.end())
      d["shift"] = a->second - b->second;
    else
      d["shift"] = nullptr;
    out["displacement"].push_back(std::move(d));
  }
  out["not_computed"] = {{"mg", not_computed(mg)}, {"gc", not_computed(gc)}};
  return out;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_SEARCH_HPP_

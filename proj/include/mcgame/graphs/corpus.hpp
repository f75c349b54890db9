#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mcgame/graphs/bounds.hpp"
#include "mcgame/graphs/cops.hpp"
#include "mcgame/graphs/genus.hpp"
#include "mcgame/graphs/graph.hpp"
#include "mcgame/graphs/graph6.hpp"
#include "mcgame/graphs/guarding.hpp"

namespace mcgame::graphs {

struct CorpusEntry {
  std::string name;
  std::string graph6;
  std::optional<int> declared_genus;
  std::optional<int> expected_cop_number;
};

/// Reads every <name>.g6 in a directory plus its optional <name>.json.
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw GraphError("not a directory: " + dir.string());
  std::vector<CorpusEntry> out;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() != ".g6") continue;
    std::ifstream in(f.path());
    CorpusEntry e;
    e.name = f.path().stem().string();
    std::getline(in, e.graph6);
    auto meta_path = f.path();
    meta_path.replace_extension(".json");
    if (std::filesystem::exists(meta_path)) {
      std::ifstream m(meta_path);
      const auto j = nlohmann::json::parse(m);
      if (j.contains("name")) e.name = j["name"].get<std::string>();
      if (j.contains("declared_genus")) e.declared_genus = j["declared_genus"].get<int>();
      if (j.contains("expected_cop_number")) e.expected_cop_number = j["expected_cop_number"].get<int>();
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

struct CorpusOptions {
  int k_max = 3;
  std::uint64_t genus_budget = 10'000'000;
  int guard_max_vertices = 10;
  CopOptions cops;
};

struct CorpusResult {
  std::string name;
  int n = 0;
  int edges = 0;
  std::optional<int> cop;
  std::optional<int> genus_computed;
  std::optional<int> genus;  // computed, else declared
  bool planar = false;
  std::size_t geodesics_checked = 0;
  BoundsReport bounds;
  std::vector<std::string> problems;
  bool pass() const { return problems.empty(); }
};

inline CorpusResult check_entry(const CorpusEntry& e, const CorpusOptions& opts = {}) {
  CorpusResult r;
  r.name = e.name;
  const Graph g = parse_graph6(e.graph6);
  r.n = g.n();
  r.edges = g.edge_count();
  if (!is_connected(g)) {
    r.problems.push_back("graph is not connected");
    return r;
  }
  try {
    r.cop = cop_number(g, opts.k_max, opts.cops);
  } catch (const GraphError& err) {
    r.problems.push_back(err.what());
  }
  if (r.cop && e.expected_cop_number && *r.cop != *e.expected_cop_number)
    r.problems.push_back("cop number " + std::to_string(*r.cop) + " but expected " +
                         std::to_string(*e.expected_cop_number));

  r.planar = is_planar(g);
  if (rotation_count(g) <= opts.genus_budget) r.genus_computed = genus_exact(g, opts.genus_budget);
  r.genus = r.genus_computed ? r.genus_computed : e.declared_genus;
  if (r.genus_computed && e.declared_genus && *r.genus_computed != *e.declared_genus)
    r.problems.push_back("genus " + std::to_string(*r.genus_computed) + " but declared " +
                         std::to_string(*e.declared_genus));
  if (r.genus && (*r.genus == 0) != r.planar) r.problems.push_back("genus disagrees with the planarity test");
  if (!r.genus) r.problems.push_back("genus unknown: too large to compute and not declared");

  if (r.cop && r.genus) {
    r.bounds = check_bounds(*r.genus, *r.cop);
    for (const auto& c : r.bounds.checks)
      if (!c.ok()) r.problems.push_back("bound " + c.name + " violated");
  }

  if (g.n() <= opts.guard_max_vertices) {
    for (const auto& p : all_geodesics(g)) {
      const auto audit = guard_geodesic(g, p).audit();
      ++r.geodesics_checked;
      if (!audit.ok()) r.problems.push_back("guarding failed: " + audit.failure);
    }
  }
  return r;
}

}  // namespace mcgame::graphs

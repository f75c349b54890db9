#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mcgame/arena.hpp"

namespace mcgame {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Ply& p) {
  ordered_json j;
  j["ply"] = p.ply;
  j["mover"] = p.mover;
  if (p.mover == "marker") j["mark"] = p.action;
  if (p.mover == "cutter") j["reply"] = p.action;
  j["value"] = p.value;
  j["genus"] = p.genus;
  j["potential"] = p.potential.str();
  j["canonical_key"] = p.canonical_key;
  return j;
}

inline Ply ply_from_json(const ordered_json& j) {
  Ply p;
  p.ply = j.at("ply").get<int>();
  p.mover = j.at("mover").get<std::string>();
  if (j.contains("mark")) p.action = j["mark"].get<std::string>();
  if (j.contains("reply")) p.action = j["reply"].get<std::string>();
  p.value = j.at("value").get<std::size_t>();
  p.genus = j.at("genus").get<int>();
  p.potential = Potential::parse(j.at("potential").get<std::string>());
  p.canonical_key = j.at("canonical_key").get<std::string>();
  return p;
}

/// JSON lines, one ply per line.
inline void write_trace(std::ostream& out, const std::vector<Ply>& plies) {
  for (const auto& p : plies) out << to_json(p).dump() << '\n';
}

inline std::vector<Ply> read_trace(std::istream& in) {
  std::vector<Ply> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(ply_from_json(ordered_json::parse(line)));
  return out;
}

inline ordered_json to_json(const SearchBudget& b) {
  ordered_json j;
  j["max_depth"] = b.max_depth;
  j["max_states"] = b.max_states;
  j["marker_sampling"] = b.sampled ? "random" : "exhaustive";
  if (b.sampled) {
    j["samples"] = b.samples;
    j["seed"] = b.seed;
  }
  j["memoize"] = b.memoize;
  j["legality"] = b.legality == Legality::reductions ? "reductions" : "value_increase";
  return j;
}

inline ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["g0"] = r.g0;
  j["mode"] = to_string(r.mode);
  j["verdict"] = to_string(r.verdict);
  j["bound"] = r.bound;
  j["max_value_seen"] = r.max_value_seen;
  j["states_explored"] = r.states_explored;
  j["max_depth_seen"] = r.max_depth_seen;
  if (r.exact_value) j["exact_value"] = *r.exact_value;
  j["terminal_plays"] = r.terminal_plays;
  if (r.mode == Mode::refined) {
    j["switch_to_cops"] = r.switch_to_cops;
    if (r.seed_potential) j["seed_potential"] = r.seed_potential->str();
  }
  if (r.mode == Mode::marker_bound || r.mode == Mode::refined) {
    j["max_active_sum"] = r.max_active_sum.str();
    j["transitions"] = r.transitions;
  }
  if (r.min_potential_after_preparation) j["min_potential_after_preparation"] = r.min_potential_after_preparation->str();
  if (r.verdict == Verdict::inconclusive) j["frontier"] = r.frontier;
  j["cutter"] = "restricted";
  j["budget"] = to_json(r.budget);
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (!r.witness.empty()) {
    j["witness"] = ordered_json::array();
    for (const auto& p : r.witness) j["witness"].push_back(to_json(p));
  }
  return j;
}

}  // namespace mcgame

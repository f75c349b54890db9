#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcgame/arena.hpp"
#include "mcgame/graphs/corpus.hpp"
#include "mcgame/json_io.hpp"

namespace {

using mcgame::ordered_json;
namespace gr = mcgame::graphs;

enum Exit { ok = 0, failed = 1, inconclusive = 2, usage = 64 };

struct Options {
  std::string command;
  int g0 = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  bool no_memo = false;
  std::string legality = "reductions";
  std::string marker = "strategy";
  std::string cutter = "strategy";
  std::string trace;
  std::string graph_path;
  std::string g6;
  int k_max = 3;
  std::string dir = "corpus";
  std::size_t budget_states = 20'000'000;
  std::string out;
  std::string format = "text";
};

ordered_json echo(const Options& o) {
  ordered_json j;
  j["command"] = o.command;
  if (o.command.rfind("verify", 0) == 0 || o.command == "exact-value" || o.command == "play") {
    j["g0"] = o.g0;
    j["legality"] = o.legality;
  }
  if (o.command == "verify-cutter") {
    j["sample"] = o.sample;
    j["seed"] = o.seed;
  }
  if (o.command == "exact-value") j["memoize"] = !o.no_memo;
  if (o.command == "play") {
    j["marker"] = o.marker;
    j["cutter"] = o.cutter;
    j["seed"] = o.seed;
    j["trace"] = o.trace;
  }
  if (o.command == "cop-number" || o.command == "genus") {
    if (!o.graph_path.empty()) j["graph"] = o.graph_path;
    if (!o.g6.empty()) j["g6"] = o.g6;
  }
  if (o.command == "cop-number") j["k_max"] = o.k_max;
  if (o.command == "check-corpus") {
    j["dir"] = o.dir;
    j["k_max"] = o.k_max;
  }
  j["budget_states"] = o.budget_states;
  j["format"] = o.format;
  j["out"] = o.out;
  return j;
}

mcgame::SearchBudget budget(const Options& o) {
  mcgame::SearchBudget b;
  b.max_states = o.budget_states;
  b.memoize = !o.no_memo;
  b.seed = o.seed;
  if (o.sample > 0) {
    b.sampled = true;
    b.samples = o.sample;
  }
  b.legality = o.legality == "value-increase" ? mcgame::Legality::value_increase : mcgame::Legality::reductions;
  return b;
}

int exit_for(mcgame::Verdict v) {
  switch (v) {
    case mcgame::Verdict::pass: return ok;
    case mcgame::Verdict::fail: return failed;
    case mcgame::Verdict::inconclusive: return inconclusive;
  }
  return failed;
}

std::string headline(const ordered_json& result) {
  if (result.contains("exact_value")) return result["exact_value"].dump();
  if (result.contains("cop_number")) return result["cop_number"].dump();
  if (result.contains("genus")) return result["genus"].dump();
  if (result.contains("verdict")) return result["verdict"].get<std::string>();
  return "";
}

void emit(const Options& o, const ordered_json& result) {
  std::ostringstream text;
  if (o.format == "json") {
    ordered_json doc;
    doc["result"] = result;
    doc["config"] = echo(o);
    text << doc.dump(2) << '\n';
  } else {
    text << headline(result) << '\n';
    for (const auto& [k, v] : result.items())
      if (k != "witness") text << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    text << "config:\n";
    const auto config = echo(o);
    for (const auto& [k, v] : config.items())
      text << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  if (o.out.empty()) {
    std::cout << text.str();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text.str();
}

gr::Graph load_graph(const Options& o) {
  if (!o.g6.empty()) return gr::parse_graph6(o.g6);
  std::ifstream in(o.graph_path);
  if (!in) throw std::invalid_argument("cannot read " + o.graph_path);
  std::string line;
  std::getline(in, line);
  return gr::parse_graph6(line);
}

int run(const Options& o) {
  using namespace mcgame;
  if ((o.command == "verify-refined" || (o.command == "play" && o.marker == "refined")) && o.g0 < 1)
    throw std::invalid_argument("the refined game needs --g0 >= 1");
  if (o.command == "verify-marker" || o.command == "verify-cutter" || o.command == "exact-value" ||
      o.command == "verify-refined") {
    VerificationReport r;
    if (o.command == "verify-marker") r = verify_marker_bound(o.g0, budget(o));
    if (o.command == "verify-cutter") r = verify_cutter_bound(o.g0, budget(o));
    if (o.command == "exact-value") r = exact_value(o.g0, budget(o));
    if (o.command == "verify-refined") r = verify_refined(o.g0, budget(o));
    emit(o, to_json(r));
    return exit_for(r.verdict);
  }
  if (o.command == "play") {
    const bool refined = o.marker == "refined";
    const auto marker = o.marker == "random" ? MarkerPolicy::random : MarkerPolicy::strategy;
    const auto cutter = o.cutter == "random" ? CutterPolicy::random
                        : o.cutter == "first" ? CutterPolicy::first
                                              : CutterPolicy::strategy;
    const auto plies = play(o.g0, marker, cutter, o.seed, refined, budget(o).legality);
    if (!o.trace.empty()) {
      std::ofstream f(o.trace);
      if (!f) throw std::runtime_error("cannot write trace " + o.trace);
      write_trace(f, plies);
    }
    ordered_json r;
    r["plies"] = plies.size();
    r["final_value"] = plies.back().value;
    r["final_genus"] = plies.back().genus;
    r["final_potential"] = plies.back().potential.str();
    emit(o, r);
    return ok;
  }
  if (o.command == "cop-number") {
    const auto g = load_graph(o);
    gr::CopOptions opts;
    opts.max_states = o.budget_states;
    ordered_json r;
    try {
      r["cop_number"] = gr::cop_number(g, o.k_max, opts);
    } catch (const gr::BudgetError& e) {
      r["error"] = e.what();
      emit(o, r);
      return inconclusive;
    }
    emit(o, r);
    return ok;
  }
  if (o.command == "genus") {
    const auto g = load_graph(o);
    ordered_json r;
    try {
      r["genus"] = gr::genus_exact(g, o.budget_states);
    } catch (const gr::BudgetError& e) {
      r["error"] = e.what();
      emit(o, r);
      return inconclusive;
    }
    r["planar"] = gr::is_planar(g);
    emit(o, r);
    return ok;
  }
  if (o.command == "check-corpus") {
    gr::CorpusOptions opts;
    opts.k_max = o.k_max;
    opts.cops.max_states = o.budget_states;
    ordered_json r;
    r["graphs"] = ordered_json::array();
    bool all = true;
    for (const auto& e : gr::load_corpus(o.dir)) {
      const auto c = gr::check_entry(e, opts);
      ordered_json j;
      j["name"] = c.name;
      j["n"] = c.n;
      j["edges"] = c.edges;
      if (c.cop) j["cop_number"] = *c.cop;
      if (c.genus) j["genus"] = *c.genus;
      j["genus_source"] = c.genus_computed ? "computed" : "declared";
      j["planar"] = c.planar;
      j["geodesics_checked"] = c.geodesics_checked;
      j["pass"] = c.pass();
      if (!c.pass()) j["problems"] = c.problems;
      all = all && c.pass();
      r["graphs"].push_back(j);
    }
    r["verdict"] = all ? "pass" : "fail";
    emit(o, r);
    return all ? ok : failed;
  }
  return usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marker-Cutter game verifier and cops-and-robbers toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget-states", o.budget_states, "State budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--legality", o.legality, "Restricted-Cutter legality test")
      ->check(CLI::IsMember({"reductions", "value-increase"}));

  auto game = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--g0", o.g0, "Initial genus")->required()->check(CLI::Range(0, 64));
    return sub;
  };
  game("verify-marker", "Check Marker's strategy against every restricted-Cutter reply");
  auto* vc = game("verify-cutter", "Check Cutter's potential strategy against Marker's marks");
  vc->add_option("--sample", o.sample, "Random Marker plays instead of exhaustive search");
  vc->add_option("--seed", o.seed, "Seed for sampled plays");
  auto* ev = game("exact-value", "Solve the game value exactly");
  ev->add_flag("--no-memo", o.no_memo, "Disable memoization");
  game("verify-refined", "Check the refined strategy from the seed state");
  auto* pl = game("play", "Play one game and record a trace");
  pl->add_option("--marker", o.marker)->check(CLI::IsMember({"strategy", "refined", "random"}));
  pl->add_option("--cutter", o.cutter)->check(CLI::IsMember({"strategy", "random", "first"}));
  pl->add_option("--trace", o.trace, "JSON-lines trace file");
  pl->add_option("--seed", o.seed);

  auto graph_input = [&](CLI::App* sub) {
    auto* path = sub->add_option("--graph", o.graph_path, "File whose first line is graph6");
    auto* g6 = sub->add_option("--g6", o.g6, "graph6 string");
    path->excludes(g6);
    sub->callback([&, path, g6] {
      if (path->count() + g6->count() == 0) throw CLI::RequiredError("--graph or --g6");
    });
  };
  auto* cn = app.add_subcommand("cop-number", "Exact cop number by retrograde analysis");
  graph_input(cn);
  cn->add_option("--k-max", o.k_max)->check(CLI::Range(1, 6));
  auto* gn = app.add_subcommand("genus", "Exact genus via rotation systems");
  graph_input(gn);
  auto* cc = app.add_subcommand("check-corpus", "Check every graph in a corpus directory");
  cc->add_option("--dir", o.dir);
  cc->add_option("--k-max", o.k_max)->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? ok : usage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    return run(o);
  } catch (const gr::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failed;
  }
}

// Plays Marker's strategy against Cutter's strategy, then checks a graph.
#include <iostream>

#include "mcgame/arena.hpp"
#include "mcgame/graphs/cops.hpp"
#include "mcgame/graphs/genus.hpp"
#include "mcgame/graphs/graph6.hpp"

int main() {
  using namespace mcgame;

  const int g0 = 3;
  for (const auto& p : play(g0, MarkerPolicy::strategy, CutterPolicy::strategy, 1))
    std::cout << p.ply << ' ' << p.mover << ' ' << p.action << "  v=" << p.value << " g=" << p.genus
              << " p=" << p.potential.str() << '\n';
  std::cout << "Marker guarantees " << marker_bound(g0) << ", Cutter reaches at least " << cutter_bound(g0)
            << '\n';

  const auto report = verify_marker_bound(g0);
  std::cout << "verify-marker g0=" << g0 << ": " << to_string(report.verdict) << " after "
            << report.states_explored << " states\n";

  const auto petersen = graphs::parse_graph6("IheA@GUAo");
  std::cout << "Petersen graph: cop number " << graphs::cop_number(petersen, 4) << ", genus "
            << graphs::genus_exact(petersen) << '\n';
}

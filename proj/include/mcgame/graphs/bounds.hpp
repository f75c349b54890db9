#pragma once

#include <string>
#include <vector>

namespace mcgame::graphs {

struct BoundCheck {
  std::string name;
  int cop = 0;
  int limit = 0;
  bool ok() const { return cop <= limit; }
};

struct BoundsReport {
  int genus = 0;
  int cop = 0;
  std::vector<BoundCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

/// Cop number against the genus bounds: ⌊4g/3 + 10/3⌋, ⌊3g/2⌋ + 3 and, for
/// genus 0 or 1, the exact value 3.
inline BoundsReport check_bounds(int genus, int cop) {
  BoundsReport r{genus, cop, {}};
  r.checks.push_back({"floor(4g/3+10/3)", cop, (4 * genus + 10) / 3});
  r.checks.push_back({"floor(3g/2)+3", cop, 3 * genus / 2 + 3});
  if (genus <= 1) r.checks.push_back({"genus<=1", cop, 3});
  return r;
}

}  // namespace mcgame::graphs

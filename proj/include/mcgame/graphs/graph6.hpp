#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mcgame/graphs/graph.hpp"

namespace mcgame::graphs {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr int graph6_max_vertices = 258047;

/// Decodes one graph6 line (an optional ">>graph6<<" prefix and trailing
/// newline are accepted).
inline Graph parse_graph6(const std::string& line) {
  std::size_t pos = 0, end = line.size();
  const std::string header = ">>graph6<<";
  if (line.compare(0, header.size(), header) == 0) pos = header.size();
  while (end > pos && (line[end - 1] == '\n' || line[end - 1] == '\r')) --end;

  auto byte = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("unexpected end of input", i);
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range", i);
    return c - 63;
  };

  int n = byte(pos);
  ++pos;
  if (n == 63) {
    if (pos < end && line[pos] == '~') throw ParseError("graphs this large are not supported", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
    if (n < 63) throw ParseError("long size header used for a small graph", pos - 3);
  }

  Graph g(n);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (end - pos != need)
    throw ParseError("expected " + std::to_string(need) + " adjacency bytes, found " + std::to_string(end - pos),
                     end - pos < need ? end : pos + need);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      const int b = byte(pos + k / 6);
      if (b >> (5 - k % 6) & 1) g.add_edge(u, v);
    }
  if (bits % 6 != 0) {
    const int last = byte(pos + need - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero padding bits", pos + need - 1);
  }
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.n();
  if (n > graph6_max_vertices) throw GraphError("graph too large for graph6");
  std::string out;
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(acc + 63);
        acc = used = 0;
      }
    }
  if (used) out += static_cast<char>((acc << (6 - used)) + 63);
  return out;
}

}  // namespace mcgame::graphs

#include "gainlap/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace gainlap {

namespace {

using Mask = std::uint32_t;

struct Searcher {
  int n;
  int k;
  const std::vector<Mask>& adjacency;
  std::vector<int> color;          // -1 = uncolored
  std::vector<Mask> neighborColors;  // bitmask of colors seen around a vertex

  Searcher(int n, int k, const std::vector<Mask>& adjacency)
      : n(n), k(k), adjacency(adjacency), color(static_cast<std::size_t>(n), -1),
        neighborColors(static_cast<std::size_t>(n), 0) {}

  // DSATUR order: highest saturation first, degree then index as tie-breaks.
  int pickVertex() const {
    int best = -1;
    int bestSat = -1;
    int bestDeg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = std::popcount(neighborColors[static_cast<std::size_t>(v)]);
      const int deg = std::popcount(adjacency[static_cast<std::size_t>(v)]);
      if (sat > bestSat || (sat == bestSat && deg > bestDeg)) {
        best = v;
        bestSat = sat;
        bestDeg = deg;
      }
    }
    return best;
  }

  bool solve(int colored, int maxUsed) {
    if (colored == n) return true;
    const int v = pickVertex();
    const Mask blocked = neighborColors[static_cast<std::size_t>(v)];
    // Allowing at most one fresh color per step discards symmetric
    // relabelings without losing any coloring.
    const int limit = std::min(k - 1, maxUsed + 1);
    for (int c = 0; c <= limit; ++c) {
      if (blocked & (Mask(1) << c)) continue;
      assign(v, c);
      if (solve(colored + 1, std::max(maxUsed, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  // Lexicographically least assignment: vertices in index order, colors in
  // increasing order, first full assignment wins.
  bool solveLexicographic(int v, int maxUsed) {
    if (v == n) return true;
    const Mask blocked = neighborColors[static_cast<std::size_t>(v)];
    const int limit = std::min(k - 1, maxUsed + 1);
    for (int c = 0; c <= limit; ++c) {
      if (blocked & (Mask(1) << c)) continue;
      assign(v, c);
      if (solveLexicographic(v + 1, std::max(maxUsed, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  void assign(int v, int c) {
    color[static_cast<std::size_t>(v)] = c;
    Mask nbrs = adjacency[static_cast<std::size_t>(v)];
    while (nbrs) {
      const int w = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      neighborColors[static_cast<std::size_t>(w)] |= Mask(1) << c;
    }
  }

  void unassign(int v, int /*c*/) {
    color[static_cast<std::size_t>(v)] = -1;
    Mask nbrs = adjacency[static_cast<std::size_t>(v)];
    while (nbrs) {
      const int w = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      Mask remaining = 0;
      Mask others = adjacency[static_cast<std::size_t>(w)];
      while (others) {
        const int x = std::countr_zero(others);
        others &= others - 1;
        if (color[static_cast<std::size_t>(x)] >= 0) {
          remaining |= Mask(1) << color[static_cast<std::size_t>(x)];
        }
      }
      neighborColors[static_cast<std::size_t>(w)] = remaining;
    }
  }
};

std::vector<Mask> adjacency_masks(const GainGraph& g) {
  std::vector<Mask> adjacency(static_cast<std::size_t>(g.order()), 0);
  for (const GainEdge& e : g.edges()) {
    adjacency[static_cast<std::size_t>(e.u)] |= Mask(1) << e.v;
    adjacency[static_cast<std::size_t>(e.v)] |= Mask(1) << e.u;
  }
  return adjacency;
}

}  // namespace

Coloring chromatic_number(const GainGraph& g) {
  const int n = g.order();
  if (n > kChromaticCap) {
    throw SizeCapError("chromatic_number: " + std::to_string(n) + " vertices exceeds cap " +
                       std::to_string(kChromaticCap) +
                       "; supply an upper bound for chi instead");
  }
  if (n == 0) return {0, {}};
  if (g.size() == 0) {
    Coloring c;
    c.chi = 1;
    c.classes.resize(1);
    for (int v = 0; v < n; ++v) c.classes[0].push_back(v);
    return c;
  }

  const std::vector<Mask> adjacency = adjacency_masks(g);
  int chi = 2;
  for (; chi < n; ++chi) {
    Searcher decision(n, chi, adjacency);
    if (decision.solve(0, -1)) break;
  }

  Searcher lex(n, chi, adjacency);
  lex.solveLexicographic(0, -1);

  Coloring result;
  result.chi = chi;
  result.classes.assign(static_cast<std::size_t>(chi), {});
  for (int v = 0; v < n; ++v) {
    result.classes[static_cast<std::size_t>(lex.color[static_cast<std::size_t>(v)])]
        .push_back(v);
  }
  return result;
}

std::optional<Bipartition> bipartition(const GainGraph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, gain] : g.neighbors(u)) {
        if (side[static_cast<std::size_t>(v)] < 0) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) {
    (side[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
  }
  return parts;
}

}  // namespace gainlap

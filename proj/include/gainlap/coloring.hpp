#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Exact backtracking is capped at this many vertices.
inline constexpr int kChromaticCap = 30;

// A minimal proper coloring of the underlying graph. Minimality of chi is
// certified by a failed (chi-1)-coloring search; the class assignment is the
// lexicographically least proper chi-coloring, so repeated calls agree.
struct Coloring {
  int chi = 0;
  std::vector<std::vector<int>> classes;  // chi independent sets, sorted
};

// Exact chromatic number by iterative deepening with DSATUR-ordered
// backtracking. Throws SizeCapError above kChromaticCap vertices.
Coloring chromatic_number(const GainGraph& g);

using Bipartition = std::pair<std::vector<int>, std::vector<int>>;

// The per-component-canonical 2-coloring when the underlying graph is
// bipartite (the smallest vertex of each component lands in the first
// part), or nullopt otherwise.
std::optional<Bipartition> bipartition(const GainGraph& g);

}  // namespace gainlap

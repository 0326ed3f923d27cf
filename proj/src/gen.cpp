#include "gainlap/gen.hpp"

#include <cmath>
#include <numbers>

namespace gainlap {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability " + std::to_string(p) + " outside [0,1]");
  }
}

}  // namespace

GainGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("erdos_renyi: need n >= 1");
  check_probability(p);
  SplitMix64 rng(seed);
  std::vector<GainEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.nextUniform() < p) edges.push_back({i, j, Complex(1.0, 0.0)});
    }
  }
  return GainGraph(n, std::move(edges));
}

GainGraph bipartite_erdos_renyi(int n1, int n2, double p, std::uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw InvalidArgument("bipartite_erdos_renyi: need n1, n2 >= 1");
  check_probability(p);
  SplitMix64 rng(seed);
  std::vector<GainEdge> edges;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (rng.nextUniform() < p) edges.push_back({i, n1 + j, Complex(1.0, 0.0)});
    }
  }
  return GainGraph(n1 + n2, std::move(edges));
}

GainGraph random_unit_gains(const GainGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges) {
    e.gain = std::polar(1.0, 2.0 * std::numbers::pi * rng.nextUniform());
  }
  return GainGraph(g.order(), std::move(edges));
}

GainGraph signed_k5_15() {
  // Sign pattern of the 5 x 15 block; rows are vertices 0..4, columns are
  // vertices 5..19.
  static constexpr int kSigns[5][15] = {
      {1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, 1},
      {1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 1},
      {1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, 1, -1, -1},
      {1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1},
      {1, 1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1},
  };
  std::vector<GainEdge> edges;
  edges.reserve(75);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 15; ++c) {
      edges.push_back({r, 5 + c, Complex(kSigns[r][c], 0.0)});
    }
  }
  return GainGraph(20, std::move(edges));
}

}  // namespace gainlap

#pragma once

#include <cstdint>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

// SplitMix64 with the standard finalizer constants. Chosen so generated
// instances are reproducible bit-for-bit in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double nextUniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// G(n, p): every unordered pair, visited in lexicographic order, is included
// when the next uniform draw is below p. All gains are 1.
GainGraph erdos_renyi(int n, double p, std::uint64_t seed);

// Bipartite G(n1, n2, p) on parts {0..n1-1} and {n1..n1+n2-1}; pairs visited
// in lexicographic order.
GainGraph bipartite_erdos_renyi(int n1, int n2, double p, std::uint64_t seed);

// Same edge set with fresh gains e^{2 pi i u}, one uniform u per stored edge
// in edge-list order.
GainGraph random_unit_gains(const GainGraph& g, std::uint64_t seed);

// The fixed signed complete bipartite K_{5,15}: 20 vertices, 75 edges of
// which 23 carry gain -1.
GainGraph signed_k5_15();

}  // namespace gainlap

#pragma once

#include <span>
#include <vector>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Hard caps for the exact searches; overridable with force.
inline constexpr int kFrustrationEdgeCap = 24;
inline constexpr int kFrustrationVertexCap = 16;

struct FrustrationResult {
  int value = 0;
  // Deleted edge indices (frustration_index) or vertex ids
  // (frustration_number); the lexicographically smallest minimum witness.
  std::vector<int> witness;
};

// Union-find over vertices carrying a unit gain potential per node, so that
// merging edges detects non-neutral cycles in amortized near-constant time.
class PotentialUnionFind {
 public:
  explicit PotentialUnionFind(int n);

  // Root of v plus the accumulated gain ratio zeta(v)/zeta(root).
  std::pair<int, Complex> find(int v);
  // Joins the endpoints under the constraint conj(zeta_u) gain zeta_v = 1.
  // Returns false when the edge closes a cycle whose gain is farther than
  // tol from 1.
  bool addEdge(int u, int v, const Complex& gain, double tol);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<Complex> ratio_;  // zeta(v)/zeta(parent(v))
};

// True when the graph minus the given edges (indices into g.edges()) is
// balanced. Equivalent to is_balanced on the reduced graph.
bool balance_oracle(const GainGraph& g, std::span<const int> removedEdges,
                    double tol = kNeutralityTol);

// Minimum number of edge deletions reaching balance, by exhaustive search in
// increasing cardinality (so the first success is provably minimal). Subsets
// that miss a known unbalanced cycle are pruned; the collection of such
// cycles grows lazily from failed balance checks. Capped at
// kFrustrationEdgeCap edges unless force is set.
FrustrationResult frustration_index(const GainGraph& g, bool force = false,
                                    double tol = kNeutralityTol);

// Minimum number of vertex deletions reaching balance; same search scheme
// over vertex subsets. Capped at kFrustrationVertexCap vertices unless
// force is set.
FrustrationResult frustration_number(const GainGraph& g, bool force = false,
                                     double tol = kNeutralityTol);

}  // namespace gainlap

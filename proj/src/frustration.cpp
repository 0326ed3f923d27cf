#include "gainlap/frustration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>

namespace gainlap {

PotentialUnionFind::PotentialUnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0),
      ratio_(static_cast<std::size_t>(n), Complex(1.0, 0.0)) {
  for (int v = 0; v < n; ++v) parent_[static_cast<std::size_t>(v)] = v;
}

std::pair<int, Complex> PotentialUnionFind::find(int v) {
  std::vector<int> path;
  int root = v;
  while (parent_[static_cast<std::size_t>(root)] != root) {
    path.push_back(root);
    root = parent_[static_cast<std::size_t>(root)];
  }
  // Rewrite every node on the path to point at the root with its full
  // accumulated ratio zeta(node)/zeta(root).
  Complex suffix(1.0, 0.0);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    suffix *= ratio_[static_cast<std::size_t>(*it)];
    ratio_[static_cast<std::size_t>(*it)] = suffix;
    parent_[static_cast<std::size_t>(*it)] = root;
  }
  return {root, path.empty() ? Complex(1.0, 0.0) : ratio_[static_cast<std::size_t>(v)]};
}

bool PotentialUnionFind::addEdge(int u, int v, const Complex& gain, double tol) {
  const auto [ru, wu] = find(u);
  const auto [rv, wv] = find(v);
  if (ru == rv) {
    return std::abs(std::conj(wu) * gain * wv - Complex(1.0, 0.0)) <= tol;
  }
  if (rank_[static_cast<std::size_t>(ru)] > rank_[static_cast<std::size_t>(rv)]) {
    parent_[static_cast<std::size_t>(rv)] = ru;
    ratio_[static_cast<std::size_t>(rv)] = std::conj(gain) * wu * std::conj(wv);
  } else {
    parent_[static_cast<std::size_t>(ru)] = rv;
    ratio_[static_cast<std::size_t>(ru)] = gain * wv * std::conj(wu);
    if (rank_[static_cast<std::size_t>(ru)] == rank_[static_cast<std::size_t>(rv)]) {
      rank_[static_cast<std::size_t>(rv)] += 1;
    }
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

bool oracle_over_kept(const GainGraph& g, Mask removedEdges, Mask removedVertices,
                      double tol) {
  PotentialUnionFind uf(g.order());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (removedEdges & (Mask(1) << i)) continue;
    const GainEdge& e = edges[i];
    if (removedVertices & (Mask(1) << e.u)) continue;
    if (removedVertices & (Mask(1) << e.v)) continue;
    if (!uf.addEdge(e.u, e.v, e.gain, tol)) return false;
  }
  return true;
}

struct UnbalancedCycle {
  Mask edgeMask = 0;
  Mask vertexMask = 0;
};

// BFS spanning forest over the kept edges; the first non-neutral non-tree
// edge yields its fundamental cycle.
std::optional<UnbalancedCycle> extract_unbalanced_cycle(const GainGraph& g,
                                                        Mask removedEdges,
                                                        Mask removedVertices, double tol) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parentEdge(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  Eigen::VectorXcd zeta = Eigen::VectorXcd::Ones(n);

  auto edgeKept = [&](int idx) { return !(removedEdges & (Mask(1) << idx)); };
  auto vertexKept = [&](int v) { return !(removedVertices & (Mask(1) << v)); };

  std::vector<int> treeFlag(g.edges().size(), 0);
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)] || !vertexKept(root)) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, gainUV] : g.neighbors(u)) {
        if (!vertexKept(v) || !edgeKept(g.edgeIndex(u, v))) continue;
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(v)] = u;
        parentEdge[static_cast<std::size_t>(v)] = g.edgeIndex(u, v);
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        zeta(v) = zeta(u) * std::conj(gainUV);
        treeFlag[static_cast<std::size_t>(g.edgeIndex(u, v))] = 1;
        queue.push_back(v);
      }
    }
  }

  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const GainEdge& e = g.edges()[i];
    if (!edgeKept(static_cast<int>(i)) || treeFlag[i]) continue;
    if (!vertexKept(e.u) || !vertexKept(e.v)) continue;
    const Complex switchedGain = std::conj(zeta(e.u)) * e.gain * zeta(e.v);
    if (std::abs(switchedGain - Complex(1.0, 0.0)) <= tol) continue;

    UnbalancedCycle cycle;
    cycle.edgeMask |= Mask(1) << i;
    int a = e.u;
    int b = e.v;
    cycle.vertexMask |= (Mask(1) << a) | (Mask(1) << b);
    auto lift = [&](int& x) {
      cycle.edgeMask |= Mask(1) << parentEdge[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
      cycle.vertexMask |= Mask(1) << x;
    };
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) lift(a);
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) lift(b);
    while (a != b) {
      lift(a);
      lift(b);
    }
    return cycle;
  }
  return std::nullopt;
}

// Ascending-lexicographic enumeration of t-subsets of {0,...,limit-1}.
template <typename Visit>
bool for_each_combination(int limit, int t, Visit visit) {
  std::vector<int> combo(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) combo[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(combo)) return true;
    int i = t - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == limit - t + i) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) {
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

FrustrationResult search(const GainGraph& g, bool deleteVertices, double tol) {
  const int limit = deleteVertices ? g.order() : g.size();
  std::vector<UnbalancedCycle> knownCycles;
  if (auto first = extract_unbalanced_cycle(g, 0, 0, tol)) {
    knownCycles.push_back(*first);
  } else {
    return {0, {}};
  }

  constexpr std::size_t kMaxStoredCycles = 256;
  FrustrationResult found;
  for (int t = 1; t <= limit; ++t) {
    const bool hit = for_each_combination(limit, t, [&](const std::vector<int>& combo) {
      Mask mask = 0;
      for (int idx : combo) mask |= Mask(1) << idx;
      for (const UnbalancedCycle& cycle : knownCycles) {
        const Mask touched = deleteVertices ? cycle.vertexMask : cycle.edgeMask;
        if ((touched & mask) == 0) return false;  // cannot reach balance
      }
      const Mask removedEdges = deleteVertices ? 0 : mask;
      const Mask removedVertices = deleteVertices ? mask : 0;
      if (oracle_over_kept(g, removedEdges, removedVertices, tol)) {
        found = {t, combo};
        return true;
      }
      if (knownCycles.size() < kMaxStoredCycles) {
        if (auto cycle = extract_unbalanced_cycle(g, removedEdges, removedVertices, tol)) {
          knownCycles.push_back(*cycle);
        }
      }
      return false;
    });
    if (hit) return found;
  }
  return {limit, {}};  // unreachable: deleting everything is balanced
}

}  // namespace

bool balance_oracle(const GainGraph& g, std::span<const int> removedEdges, double tol) {
  Mask mask = 0;
  for (int idx : removedEdges) {
    if (idx < 0 || idx >= g.size()) {
      throw InvalidArgument("balance_oracle: unknown edge index " + std::to_string(idx));
    }
    mask |= Mask(1) << idx;
  }
  return oracle_over_kept(g, mask, 0, tol);
}

FrustrationResult frustration_index(const GainGraph& g, bool force, double tol) {
  if (g.size() > kFrustrationEdgeCap && !force) {
    throw SizeCapError("frustration_index: " + std::to_string(g.size()) +
                       " edges exceeds cap " + std::to_string(kFrustrationEdgeCap) +
                       " (pass force to override); lambda_1 of the Laplacian "
                       "remains a valid lower-bound certificate");
  }
  if (g.size() > 64) {
    throw SizeCapError("frustration_index: exact search supports at most 64 edges");
  }
  return search(g, /*deleteVertices=*/false, tol);
}

FrustrationResult frustration_number(const GainGraph& g, bool force, double tol) {
  if (g.order() > kFrustrationVertexCap && !force) {
    throw SizeCapError("frustration_number: " + std::to_string(g.order()) +
                       " vertices exceeds cap " + std::to_string(kFrustrationVertexCap) +
                       " (pass force to override)");
  }
  if (g.order() > 64) {
    throw SizeCapError("frustration_number: exact search supports at most 64 vertices");
  }
  return search(g, /*deleteVertices=*/true, tol);
}

}  // namespace gainlap

#include "gainlap/balance.hpp"

#include <cmath>
#include <deque>

namespace gainlap {

Complex cycle_gain(const GainGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3 || cycle.front() != cycle.back()) {
    throw InvalidArgument("cycle_gain: sequence must be closed (v1 ... vl v1)");
  }
  Complex product(1.0, 0.0);
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[i + 1];
    if (!g.adjacent(u, v)) {
      throw InvalidArgument("cycle_gain: (" + std::to_string(u) + "," +
                            std::to_string(v) + ") is not an edge");
    }
    product *= g.gain(u, v);
  }
  return product;
}

BalanceResult is_balanced(const GainGraph& g, double tol) {
  const int n = g.order();
  Eigen::VectorXcd zeta = Eigen::VectorXcd::Ones(n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> treeEdges;

  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, gainUV] : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        // conj(zeta_u) * gain * zeta_v == 1 along tree edges
        zeta(v) = zeta(u) * std::conj(gainUV);
        treeEdges.emplace_back(u, v);
        queue.push_back(v);
      }
    }
  }

  std::vector<char> isTree(g.edges().size(), 0);
  for (const auto& [u, v] : treeEdges) {
    isTree[static_cast<std::size_t>(g.edgeIndex(u, v))] = 1;
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (isTree[i]) continue;
    const GainEdge& e = g.edges()[i];
    const Complex switchedGain = std::conj(zeta(e.u)) * e.gain * zeta(e.v);
    if (std::abs(switchedGain - Complex(1.0, 0.0)) > tol) {
      return {false, std::nullopt};
    }
  }
  return {true, SwitchingFunction(std::move(zeta))};
}

GainStats gain_stats(const GainGraph& g) {
  if (g.size() < 1) throw InvalidArgument("gain_stats: graph has no edges");
  GainStats s;
  s.m = g.size();
  for (const GainEdge& e : g.edges()) {
    s.a += 1.0 - e.gain.real();
    s.b += 1.0 - e.gain.imag();
  }
  s.a /= s.m;
  s.b /= s.m;
  return s;
}

double a_theta(const GainGraph& g, double theta) {
  if (g.size() < 1) throw InvalidArgument("a_theta: graph has no edges");
  const Complex rotation = std::polar(1.0, theta);
  double total = 0.0;
  for (const GainEdge& e : g.edges()) {
    total += 1.0 - (e.gain * rotation).real();
  }
  return total / g.size();
}

}  // namespace gainlap

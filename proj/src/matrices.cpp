#include "gainlap/matrices.hpp"

namespace gainlap {

Eigen::MatrixXcd adjacency_matrix(const GainGraph& g) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(g.order(), g.order());
  for (const GainEdge& e : g.edges()) {
    a(e.u, e.v) = e.gain;
    a(e.v, e.u) = std::conj(e.gain);
  }
  return a;
}

Eigen::MatrixXcd laplacian(const GainGraph& g) {
  Eigen::MatrixXcd l = -adjacency_matrix(g);
  for (int v = 0; v < g.order(); ++v) l(v, v) = Complex(g.degree(v), 0.0);
  return l;
}

Eigen::MatrixXd signless_laplacian(const GainGraph& g) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const GainEdge& e : g.edges()) {
    q(e.u, e.v) = 1.0;
    q(e.v, e.u) = 1.0;
  }
  for (int v = 0; v < g.order(); ++v) q(v, v) = g.degree(v);
  return q;
}

GainGraph switched(const GainGraph& g, const SwitchingFunction& zeta) {
  if (zeta.size() != g.order()) {
    throw InvalidArgument("switched: switching function length " +
                          std::to_string(zeta.size()) + " != vertex count " +
                          std::to_string(g.order()));
  }
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges) {
    e.gain = std::conj(zeta(e.u)) * e.gain * zeta(e.v);
  }
  return GainGraph(g.order(), std::move(edges));
}

}  // namespace gainlap

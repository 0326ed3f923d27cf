#pragma once

#include <Eigen/Core>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Hermitian gain adjacency matrix: entry (u,v) is the gain of u -> v.
Eigen::MatrixXcd adjacency_matrix(const GainGraph& g);

// Gain Laplacian: degree diagonal minus the gain adjacency.
// Hermitian and positive semidefinite.
Eigen::MatrixXcd laplacian(const GainGraph& g);

// Signless Laplacian of the underlying graph (degree diagonal plus 0/1
// adjacency); equals the gain Laplacian of the all-(-1) gain up to
// switching.
Eigen::MatrixXd signless_laplacian(const GainGraph& g);

// Gauge transformation: the new gain of u -> v is conj(zeta(u)) * gain * zeta(v).
// Leaves the adjacency and Laplacian spectra unchanged.
GainGraph switched(const GainGraph& g, const SwitchingFunction& zeta);

// Sum over edges of |x_u - gain_{uv} x_v|^2; equals x* L x.
template <typename Derived>
double quadratic_form(const GainGraph& g, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != g.order()) {
    throw InvalidArgument("quadratic_form: vector length " + std::to_string(x.size()) +
                          " != vertex count " + std::to_string(g.order()));
  }
  double total = 0.0;
  for (const GainEdge& e : g.edges()) {
    const Complex xu(x.derived()(e.u));
    const Complex xv(x.derived()(e.v));
    total += std::norm(xu - e.gain * xv);
  }
  return total;
}

}  // namespace gainlap

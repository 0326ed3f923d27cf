#pragma once

#include <optional>
#include <vector>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Product of edge gains along a closed walk v_1 ... v_l v_1, given as a
// vertex sequence whose first and last entries coincide. The result has
// unit modulus and its real part does not depend on the traversal
// direction. Throws InvalidArgument when the sequence is not closed or
// uses a non-edge.
Complex cycle_gain(const GainGraph& g, const std::vector<int>& cycle);

struct BalanceResult {
  bool balanced = false;
  // When balanced: a switching function that gauges every gain to 1.
  std::optional<SwitchingFunction> potential;
};

// A graph is balanced when every cycle gain is within tol of 1. Checked by
// assigning potentials along a spanning forest and verifying each non-tree
// edge; disconnected graphs are handled per component.
BalanceResult is_balanced(const GainGraph& g, double tol = kNeutralityTol);

// Edge-averaged gain deviations; a uses real parts, b imaginary parts.
// Both lie in [0, 2]. Not switching invariants.
struct GainStats {
  double a = 0.0;
  double b = 0.0;
  int m = 0;
};

GainStats gain_stats(const GainGraph& g);

// (1/m) * sum over edges of (1 - Re(gain * e^{i theta})).
// a_theta(g, 0) == gain_stats(g).a and a_theta(g, -pi/2) == gain_stats(g).b;
// in general a_theta - 1 == cos(theta) (a-1) - sin(theta) (b-1).
// Disconnected graphs contribute the edges of every component; isolated
// vertices do not enter.
double a_theta(const GainGraph& g, double theta);

}  // namespace gainlap

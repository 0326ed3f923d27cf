#pragma once

#include <Eigen/Core>
#include <optional>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Upper bounds for the largest gain Laplacian eigenvalue lambda_n. All of
// them depend only on the underlying graph, never on the gains.

struct DegreeProfile {
  Eigen::VectorXi d;   // vertex degrees
  Eigen::VectorXd m2;  // average 2-degree: mean degree over the neighborhood
};

DegreeProfile degree_profile(const GainGraph& g);

struct ClassicMaxBounds {
  double twiceMaxDegree = 0.0;   // 2 Delta
  double maxDegreePlusAvg2 = 0.0;  // max_i (d_i + m_i)
  double maxEdgeDegreeSum = 0.0;   // max over edges of d_i + d_j
  double edgeRatio = 0.0;  // max over edges of (d_i(d_i+m_i) + d_j(d_j+m_j))/(d_i+d_j)
};

// Requires at least one edge. Equality holds exactly when the gain is
// switching-equivalent to the all-(-1) signing.
ClassicMaxBounds classic_max_bounds(const GainGraph& g);

// Gershgorin bound after conjugating by an arbitrary invertible diagonal:
// max_i (d_i + sum over neighbors j of |c_j| / |c_i|). Requires a connected
// graph and nonzero entries.
double gershgorin_diag_bound(const GainGraph& g, const Eigen::VectorXcd& c);

// The three generalized 2-degree recurrences driving concrete diagonal
// choices. Initial conditions: M and N start at 0, L starts at l^0 = 0,
// l^1 = m_i; N subtracts a constant r in (0, 1) from every term.
enum class DegreeKind { M, N, L };

// max_i (d_i + x_i^k) for the chosen recurrence. Throws
// RecurrenceBreakdownError when a denominator d_i + x_i^{k-1} (- ...)
// becomes nonpositive, in which case the bound is undefined for this k.
double generalized_degree_bound(const GainGraph& g, DegreeKind kind, int k,
                                std::optional<double> r = std::nullopt);

struct ScanResult {
  int k = 0;
  double value = 0.0;
};

// Minimum of generalized_degree_bound over k in {1, ..., kmax}, skipping the
// ks past a recurrence breakdown. Throws when no k is valid.
ScanResult scan_k_min_bound(const GainGraph& g, DegreeKind kind, std::optional<double> r,
                            int kmax);

}  // namespace gainlap

#pragma once

#include <array>
#include <vector>

#include "gainlap/coloring.hpp"
#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Upper bounds for the smallest gain Laplacian eigenvalue lambda_1. Every
// bound here is sound for any chi at least the true chromatic number; the
// closed-form "optimal" variants are the minima of their parametric
// families.

// (2m/n) (a - ((a-1)(gamma^2+1) - 2 gamma (a_theta-1)) / (chi + gamma^2 - 1)),
// valid for every real gamma and angle theta.
double chromatic_gamma_theta_bound(const GainGraph& g, int chi, double gamma,
                                   double theta);

// Minimum of the theta = 0 family over gamma:
// (2m/n) a when a <= 1, else (2m/n) (1 - (a-1)/(chi-1)).
double chromatic_optimal_real_bound(const GainGraph& g, int chi);

// Minimum over (gamma, theta) jointly:
// (m/n) (a + 1 - (a-1)/(chi-1) - sqrt(chi^2 (a-1)^2 + 4 (chi-1)(b-1)^2) / (chi-1)).
// Never exceeds chromatic_optimal_real_bound.
double chromatic_optimal_complex_bound(const GainGraph& g, int chi);

// Bipartite family: (m/|V1|) ((gamma-1)^2 + 2 gamma a_theta) / (gamma^2 + |V2|/|V1|).
double bipartite_gamma_bound(const GainGraph& g, const Bipartition& parts, double gamma,
                             double theta);

// Minimum of the bipartite family over gamma: m/|V2| when a_theta = 1, else
// (m/2) (n - sqrt(n^2 - 4 a_theta (2 - a_theta) |V1||V2|)) / (|V1||V2|).
// Both part orderings are evaluated and the smaller (still sound) value is
// returned.
double bipartite_optimal_bound(const GainGraph& g, const Bipartition& parts, double theta);

struct DegreePairBounds {
  double b1 = 0.0;  // min over edges of (d_s + d_t - 2) / 2
  double b2 = 0.0;  // min over edges of (d_s + d_t - sqrt((d_s-d_t)^2 + 4)) / 2
  double b3 = 0.0;  // (delta + n - 1 - sqrt((n-1-delta)^2 + 4)) / 2, always < delta
};

// Requires a connected nonempty graph.
DegreePairBounds degree_pair_bounds(const GainGraph& g);

// Triangle s < t < r with the real part of its cycle gain.
struct TriangleTriple {
  int s = 0;
  int t = 0;
  int r = 0;
  double cosTheta = 1.0;
};

// Center s adjacent to both t and r (t < r), with t and r non-adjacent.
struct PathTriple {
  int s = 0;
  int t = 0;
  int r = 0;
};

std::vector<TriangleTriple> triangles(const GainGraph& g);
std::vector<PathTriple> path_triples(const GainGraph& g);

// Four bounds minimized over all triangles; requires a connected graph with
// at least one triangle.
std::array<double, 4> triangle_bounds(const GainGraph& g);

// The same four expressions with cos theta = 0, minimized over induced
// 2-paths; requires a connected graph with at least one PathTriple.
std::array<double, 4> path_bounds(const GainGraph& g);

struct AlgebraicFrustration {
  double lambda1 = 0.0;
  int nu = 0;
  int eps = 0;
  bool ok = false;  // lambda1 <= nu <= eps within 1e-8 slack
};

// lambda_1 as a simultaneous lower bound for the frustration number and
// index, computed exactly (subject to the frustration module's caps).
AlgebraicFrustration algebraic_frustration_check(const GainGraph& g, bool force = false,
                                                 double tol = kNeutralityTol);

}  // namespace gainlap

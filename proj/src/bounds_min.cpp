#include "gainlap/bounds_min.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gainlap/balance.hpp"
#include "gainlap/eigensolver.hpp"
#include "gainlap/frustration.hpp"
#include "gainlap/matrices.hpp"

namespace gainlap {

namespace {

void require_edges_and_chi(const GainGraph& g, int chi, const char* who) {
  if (g.size() < 1) throw InvalidArgument(std::string(who) + ": graph has no edges");
  if (chi < 2) {
    throw InvalidArgument(std::string(who) + ": chromatic number " + std::to_string(chi) +
                          " is impossible for a graph with edges");
  }
}

void require_connected_nonempty(const GainGraph& g, const char* who) {
  if (g.size() < 1) {
    throw HypothesisError(std::string(who) + ": graph has no edges");
  }
  if (!g.connected()) {
    throw HypothesisError(std::string(who) + ": stated for connected graphs only");
  }
}

// Validates that parts form a bipartition of g and returns (|V1|, |V2|).
std::pair<int, int> check_bipartition(const GainGraph& g, const Bipartition& parts,
                                      const char* who) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int v : parts.first) {
    if (v < 0 || v >= g.order() || side[static_cast<std::size_t>(v)] >= 0) {
      throw HypothesisError(std::string(who) + ": invalid bipartition");
    }
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (int v : parts.second) {
    if (v < 0 || v >= g.order() || side[static_cast<std::size_t>(v)] >= 0) {
      throw HypothesisError(std::string(who) + ": invalid bipartition");
    }
    side[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (side[static_cast<std::size_t>(v)] < 0) {
      throw HypothesisError(std::string(who) + ": bipartition misses vertex " +
                            std::to_string(v));
    }
  }
  for (const GainEdge& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
      throw HypothesisError(std::string(who) + ": edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") lies inside one part");
    }
  }
  return {static_cast<int>(parts.first.size()), static_cast<int>(parts.second.size())};
}

}  // namespace

double chromatic_gamma_theta_bound(const GainGraph& g, int chi, double gamma,
                                   double theta) {
  require_edges_and_chi(g, chi, "chromatic_gamma_theta_bound");
  const GainStats s = gain_stats(g);
  const double at = a_theta(g, theta);
  const double m = g.size();
  const double n = g.order();
  const double numer = (s.a - 1.0) * (gamma * gamma + 1.0) - 2.0 * gamma * (at - 1.0);
  return (2.0 * m / n) * (s.a - numer / (chi + gamma * gamma - 1.0));
}

double chromatic_optimal_real_bound(const GainGraph& g, int chi) {
  require_edges_and_chi(g, chi, "chromatic_optimal_real_bound");
  const GainStats s = gain_stats(g);
  const double m = g.size();
  const double n = g.order();
  if (s.a <= 1.0) return (2.0 * m / n) * s.a;
  return (2.0 * m / n) * (1.0 - (s.a - 1.0) / (chi - 1.0));
}

double chromatic_optimal_complex_bound(const GainGraph& g, int chi) {
  require_edges_and_chi(g, chi, "chromatic_optimal_complex_bound");
  const GainStats s = gain_stats(g);
  const double m = g.size();
  const double n = g.order();
  const double da = s.a - 1.0;
  const double db = s.b - 1.0;
  const double root = std::sqrt(chi * chi * da * da + 4.0 * (chi - 1.0) * db * db);
  return (m / n) * (s.a + 1.0 - da / (chi - 1.0) - root / (chi - 1.0));
}

double bipartite_gamma_bound(const GainGraph& g, const Bipartition& parts, double gamma,
                             double theta) {
  if (g.size() < 1) throw InvalidArgument("bipartite_gamma_bound: graph has no edges");
  const auto [p1, p2] = check_bipartition(g, parts, "bipartite_gamma_bound");
  const double at = a_theta(g, theta);
  const double m = g.size();
  const double c = static_cast<double>(p2) / p1;
  return (m / p1) * ((gamma - 1.0) * (gamma - 1.0) + 2.0 * gamma * at) /
         (gamma * gamma + c);
}

double bipartite_optimal_bound(const GainGraph& g, const Bipartition& parts, double theta) {
  if (g.size() < 1) throw InvalidArgument("bipartite_optimal_bound: graph has no edges");
  const auto [p1, p2] = check_bipartition(g, parts, "bipartite_optimal_bound");
  const double at = a_theta(g, theta);
  const double m = g.size();
  const double n = g.order();

  const auto oriented = [&](double v1, double v2) {
    if (std::abs(at - 1.0) <= 1e-12) return m / v2;
    const double radicand = std::max(0.0, n * n - 4.0 * at * (2.0 - at) * v1 * v2);
    return (m / 2.0) * (n - std::sqrt(radicand)) / (v1 * v2);
  };
  return std::min(oriented(p1, p2), oriented(p2, p1));
}

DegreePairBounds degree_pair_bounds(const GainGraph& g) {
  require_connected_nonempty(g, "degree_pair_bounds");
  DegreePairBounds out;
  out.b1 = std::numeric_limits<double>::infinity();
  out.b2 = std::numeric_limits<double>::infinity();
  for (const GainEdge& e : g.edges()) {
    const double ds = g.degree(e.u);
    const double dt = g.degree(e.v);
    out.b1 = std::min(out.b1, (ds + dt - 2.0) / 2.0);
    out.b2 = std::min(out.b2, (ds + dt - std::hypot(ds - dt, 2.0)) / 2.0);
  }
  const double delta = g.minDegree();
  const double n = g.order();
  out.b3 = (delta + n - 1.0 - std::hypot(n - 1.0 - delta, 2.0)) / 2.0;
  return out;
}

std::vector<TriangleTriple> triangles(const GainGraph& g) {
  std::vector<TriangleTriple> out;
  for (int s = 0; s < g.order(); ++s) {
    for (const auto& [t, gainST] : g.neighbors(s)) {
      if (t <= s) continue;
      for (const auto& [r, gainSR] : g.neighbors(s)) {
        if (r <= t || !g.adjacent(t, r)) continue;
        const Complex cycle = gainST * g.gain(t, r) * std::conj(gainSR);
        out.push_back({s, t, r, cycle.real()});
      }
    }
  }
  return out;
}

std::vector<PathTriple> path_triples(const GainGraph& g) {
  std::vector<PathTriple> out;
  for (int s = 0; s < g.order(); ++s) {
    const auto& nbrs = g.neighbors(s);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const int t = std::min(nbrs[i].first, nbrs[j].first);
        const int r = std::max(nbrs[i].first, nbrs[j].first);
        if (!g.adjacent(t, r)) out.push_back({s, t, r});
      }
    }
  }
  return out;
}

namespace {

// The four triple bounds share their shape; paths are the cosTheta = 0 case
// with the constant -4 / -2 terms adjusted per the statements.
std::array<double, 4> triple_bounds(double ds, double dt, double dr, double cosTheta,
                                    bool triangle) {
  const double beta = triangle ? cosTheta + 1.0 : 1.0;
  std::array<double, 4> b{};
  b[0] = (ds + dt + dr - 2.0 * cosTheta - 4.0) / 3.0;
  b[1] = (ds + dt + 2.0 * dr - 2.0 -
          std::sqrt(std::pow(ds + dt - 2.0 * dr - 2.0, 2) + 8.0 * beta * beta)) /
         4.0;
  b[2] = (ds + 2.0 * dt + dr - 2.0 -
          std::sqrt(std::pow(ds + dr - 2.0 * dt - 2.0, 2) + 8.0 * beta * beta)) /
         4.0;
  // Variant 4 sets b = c. The cosTheta sign inside the root must match the
  // minimized quadratic's coefficient; flipping it is not an attained
  // Rayleigh value and can dip below lambda_1.
  const double alpha4 = dt + dr - 2.0 * ds - 2.0 * cosTheta;
  b[3] = (2.0 * ds + dt + dr - 2.0 * cosTheta - std::sqrt(alpha4 * alpha4 + 32.0)) / 4.0;
  return b;
}

}  // namespace

std::array<double, 4> triangle_bounds(const GainGraph& g) {
  require_connected_nonempty(g, "triangle_bounds");
  const auto tris = triangles(g);
  if (tris.empty()) {
    throw HypothesisError("triangle_bounds: graph has no triangles (use path_bounds)");
  }
  std::array<double, 4> best;
  best.fill(std::numeric_limits<double>::infinity());
  for (const TriangleTriple& tri : tris) {
    const auto b = triple_bounds(g.degree(tri.s), g.degree(tri.t), g.degree(tri.r),
                                 tri.cosTheta, /*triangle=*/true);
    for (int i = 0; i < 4; ++i) best[static_cast<std::size_t>(i)] =
        std::min(best[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
  }
  return best;
}

std::array<double, 4> path_bounds(const GainGraph& g) {
  require_connected_nonempty(g, "path_bounds");
  const auto paths = path_triples(g);
  if (paths.empty()) {
    throw HypothesisError("path_bounds: graph has no induced 2-path");
  }
  std::array<double, 4> best;
  best.fill(std::numeric_limits<double>::infinity());
  for (const PathTriple& p : paths) {
    const auto b = triple_bounds(g.degree(p.s), g.degree(p.t), g.degree(p.r), 0.0,
                                 /*triangle=*/false);
    for (int i = 0; i < 4; ++i) best[static_cast<std::size_t>(i)] =
        std::min(best[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
  }
  return best;
}

AlgebraicFrustration algebraic_frustration_check(const GainGraph& g, bool force,
                                                 double tol) {
  AlgebraicFrustration out;
  out.lambda1 = g.order() == 0 ? 0.0
                               : HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(g))
                                     .spectrum()
                                     .lambda1();
  out.nu = frustration_number(g, force, tol).value;
  out.eps = frustration_index(g, force, tol).value;
  out.ok = out.lambda1 <= out.nu + 1e-8 && out.lambda1 <= out.eps + 1e-8 &&
           out.nu <= out.eps;
  return out;
}

}  // namespace gainlap

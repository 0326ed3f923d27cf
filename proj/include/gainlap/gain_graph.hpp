#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "gainlap/errors.hpp"

namespace gainlap {

using Complex = std::complex<double>;

// A cycle is neutral when its gain is within this distance of 1.
inline constexpr double kNeutralityTol = 1e-9;
// Gains are accepted and renormalized when their modulus is this close to 1.
inline constexpr double kUnitModulusTol = 1e-6;
// Elementwise conjugate-symmetry tolerance for Hermitian inputs.
inline constexpr double kHermitianTol = 1e-12;

// One undirected edge carrying the gain of its stored orientation u -> v.
// The opposite orientation carries the conjugate gain.
struct GainEdge {
  int u = 0;
  int v = 0;
  Complex gain{1.0, 0.0};
};

// Simple undirected graph with a unit-modulus complex gain per edge.
//
// Construction canonicalizes every edge to u < v (conjugating the gain when
// the endpoints are swapped), renormalizes gains whose modulus is within
// kUnitModulusTol of 1, and sorts the edge list lexicographically. Duplicate
// pairs, self-loops and far-from-unit gains are rejected. Instances are
// immutable afterwards, so all operations on them are safe to call
// concurrently.
class GainGraph {
 public:
  GainGraph() = default;
  GainGraph(int n, std::vector<GainEdge> edges);

  int order() const { return n_; }                            // vertex count n
  int size() const { return static_cast<int>(edges_.size()); }  // edge count m
  const std::vector<GainEdge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  // Gain of the orientation u -> v; throws InvalidArgument for non-edges.
  Complex gain(int u, int v) const;
  // Index into edges() of the undirected pair {u, v}, or -1.
  int edgeIndex(int u, int v) const;

  const std::vector<std::pair<int, Complex>>& neighbors(int v) const;
  const Eigen::VectorXi& degrees() const { return degrees_; }
  int degree(int v) const { return degrees_(v); }
  int maxDegree() const;
  int minDegree() const;
  bool connected() const;

 private:
  void checkVertex(int v, const char* what) const;

  int n_ = 0;
  std::vector<GainEdge> edges_;
  Eigen::VectorXi degrees_;
  // Per-vertex (neighbor, gain of this-vertex -> neighbor).
  std::vector<std::vector<std::pair<int, Complex>>> adjacency_;
  std::unordered_map<std::uint64_t, int> edgeIndex_;
};

// Unit-modulus diagonal used for switching. Values are validated to be
// within kNeutralityTol of unit modulus and then normalized exactly.
class SwitchingFunction {
 public:
  explicit SwitchingFunction(Eigen::VectorXcd values);

  int size() const { return static_cast<int>(values_.size()); }
  const Eigen::VectorXcd& values() const { return values_; }
  Complex operator()(int v) const { return values_(v); }

 private:
  Eigen::VectorXcd values_;
};

// --- GGF text format ---------------------------------------------------
//
//   # comment
//   gaingraph <n>
//   <u> <v> <re> <im>     one line per edge, 0-based vertices
//
// The writer emits 17 significant digits so round trips are exact.

GainGraph read_ggf(std::istream& in);
void write_ggf(std::ostream& out, const GainGraph& g);
GainGraph load_ggf(const std::string& path);
void save_ggf(const std::string& path, const GainGraph& g);
std::string to_ggf(const GainGraph& g);

}  // namespace gainlap

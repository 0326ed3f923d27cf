#include "gainlap/gain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gainlap {

namespace {

std::uint64_t pairKey(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

GainGraph::GainGraph(int n, std::vector<GainEdge> edges) : n_(n) {
  if (n < 0) throw InvalidArgument("GainGraph: negative vertex count");
  edges_.reserve(edges.size());
  for (GainEdge e : edges) {
    checkVertex(e.u, "edge endpoint");
    checkVertex(e.v, "edge endpoint");
    if (e.u == e.v) {
      throw InvalidArgument("GainGraph: self-loop at vertex " + std::to_string(e.u));
    }
    const double mod = std::abs(e.gain);
    if (std::abs(mod - 1.0) > kUnitModulusTol) {
      throw InvalidArgument("GainGraph: gain modulus " + std::to_string(mod) +
                            " on edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") is not 1");
    }
    e.gain /= mod;
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      e.gain = std::conj(e.gain);
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(), [](const GainEdge& a, const GainEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw InvalidArgument("GainGraph: duplicate edge (" + std::to_string(edges_[i].u) +
                            "," + std::to_string(edges_[i].v) + ")");
    }
  }

  degrees_ = Eigen::VectorXi::Zero(n_);
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  edgeIndex_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const GainEdge& e = edges_[i];
    degrees_(e.u) += 1;
    degrees_(e.v) += 1;
    adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.gain);
    adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, std::conj(e.gain));
    edgeIndex_.emplace(pairKey(e.u, e.v), static_cast<int>(i));
  }
}

void GainGraph::checkVertex(int v, const char* what) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument(std::string("GainGraph: ") + what + " " + std::to_string(v) +
                          " out of range [0," + std::to_string(n_) + ")");
  }
}

bool GainGraph::adjacent(int u, int v) const {
  return edgeIndex(u, v) >= 0;
}

int GainGraph::edgeIndex(int u, int v) const {
  checkVertex(u, "vertex");
  checkVertex(v, "vertex");
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = edgeIndex_.find(pairKey(u, v));
  return it == edgeIndex_.end() ? -1 : it->second;
}

Complex GainGraph::gain(int u, int v) const {
  const int idx = edgeIndex(u, v);
  if (idx < 0) {
    throw InvalidArgument("GainGraph: (" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not an edge");
  }
  const GainEdge& e = edges_[static_cast<std::size_t>(idx)];
  return u == e.u ? e.gain : std::conj(e.gain);
}

const std::vector<std::pair<int, Complex>>& GainGraph::neighbors(int v) const {
  checkVertex(v, "vertex");
  return adjacency_[static_cast<std::size_t>(v)];
}

int GainGraph::maxDegree() const {
  return n_ == 0 ? 0 : degrees_.maxCoeff();
}

int GainGraph::minDegree() const {
  return n_ == 0 ? 0 : degrees_.minCoeff();
}

bool GainGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, gain] : adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

SwitchingFunction::SwitchingFunction(Eigen::VectorXcd values) : values_(std::move(values)) {
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    const double mod = std::abs(values_(i));
    if (std::abs(mod - 1.0) > kNeutralityTol) {
      throw InvalidArgument("SwitchingFunction: value " + std::to_string(i) +
                            " has modulus " + std::to_string(mod));
    }
    values_(i) /= mod;
  }
}

GainGraph read_ggf(std::istream& in) {
  std::string line;
  int lineNo = 0;
  int n = -1;
  std::vector<GainEdge> edges;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      ls >> tag >> n;
      if (!ls || tag != "gaingraph" || n < 0) {
        throw ParseError("GGF line " + std::to_string(lineNo) +
                         ": expected 'gaingraph <n>'");
      }
      continue;
    }
    GainEdge e;
    double re = 0.0, im = 0.0;
    ls >> e.u >> e.v >> re >> im;
    if (!ls) {
      throw ParseError("GGF line " + std::to_string(lineNo) +
                       ": expected 'u v re im'");
    }
    e.gain = Complex(re, im);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("GGF: missing 'gaingraph <n>' header");
  try {
    return GainGraph(n, std::move(edges));
  } catch (const InvalidArgument& err) {
    throw ParseError(std::string("GGF: ") + err.what());
  }
}

void write_ggf(std::ostream& out, const GainGraph& g) {
  out << "gaingraph " << g.order() << "\n";
  char buf[128];
  for (const GainEdge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%d %d %.17g %.17g\n", e.u, e.v, e.gain.real(),
                  e.gain.imag());
    out << buf;
  }
}

GainGraph load_ggf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_ggf(in);
}

void save_ggf(const std::string& path, const GainGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_ggf(out, g);
}

std::string to_ggf(const GainGraph& g) {
  std::ostringstream out;
  write_ggf(out, g);
  return out.str();
}

}  // namespace gainlap

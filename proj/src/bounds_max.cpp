#include "gainlap/bounds_max.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gainlap {

namespace {

const char* kind_name(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::M: return "M";
    case DegreeKind::N: return "N";
    case DegreeKind::L: return "L";
  }
  return "?";
}

void require_connected(const GainGraph& g, const char* who) {
  if (!g.connected()) {
    throw HypothesisError(std::string(who) + ": stated for connected graphs only");
  }
}

// Advances x^{k-1} -> x^k for the chosen recurrence, where denom_i is the
// diagonal entry d_i + x_i^{k-1} (shifted by -r or -x^{k-2} as applicable).
Eigen::VectorXd advance(const GainGraph& g, const Eigen::VectorXd& denomShift, int step,
                        DegreeKind kind) {
  const int n = g.order();
  Eigen::VectorXd next(n);
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) == 0) {
      next(i) = 0.0;
      continue;
    }
    const double denom = g.degree(i) + denomShift(i);
    if (denom <= 0.0) {
      throw RecurrenceBreakdownError(
          std::string("generalized_degree_bound: kind ") + kind_name(kind) +
          " denominator " + std::to_string(denom) + " at vertex " + std::to_string(i) +
          ", step " + std::to_string(step));
    }
    double sum = 0.0;
    for (const auto& [j, gain] : g.neighbors(i)) sum += g.degree(j) + denomShift(j);
    next(i) = sum / denom;
  }
  return next;
}

// Runs the recurrence up to kmax, reporting max_i (d_i + x_i^k) for each k
// until done or breakdown.
template <typename Emit>
void run_recurrence(const GainGraph& g, DegreeKind kind, std::optional<double> r,
                    int kmax, Emit emit) {
  const int n = g.order();
  if (kind == DegreeKind::N) {
    if (!r || *r <= 0.0 || *r >= 1.0) {
      throw InvalidArgument("generalized_degree_bound: kind N needs r in (0,1)");
    }
  }
  const double shift = kind == DegreeKind::N ? *r : 0.0;

  Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);      // x^{k-2} for kind L
  Eigen::VectorXd current = Eigen::VectorXd::Zero(n);   // x^{k-1}
  if (kind == DegreeKind::L) {
    current = degree_profile(g).m2;  // l^1 = m_i
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, g.degree(i) + current(i));
    emit(1, bound);
  }

  const int start = kind == DegreeKind::L ? 2 : 1;
  for (int k = start; k <= kmax; ++k) {
    Eigen::VectorXd denomShift;
    if (kind == DegreeKind::L) {
      denomShift = current - prev;
    } else {
      denomShift = current.array() - shift;
    }
    Eigen::VectorXd next = advance(g, denomShift, k, kind);
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, g.degree(i) + next(i));
    emit(k, bound);
    prev = std::move(current);
    current = std::move(next);
  }
}

}  // namespace

DegreeProfile degree_profile(const GainGraph& g) {
  DegreeProfile profile;
  profile.d = g.degrees();
  profile.m2 = Eigen::VectorXd::Zero(g.order());
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(i) == 0) continue;
    double sum = 0.0;
    for (const auto& [j, gain] : g.neighbors(i)) sum += g.degree(j);
    profile.m2(i) = sum / g.degree(i);
  }
  return profile;
}

ClassicMaxBounds classic_max_bounds(const GainGraph& g) {
  if (g.size() < 1) throw InvalidArgument("classic_max_bounds: graph has no edges");
  const DegreeProfile profile = degree_profile(g);
  ClassicMaxBounds out;
  out.twiceMaxDegree = 2.0 * g.maxDegree();
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(i) == 0) continue;
    out.maxDegreePlusAvg2 = std::max(out.maxDegreePlusAvg2, profile.d(i) + profile.m2(i));
  }
  for (const GainEdge& e : g.edges()) {
    const double di = profile.d(e.u);
    const double dj = profile.d(e.v);
    out.maxEdgeDegreeSum = std::max(out.maxEdgeDegreeSum, di + dj);
    const double ratio =
        (di * (di + profile.m2(e.u)) + dj * (dj + profile.m2(e.v))) / (di + dj);
    out.edgeRatio = std::max(out.edgeRatio, ratio);
  }
  return out;
}

double gershgorin_diag_bound(const GainGraph& g, const Eigen::VectorXcd& c) {
  if (c.size() != g.order()) {
    throw InvalidArgument("gershgorin_diag_bound: diagonal length " +
                          std::to_string(c.size()) + " != vertex count " +
                          std::to_string(g.order()));
  }
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (std::abs(c(i)) == 0.0) {
      throw InvalidArgument("gershgorin_diag_bound: zero diagonal entry at " +
                            std::to_string(i));
    }
  }
  require_connected(g, "gershgorin_diag_bound");
  double bound = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    double row = g.degree(i);
    for (const auto& [j, gain] : g.neighbors(i)) row += std::abs(c(j)) / std::abs(c(i));
    bound = std::max(bound, row);
  }
  return bound;
}

double generalized_degree_bound(const GainGraph& g, DegreeKind kind, int k,
                                std::optional<double> r) {
  if (k < 1) throw InvalidArgument("generalized_degree_bound: k must be >= 1");
  require_connected(g, "generalized_degree_bound");
  if (g.size() == 0) return 0.0;
  double result = 0.0;
  run_recurrence(g, kind, r, k, [&](int step, double bound) {
    if (step == k) result = bound;
  });
  return result;
}

ScanResult scan_k_min_bound(const GainGraph& g, DegreeKind kind, std::optional<double> r,
                            int kmax) {
  if (kmax < 1) throw InvalidArgument("scan_k_min_bound: kmax must be >= 1");
  require_connected(g, "scan_k_min_bound");
  if (g.size() == 0) return {1, 0.0};
  ScanResult best{0, std::numeric_limits<double>::infinity()};
  try {
    run_recurrence(g, kind, r, kmax, [&](int step, double bound) {
      if (bound < best.value) best = {step, bound};
    });
  } catch (const RecurrenceBreakdownError&) {
    // Later ks are undefined once the recurrence breaks; keep what we have.
  }
  if (best.k == 0) {
    throw RecurrenceBreakdownError("scan_k_min_bound: recurrence broke down at k = 1");
  }
  return best;
}

}  // namespace gainlap

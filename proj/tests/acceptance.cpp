// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria and tolerances are pinned in code; run via ctest or
// directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gainlap/balance.hpp"
#include "gainlap/bounds_max.hpp"
#include "gainlap/bounds_min.hpp"
#include "gainlap/coloring.hpp"
#include "gainlap/eigensolver.hpp"
#include "gainlap/frustration.hpp"
#include "gainlap/gen.hpp"
#include "gainlap/matrices.hpp"
#include "gainlap/power_bounds.hpp"
#include "gainlap/report.hpp"

using namespace gainlap;

namespace {

constexpr double kPi = 3.141592653589793;

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "\n    failed: " << what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& name, double budgetSeconds,
               const std::function<void(Checker&)>& body) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail << "\n    exception: " << e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budgetSeconds > 0.0 && elapsed >= budgetSeconds) {
    check.ok = false;
    check.detail << "\n    runtime " << elapsed << "s exceeds budget " << budgetSeconds
                 << "s";
  }
  std::printf("[%s] criterion %d: %s (%.2fs)%s\n", check.ok ? "PASS" : "FAIL", number,
              name.c_str(), elapsed, check.detail.str().c_str());
  if (!check.ok) ++failures;
}

double lambda1_of(const GainGraph& g) {
  return HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(g)).spectrum().lambda1();
}

GainGraph sweep_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = 4 + static_cast<int>(rng.next() % 7);
  const double p = 0.3 + 0.5 * rng.nextUniform();
  return random_unit_gains(erdos_renyi(n, p, rng.next()), rng.next());
}

GainGraph without_edges(const GainGraph& g, const std::vector<int>& removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.size()), 0);
  for (int idx : removed) drop[static_cast<std::size_t>(idx)] = 1;
  std::vector<GainEdge> kept;
  for (int i = 0; i < g.size(); ++i) {
    if (!drop[static_cast<std::size_t>(i)]) kept.push_back(g.edges()[static_cast<std::size_t>(i)]);
  }
  return GainGraph(g.order(), kept);
}

GainGraph without_vertices(const GainGraph& g, const std::vector<int>& removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (int v : removed) drop[static_cast<std::size_t>(v)] = 1;
  std::vector<GainEdge> kept;
  for (const GainEdge& e : g.edges()) {
    if (!drop[static_cast<std::size_t>(e.u)] && !drop[static_cast<std::size_t>(e.v)]) {
      kept.push_back(e);
    }
  }
  return GainGraph(g.order(), kept);
}

void criterion1(Checker& check) {
  const GainGraph g = signed_k5_15();
  const auto parts = bipartition(g);
  check.require(parts.has_value(), "K_{5,15} is bipartite");
  const BoundReport t = table1_bipartite(g, *parts);
  const auto value = [&](const std::string& name) {
    for (const BoundRow& r : t.rows) {
      if (r.name == name && r.value) return *r.value;
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  check.require(std::abs(value("lambda_1") - 3.597) <= 0.001, "lambda_1 = 3.597");
  check.require(std::abs(value("a") - 0.613) <= 0.001, "a = 0.613");
  check.require(std::abs(value("(2m/n) a") - 4.600) <= 0.001, "(2m/n) a = 4.600");
  check.require(std::abs(value("bipartite optimal, theta = 0") - 3.982) <= 0.001,
                "bipartite optimal at theta = 0 = 3.982");
  check.require(value("b") == 1.0, "b = 1.000 exactly");
  check.require(value("(2m/n) b") == 7.5, "(2m/n) b = 7.500 exactly");
  check.require(std::abs(value("bipartite optimal, theta = -pi/2") - 5.000) <= 0.001,
                "bipartite optimal at theta = -pi/2 = 5.000");
}

void criterion2(Checker& check) {
  const GainGraph tri(3, {{0, 1, Complex(1.0)}, {0, 2, Complex(1.0)}, {1, 2, Complex(-1.0)}});
  const Spectrum triSpec = HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(tri)).spectrum();
  check.require(std::abs(triSpec.lambda1() - 1.0) <= 1e-9, "triangle lambda_1 = 1");
  check.require(frustration_number(tri).value == 1, "triangle nu = 1");
  check.require(frustration_index(tri).value == 1, "triangle eps = 1");
  check.require(degree_pair_bounds(tri).b2 == 1.0, "degree pair (ii) = 1");
  check.require(triangle_bounds(tri)[3] == 1.0, "triangle bound (4) = 1");

  const GainGraph k3m(3,
                      {{0, 1, Complex(-1.0)}, {0, 2, Complex(-1.0)}, {1, 2, Complex(-1.0)}});
  const Spectrum k3Spec = HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(k3m)).spectrum();
  check.require(chromatic_optimal_real_bound(k3m, 3) == 1.0,
                "(K3,-) chromatic optimal real bound = 1");
  check.require(std::abs(k3Spec.lambda1() - 1.0) <= 1e-9, "(K3,-) lambda_1 = 1");
  check.require(classic_max_bounds(k3m).twiceMaxDegree == 4.0, "(K3,-) 2 Delta = 4");
  check.require(std::abs(k3Spec.lambdaN() - 4.0) <= 1e-9, "(K3,-) lambda_n = 4");
}

void criterion3(Checker& check) {
  SplitMix64 diagRng(314159);
  int connectedCount = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const GainGraph g = sweep_instance(seed);
    const Spectrum s = HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(g)).spectrum();
    const double l1 = s.lambda1();
    const double ln = s.lambdaN();
    check.require(l1 >= -1e-9, "PSD: lambda_1 >= -1e-9 (seed " + std::to_string(seed) + ")");

    const double signless =
        HermitianEigenSolver<Eigen::MatrixXd>(signless_laplacian(g)).spectrum().lambdaN();
    check.require(ln <= signless + 1e-8, "lambda_n <= lambda_n(-)");

    if (g.size() < 1) continue;

    const int chi = chromatic_number(g).chi;
    check.require(chromatic_optimal_real_bound(g, chi) >= l1 - 1e-8,
                  "chromatic real bound soundness");
    check.require(chromatic_optimal_complex_bound(g, chi) >= l1 - 1e-8,
                  "chromatic complex bound soundness");
    if (const auto parts = bipartition(g)) {
      for (double theta : {0.0, -kPi / 2}) {
        check.require(bipartite_optimal_bound(g, *parts, theta) >= l1 - 1e-8,
                      "bipartite bound soundness");
      }
    }

    const ClassicMaxBounds classic = classic_max_bounds(g);
    check.require(classic.twiceMaxDegree >= ln - 1e-8, "2 Delta soundness");
    check.require(classic.maxDegreePlusAvg2 >= ln - 1e-8, "max d+m soundness");
    check.require(classic.maxEdgeDegreeSum >= ln - 1e-8, "max d_i+d_j soundness");
    check.require(classic.edgeRatio >= ln - 1e-8, "ratio bound soundness");

    if (!g.connected()) continue;
    ++connectedCount;
    check.require(g.maxDegree() + 1.0 <= ln + 1e-8, "Delta + 1 <= lambda_n");

    const DegreePairBounds dp = degree_pair_bounds(g);
    check.require(dp.b1 >= l1 - 1e-8 && dp.b2 >= l1 - 1e-8 && dp.b3 >= l1 - 1e-8,
                  "degree pair soundness");
    if (!triangles(g).empty()) {
      for (double b : triangle_bounds(g)) {
        check.require(b >= l1 - 1e-8, "triangle bound soundness");
      }
    }
    if (!path_triples(g).empty()) {
      for (double b : path_bounds(g)) {
        check.require(b >= l1 - 1e-8, "path bound soundness");
      }
    }

    Eigen::VectorXcd c(g.order());
    for (int i = 0; i < g.order(); ++i) {
      c(i) = std::polar(0.2 + 2.0 * diagRng.nextUniform(),
                        2.0 * kPi * diagRng.nextUniform());
    }
    check.require(gershgorin_diag_bound(g, c) >= ln - 1e-8, "gershgorin soundness");
    for (DegreeKind kind : {DegreeKind::M, DegreeKind::N, DegreeKind::L}) {
      const auto r = kind == DegreeKind::N ? std::optional<double>(0.99) : std::nullopt;
      check.require(scan_k_min_bound(g, kind, r, 100).value >= ln - 1e-8,
                    "generalized degree scan soundness");
    }
  }
  check.require(connectedCount >= 300, "enough connected instances in the sweep");
}

void criterion4(Checker& check) {
  long totalGraphs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const unsigned pairCount = static_cast<unsigned>(pairs.size());
    for (unsigned present = 0; present < (1u << pairCount); ++present) {
      std::vector<std::pair<int, int>> chosen;
      for (unsigned i = 0; i < pairCount; ++i) {
        if (present & (1u << i)) chosen.push_back(pairs[i]);
      }
      for (unsigned signs = 0; signs < (1u << chosen.size()); ++signs) {
        std::vector<GainEdge> edges;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          const double sign = (signs & (1u << i)) ? -1.0 : 1.0;
          edges.push_back({chosen[i].first, chosen[i].second, Complex(sign, 0.0)});
        }
        const GainGraph g(n, edges);
        ++totalGraphs;
        const double l1 = g.size() == 0 ? 0.0 : lambda1_of(g);
        const FrustrationResult nu = frustration_number(g);
        const FrustrationResult eps = frustration_index(g);
        const bool balanced = is_balanced(g).balanced;
        if (!(l1 <= nu.value + 1e-8) || nu.value > eps.value ||
            (eps.value == 0) != balanced ||
            !is_balanced(without_edges(g, eps.witness)).balanced ||
            !is_balanced(without_vertices(g, nu.witness)).balanced) {
          check.require(false, "exhaustive check at n = " + std::to_string(n) +
                                   " pattern " + std::to_string(present) + "/" +
                                   std::to_string(signs));
          return;
        }
      }
    }
  }
  check.require(totalGraphs == 1 + 3 + 27 + 729 + 59049,
                "enumerated all sign patterns up to n = 5");
}

void criterion5(Checker& check) {
  int tested = 0;
  for (std::uint64_t seed = 1; tested < 20 && seed < 4000; ++seed) {
    SplitMix64 rng(seed * 7919);
    const int n = 6 + static_cast<int>(rng.next() % 7);  // 6..12
    const double p = 0.4 + 0.4 * rng.nextUniform();
    const GainGraph g =
        random_unit_gains(erdos_renyi(n, p, rng.next()), rng.next());
    if (!g.connected() || g.size() < g.order()) continue;
    const Eigen::MatrixXcd lap = laplacian(g);
    const Spectrum s = HermitianEigenSolver<Eigen::MatrixXcd>(lap).spectrum();
    if (s.lambda1() < 1e-6 * s.lambdaN()) continue;  // effectively balanced
    ++tested;

    const double diag = diag_power_bound(lap, 256);
    const double trace = trace_power_bound(lap, 256);
    const double inverse = inverse_diag_power_bound(lap, 256);
    check.require(std::isfinite(diag) && std::isfinite(trace) && std::isfinite(inverse),
                  "scaled powers stay finite");
    check.require(std::abs(diag - s.lambdaN()) <= 0.02 * s.lambdaN(),
                  "diag power within 2% of lambda_n");
    check.require(std::abs(trace - s.lambdaN()) <= 0.02 * s.lambdaN(),
                  "trace power within 2% of lambda_n");
    check.require(std::abs(inverse - s.lambda1()) <= 0.02 * s.lambda1(),
                  "inverse diag power within 2% of lambda_1");
  }
  check.require(tested == 20, "found 20 usable instances");
}

void criterion6(Checker& check) {
  SplitMix64 rng(2718281);
  for (int trial = 0; trial < 50; ++trial) {
    GainGraph g = sweep_instance(9000 + static_cast<std::uint64_t>(trial));
    if (g.size() < 1) continue;
    const int chi = chromatic_number(g).chi;
    const double realOpt = chromatic_optimal_real_bound(g, chi);
    for (int i = 0; i < 200; ++i) {
      const double gamma = -10.0 + 20.0 * rng.nextUniform();
      if (realOpt > chromatic_gamma_theta_bound(g, chi, gamma, 0.0) + 1e-9) {
        check.require(false, "real closed form above the gamma family");
        return;
      }
    }
    const double complexOpt = chromatic_optimal_complex_bound(g, chi);
    double gridMin = std::numeric_limits<double>::infinity();
    for (int gi = 0; gi <= 120; ++gi) {
      const double gamma = -15.0 + 0.25 * gi;
      for (int ti = 0; ti < 48; ++ti) {
        gridMin =
            std::min(gridMin, chromatic_gamma_theta_bound(g, chi, gamma, kPi * ti / 24.0));
      }
    }
    if (complexOpt > gridMin + 1e-6) {
      check.require(false, "complex closed form above the (gamma, theta) grid");
      return;
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    GainGraph g = bipartite_erdos_renyi(3 + trial % 4, 4 + trial % 5, 0.6,
                                        500 + static_cast<std::uint64_t>(trial));
    if (g.size() < 1) continue;
    g = random_unit_gains(g, 900 + static_cast<std::uint64_t>(trial));
    const auto parts = bipartition(g);
    for (double theta : {0.0, -kPi / 2, 1.1}) {
      const double opt = bipartite_optimal_bound(g, *parts, theta);
      double gridMin = std::numeric_limits<double>::infinity();
      for (int gi = 0; gi <= 6000; ++gi) {
        const double gamma = -60.0 + 0.02 * gi;
        gridMin = std::min(gridMin, bipartite_gamma_bound(g, *parts, gamma, theta));
      }
      if (opt > gridMin + 1e-6) {
        check.require(false, "bipartite closed form above the gamma grid");
        return;
      }
    }
  }
}

void criterion7(Checker& check) {
  SplitMix64 rng(1618033);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GainGraph g = sweep_instance(seed + 40);
    if (g.size() < 1) continue;
    const Eigen::MatrixXcd lap = laplacian(g);

    for (int trial = 0; trial < 100; ++trial) {
      Eigen::VectorXcd x(g.order());
      for (int i = 0; i < g.order(); ++i) {
        x(i) = Complex(2.0 * rng.nextUniform() - 1.0, 2.0 * rng.nextUniform() - 1.0);
      }
      const double direct = quadratic_form(g, x);
      const double viaMatrix = (x.adjoint() * lap * x)(0).real();
      const double scale = std::max({1.0, std::abs(direct), std::abs(viaMatrix)});
      if (std::abs(direct - viaMatrix) > 1e-10 * scale) {
        check.require(false, "quadratic form identity");
        return;
      }
    }

    const GainStats stats = gain_stats(g);
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = 2.0 * kPi * rng.nextUniform();
      const double predicted =
          1.0 + std::cos(theta) * (stats.a - 1.0) - std::sin(theta) * (stats.b - 1.0);
      if (std::abs(a_theta(g, theta) - predicted) > 1e-12) {
        check.require(false, "a_theta rotation identity");
        return;
      }
    }

    Eigen::VectorXcd zeta(g.order());
    for (int i = 0; i < g.order(); ++i) {
      zeta(i) = std::polar(1.0, 2.0 * kPi * rng.nextUniform());
    }
    const GainGraph h = switched(g, SwitchingFunction(zeta));
    const Spectrum sg = HermitianEigenSolver<Eigen::MatrixXcd>(lap).spectrum();
    const Spectrum sh = HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(h)).spectrum();
    if ((sg.values - sh.values).cwiseAbs().maxCoeff() > 1e-9) {
      check.require(false, "switching invariance of the spectrum");
      return;
    }
  }
}

}  // namespace

int main() {
  criterion(1, "signed K_{5,15} reproduces the printed bipartite column", 1.0, criterion1);
  criterion(2, "equality witnesses are attained exactly", 0.0, criterion2);
  criterion(3, "soundness sweep over 500 seeded random gain graphs", 60.0, criterion3);
  criterion(4, "exhaustive frustration oracle up to n = 5", 120.0, criterion4);
  criterion(5, "power bounds converge within 2% at k = 256", 30.0, criterion5);
  criterion(6, "closed forms match their parametric grid minima", 0.0, criterion6);
  criterion(7, "algebraic identities hold at tight tolerances", 0.0, criterion7);
  if (failures > 0) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gainlap/bounds_max.hpp"
#include "gainlap/eigensolver.hpp"
#include "gainlap/gen.hpp"
#include "gainlap/matrices.hpp"
#include "test_support.hpp"

using namespace gainlap;
using gainlap::testing::make_graph;

namespace {

double lambdaN_of(const GainGraph& g) {
  return eigenvalues(laplacian(g)).lambdaN();
}

}  // namespace

TEST_CASE("classic bounds with the (K3,-) equality case") {
  const GainGraph g = testing::k3_minus();
  const ClassicMaxBounds b = classic_max_bounds(g);
  CHECK(b.twiceMaxDegree == 4.0);
  CHECK(b.maxDegreePlusAvg2 == 4.0);
  CHECK(b.maxEdgeDegreeSum == 4.0);
  CHECK(b.edgeRatio == 4.0);
  CHECK(lambdaN_of(g) == doctest::Approx(4.0).epsilon(1e-11));  // equality at (G,-)

  CHECK(classic_max_bounds(testing::k2()).maxEdgeDegreeSum == 2.0);
  CHECK_THROWS_AS(classic_max_bounds(GainGraph(3, {})), InvalidArgument);
}

TEST_CASE("classic bounds are sound and obey the usual orderings") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const GainGraph g = testing::random_connected_gain_graph(seed);
    const double lambdaN = lambdaN_of(g);
    const ClassicMaxBounds b = classic_max_bounds(g);
    CHECK(b.twiceMaxDegree >= lambdaN - 1e-8);
    CHECK(b.maxDegreePlusAvg2 >= lambdaN - 1e-8);
    CHECK(b.maxEdgeDegreeSum >= lambdaN - 1e-8);
    CHECK(b.edgeRatio >= lambdaN - 1e-8);
    CHECK(b.maxDegreePlusAvg2 <= b.twiceMaxDegree + 1e-12);
    CHECK(b.edgeRatio <= b.maxEdgeDegreeSum + 1e-12);
  }
}

TEST_CASE("lambda_n(gain) <= lambda_n(signless) and Delta + 1 below lambda_n") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GainGraph g = testing::random_connected_gain_graph(seed);
    const double lambdaN = lambdaN_of(g);
    const double signless =
        HermitianEigenSolver<Eigen::MatrixXd>(signless_laplacian(g)).spectrum().lambdaN();
    CHECK(lambdaN <= signless + 1e-8);
    CHECK(g.maxDegree() + 1.0 <= lambdaN + 1e-8);
  }
}

TEST_CASE("every max bound ignores the gains") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GainGraph g = testing::random_connected_gain_graph(seed);
    const GainGraph regauged = random_unit_gains(g, seed + 555);
    const ClassicMaxBounds a = classic_max_bounds(g);
    const ClassicMaxBounds b = classic_max_bounds(regauged);
    CHECK(a.twiceMaxDegree == b.twiceMaxDegree);
    CHECK(a.maxDegreePlusAvg2 == b.maxDegreePlusAvg2);
    CHECK(a.maxEdgeDegreeSum == b.maxEdgeDegreeSum);
    CHECK(a.edgeRatio == b.edgeRatio);
    CHECK(generalized_degree_bound(g, DegreeKind::M, 3) ==
          generalized_degree_bound(regauged, DegreeKind::M, 3));
  }
}

TEST_CASE("gershgorin diagonal bound") {
  const GainGraph g = testing::random_connected_gain_graph(4);
  SUBCASE("all-ones diagonal reduces to 2 Delta") {
    CHECK(gershgorin_diag_bound(g, Eigen::VectorXcd::Ones(g.order())) ==
          doctest::Approx(2.0 * g.maxDegree()).epsilon(1e-12));
  }
  SUBCASE("degree diagonal reduces to max d_i + m_i") {
    Eigen::VectorXcd c(g.order());
    for (int i = 0; i < g.order(); ++i) c(i) = Complex(g.degree(i), 0.0);
    CHECK(gershgorin_diag_bound(g, c) ==
          doctest::Approx(classic_max_bounds(g).maxDegreePlusAvg2).epsilon(1e-12));
  }
  SUBCASE("random nonzero complex diagonals stay above lambda_n") {
    SplitMix64 rng(9);
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const GainGraph h = testing::random_connected_gain_graph(seed);
      Eigen::VectorXcd c(h.order());
      for (int i = 0; i < h.order(); ++i) {
        c(i) = std::polar(0.1 + 3.0 * rng.nextUniform(),
                          6.283185307179586 * rng.nextUniform());
      }
      CHECK(gershgorin_diag_bound(h, c) >= lambdaN_of(h) - 1e-8);
    }
  }
  SUBCASE("errors") {
    Eigen::VectorXcd c = Eigen::VectorXcd::Ones(g.order());
    c(1) = Complex(0.0);
    CHECK_THROWS_AS(gershgorin_diag_bound(g, c), InvalidArgument);
    CHECK_THROWS_AS(
        gershgorin_diag_bound(make_graph(4, {{0, 1}, {2, 3}}), Eigen::VectorXcd::Ones(4)),
        HypothesisError);
  }
}

TEST_CASE("generalized degree recurrences") {
  SUBCASE("kind M at k = 1 is the classic max d_i + m_i") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const GainGraph g = testing::random_connected_gain_graph(seed);
      CHECK(generalized_degree_bound(g, DegreeKind::M, 1) ==
            doctest::Approx(classic_max_bounds(g).maxDegreePlusAvg2).epsilon(1e-12));
      CHECK(generalized_degree_bound(g, DegreeKind::L, 1) ==
            doctest::Approx(classic_max_bounds(g).maxDegreePlusAvg2).epsilon(1e-12));
    }
  }
  SUBCASE("kind N with r = 0.5, k = 1 on K3 gives 4") {
    const GainGraph k3 = erdos_renyi(3, 1.0, 1);
    CHECK(generalized_degree_bound(k3, DegreeKind::N, 1, 0.5) ==
          doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("soundness across kinds and depths") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GainGraph g = testing::random_connected_gain_graph(seed);
      const double lambdaN = lambdaN_of(g);
      for (int k = 1; k <= 6; ++k) {
        CHECK(generalized_degree_bound(g, DegreeKind::M, k) >= lambdaN - 1e-8);
        CHECK(generalized_degree_bound(g, DegreeKind::N, k, 0.99) >= lambdaN - 1e-8);
        try {
          const double l = generalized_degree_bound(g, DegreeKind::L, k);
          CHECK(l >= lambdaN - 1e-8);
        } catch (const RecurrenceBreakdownError&) {
          // undefined for this k; nothing to assert
        }
      }
    }
  }
  SUBCASE("parameter validation") {
    const GainGraph g = testing::random_connected_gain_graph(2);
    CHECK_THROWS_AS(generalized_degree_bound(g, DegreeKind::M, 0), InvalidArgument);
    CHECK_THROWS_AS(generalized_degree_bound(g, DegreeKind::N, 2), InvalidArgument);
    CHECK_THROWS_AS(generalized_degree_bound(g, DegreeKind::N, 2, 1.5), InvalidArgument);
    CHECK_THROWS_AS(
        generalized_degree_bound(make_graph(4, {{0, 1}, {2, 3}}), DegreeKind::M, 1),
        HypothesisError);
  }
  SUBCASE("the L recurrence breaks down on the 4-star at k = 3") {
    const GainGraph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(generalized_degree_bound(star, DegreeKind::L, 2) >= lambdaN_of(star) - 1e-8);
    CHECK_THROWS_AS(generalized_degree_bound(star, DegreeKind::L, 3),
                    RecurrenceBreakdownError);
  }
}

TEST_CASE("k scans") {
  SUBCASE("kind M on a regular graph is constant in k") {
    const GainGraph k3 = erdos_renyi(3, 1.0, 1);
    const ScanResult scan = scan_k_min_bound(k3, DegreeKind::M, std::nullopt, 50);
    CHECK(scan.k == 1);
    CHECK(scan.value == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("scans stay sound and skip broken ks") {
    const GainGraph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const ScanResult scan = scan_k_min_bound(star, DegreeKind::L, std::nullopt, 100);
    CHECK(scan.k <= 2);  // k >= 3 breaks down
    CHECK(scan.value >= lambdaN_of(star) - 1e-8);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GainGraph g = testing::random_connected_gain_graph(seed);
      const double lambdaN = lambdaN_of(g);
      for (DegreeKind kind : {DegreeKind::M, DegreeKind::N, DegreeKind::L}) {
        const ScanResult s = scan_k_min_bound(
            g, kind, kind == DegreeKind::N ? std::optional<double>(0.99) : std::nullopt,
            100);
        CHECK(s.value >= lambdaN - 1e-8);
        CHECK(s.k >= 1);
        CHECK(s.k <= 100);
      }
    }
  }
  SUBCASE("the N scan with r = 0.99 refines the M scan on an irregular graph") {
    const GainGraph g = testing::random_connected_gain_graph(12);
    const double mScan = scan_k_min_bound(g, DegreeKind::M, std::nullopt, 100).value;
    const double nScan = scan_k_min_bound(g, DegreeKind::N, 0.99, 100).value;
    CHECK(nScan <= mScan + 1e-9);
  }
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gainlap/coloring.hpp"
#include "gainlap/gain_graph.hpp"

namespace gainlap {

enum class RowKind {
  Reference,     // the eigenvalue itself
  Stat,          // gain statistic listed for context, not a bound
  Lambda1Upper,  // upper bound on lambda_1
  LambdaNLower,  // lower bound on lambda_n
  LambdaNUpper,  // upper bound on lambda_n
};

struct BoundRow {
  std::string name;
  std::string formula;
  RowKind kind = RowKind::Stat;
  std::optional<double> value;  // empty = not applicable
  std::optional<int> k;         // iteration depth when relevant
  std::string note;             // why a row is n/a
  bool best = false;            // tightest bound of its kind in this report
};

struct BoundReport {
  std::string graphLabel;
  double lambda1 = 0.0;
  double lambdaN = 0.0;
  std::vector<BoundRow> rows;
};

// Throws std::logic_error when any row violates its bound direction beyond
// 1e-8 slack against the reference eigenvalues; that state indicates an
// implementation bug, never valid output.
void validate(const BoundReport& report);

// Bipartite lambda_1 comparison: the statistics a and b, the (2m/n)-scaled
// bounds, and the optimal bipartite bound at theta = 0 and theta = -pi/2.
BoundReport table1_bipartite(const GainGraph& g, const Bipartition& parts);

// General lambda_1 comparison on a connected graph: gain statistics, the
// chromatic bounds, degree-pair bounds, and the four triangle and path
// bounds (rendered n/a where their hypotheses fail).
BoundReport table2_lambda1(const GainGraph& g);

// lambda_n comparison on a connected graph: Delta+1 and the two convergent
// power bounds as lower bounds; the classic bounds, generalized 2-degree
// scans and signless Laplacian as upper bounds.
BoundReport table3_lambdaN(const GainGraph& g, double r = 0.99, int kmax = 100);

enum class ReportFormat { Markdown, Csv, Json };

// Markdown prints 3 decimals (table precision), CSV 12 decimals, JSON full
// precision. The best upper and lower bounds are marked in every format.
std::string render(const BoundReport& report, ReportFormat format);

}  // namespace gainlap

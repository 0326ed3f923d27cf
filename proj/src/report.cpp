#include "gainlap/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gainlap/balance.hpp"
#include "gainlap/bounds_max.hpp"
#include "gainlap/bounds_min.hpp"
#include "gainlap/eigensolver.hpp"
#include "gainlap/matrices.hpp"
#include "gainlap/power_bounds.hpp"

namespace gainlap {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

Spectrum solve(const GainGraph& g) {
  return HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(g)).spectrum();
}

void mark_best(BoundReport& report) {
  const auto markMin = [&](RowKind kind) {
    double best = std::numeric_limits<double>::infinity();
    for (const BoundRow& row : report.rows) {
      if (row.kind == kind && row.value) best = std::min(best, *row.value);
    }
    for (BoundRow& row : report.rows) {
      if (row.kind == kind && row.value && *row.value <= best) row.best = true;
    }
  };
  const auto markMax = [&](RowKind kind) {
    double best = -std::numeric_limits<double>::infinity();
    for (const BoundRow& row : report.rows) {
      if (row.kind == kind && row.value) best = std::max(best, *row.value);
    }
    for (BoundRow& row : report.rows) {
      if (row.kind == kind && row.value && *row.value >= best) row.best = true;
    }
  };
  markMin(RowKind::Lambda1Upper);
  markMin(RowKind::LambdaNUpper);
  markMax(RowKind::LambdaNLower);
}

}  // namespace

void validate(const BoundReport& report) {
  const auto slack = [](double reference) { return 1e-8 * std::max(1.0, std::abs(reference)); };
  for (const BoundRow& row : report.rows) {
    if (!row.value) continue;
    bool sound = true;
    switch (row.kind) {
      case RowKind::Lambda1Upper:
        sound = *row.value >= report.lambda1 - slack(report.lambda1);
        break;
      case RowKind::LambdaNUpper:
        sound = *row.value >= report.lambdaN - slack(report.lambdaN);
        break;
      case RowKind::LambdaNLower:
        sound = *row.value <= report.lambdaN + slack(report.lambdaN);
        break;
      case RowKind::Reference:
      case RowKind::Stat:
        break;
    }
    if (!sound) {
      throw std::logic_error("BoundReport: row '" + row.name + "' = " +
                             std::to_string(*row.value) +
                             " violates its direction against lambda_1 = " +
                             std::to_string(report.lambda1) + ", lambda_n = " +
                             std::to_string(report.lambdaN));
    }
  }
}

BoundReport table1_bipartite(const GainGraph& g, const Bipartition& parts) {
  if (g.size() < 1) throw HypothesisError("table1_bipartite: graph has no edges");
  const Spectrum spectrum = solve(g);
  const GainStats stats = gain_stats(g);
  const double m = g.size();
  const double n = g.order();
  constexpr double kHalfPi = 1.5707963267948966;

  BoundReport report;
  report.graphLabel = "bipartite lambda_1 bounds";
  report.lambda1 = spectrum.lambda1();
  report.lambdaN = spectrum.lambdaN();
  report.rows = {
      {"lambda_1", "smallest Laplacian eigenvalue", RowKind::Reference, spectrum.lambda1(),
       {}, "", false},
      {"a", "mean of 1 - Re(gain) over edges", RowKind::Stat, stats.a, {}, "", false},
      {"(2m/n) a", "scaled real gain deviation", RowKind::Lambda1Upper,
       (2.0 * m / n) * stats.a, {}, "", false},
      {"bipartite optimal, theta = 0",
       "min over gamma of the bipartite Rayleigh family at theta = 0",
       RowKind::Lambda1Upper, bipartite_optimal_bound(g, parts, 0.0), {}, "", false},
      {"b", "mean of 1 - Im(gain) over edges", RowKind::Stat, stats.b, {}, "", false},
      {"(2m/n) b", "scaled imaginary gain deviation", RowKind::Lambda1Upper,
       (2.0 * m / n) * stats.b, {}, "", false},
      {"bipartite optimal, theta = -pi/2",
       "min over gamma of the bipartite Rayleigh family at theta = -pi/2",
       RowKind::Lambda1Upper, bipartite_optimal_bound(g, parts, -kHalfPi), {}, "", false},
  };
  mark_best(report);
  validate(report);
  return report;
}

BoundReport table2_lambda1(const GainGraph& g) {
  if (g.size() < 1) throw HypothesisError("table2_lambda1: graph has no edges");
  if (!g.connected()) throw HypothesisError("table2_lambda1: graph must be connected");
  const Spectrum spectrum = solve(g);
  const GainStats stats = gain_stats(g);
  const double m = g.size();
  const double n = g.order();

  BoundReport report;
  report.graphLabel = "lambda_1 bounds";
  report.lambda1 = spectrum.lambda1();
  report.lambdaN = spectrum.lambdaN();
  report.rows.push_back({"lambda_1", "smallest Laplacian eigenvalue", RowKind::Reference,
                         spectrum.lambda1(), {}, "", false});
  report.rows.push_back(
      {"a", "mean of 1 - Re(gain) over edges", RowKind::Stat, stats.a, {}, "", false});
  report.rows.push_back(
      {"b", "mean of 1 - Im(gain) over edges", RowKind::Stat, stats.b, {}, "", false});

  BoundRow scaledA{"(2m/n) a", "scaled real gain deviation", RowKind::Lambda1Upper,
                   (2.0 * m / n) * stats.a, {}, "", false};
  BoundRow chromOpt{"chromatic optimal",
                    "min over (gamma, theta) of the chromatic Rayleigh family",
                    RowKind::Lambda1Upper, {}, {}, "", false};
  try {
    const Coloring coloring = chromatic_number(g);
    chromOpt.value = chromatic_optimal_complex_bound(g, coloring.chi);
  } catch (const SizeCapError& err) {
    chromOpt.note = err.what();
  }
  report.rows.push_back(scaledA);
  report.rows.push_back(chromOpt);

  const DegreePairBounds pairs = degree_pair_bounds(g);
  report.rows.push_back({"degree pair (i)", "min over edges of (d_s + d_t - 2)/2",
                         RowKind::Lambda1Upper, pairs.b1, {}, "", false});
  report.rows.push_back({"degree pair (ii)",
                         "min over edges of (d_s + d_t - sqrt((d_s-d_t)^2 + 4))/2",
                         RowKind::Lambda1Upper, pairs.b2, {}, "", false});

  static const char* kTriangleNames[4] = {"triangle (1)", "triangle (2)", "triangle (3)",
                                          "triangle (4)"};
  static const char* kPathNames[4] = {"path (1)", "path (2)", "path (3)", "path (4)"};
  try {
    const auto tb = triangle_bounds(g);
    for (int i = 0; i < 4; ++i) {
      report.rows.push_back({kTriangleNames[i], "min over triangles, variant " +
                                 std::to_string(i + 1),
                             RowKind::Lambda1Upper, tb[static_cast<std::size_t>(i)], {}, "",
                             false});
    }
  } catch (const HypothesisError& err) {
    for (int i = 0; i < 4; ++i) {
      report.rows.push_back({kTriangleNames[i], "min over triangles, variant " +
                                 std::to_string(i + 1),
                             RowKind::Lambda1Upper, {}, {}, err.what(), false});
    }
  }
  try {
    const auto pb = path_bounds(g);
    for (int i = 0; i < 4; ++i) {
      report.rows.push_back({kPathNames[i], "min over induced 2-paths, variant " +
                                 std::to_string(i + 1),
                             RowKind::Lambda1Upper, pb[static_cast<std::size_t>(i)], {}, "",
                             false});
    }
  } catch (const HypothesisError& err) {
    for (int i = 0; i < 4; ++i) {
      report.rows.push_back({kPathNames[i], "min over induced 2-paths, variant " +
                                 std::to_string(i + 1),
                             RowKind::Lambda1Upper, {}, {}, err.what(), false});
    }
  }
  mark_best(report);
  validate(report);
  return report;
}

BoundReport table3_lambdaN(const GainGraph& g, double r, int kmax) {
  if (g.size() < 1) throw HypothesisError("table3_lambdaN: graph has no edges");
  if (!g.connected()) throw HypothesisError("table3_lambdaN: graph must be connected");
  if (kmax < 1) throw InvalidArgument("table3_lambdaN: kmax must be >= 1");
  const Spectrum spectrum = solve(g);
  const Eigen::MatrixXcd lap = laplacian(g);
  const double deltaPlusOne = g.maxDegree() + 1.0;

  BoundReport report;
  report.graphLabel = "lambda_n bounds";
  report.lambda1 = spectrum.lambda1();
  report.lambdaN = spectrum.lambdaN();
  report.rows.push_back({"lambda_n", "largest Laplacian eigenvalue", RowKind::Reference,
                         spectrum.lambdaN(), {}, "", false});
  report.rows.push_back({"Delta + 1", "max degree plus one", RowKind::LambdaNLower,
                         deltaPlusOne, {}, "", false});

  // First k at which each convergent power bound matches or exceeds Delta+1.
  const auto firstBeating = [&](auto&& bound) -> std::pair<std::optional<int>, double> {
    for (int k = 1; k <= kmax; ++k) {
      const double value = bound(k);
      if (value >= deltaPlusOne - 1e-9) return {k, value};
    }
    return {std::nullopt, 0.0};
  };
  const auto diag = firstBeating([&](int k) { return diag_power_bound(lap, k); });
  BoundRow diagRow{"diagonal power", "(max_i (L^k)_ii)^(1/k), first k reaching Delta+1",
                   RowKind::LambdaNLower, {}, {}, "", false};
  if (diag.first) {
    diagRow.value = diag.second;
    diagRow.k = *diag.first;
  } else {
    diagRow.note = "no k <= " + std::to_string(kmax) + " reaches Delta+1";
  }
  report.rows.push_back(diagRow);

  const auto trace = firstBeating([&](int k) { return trace_power_bound(lap, k); });
  BoundRow traceRow{"trace power", "trace-moment bound, first k reaching Delta+1",
                    RowKind::LambdaNLower, {}, {}, "", false};
  if (trace.first) {
    traceRow.value = trace.second;
    traceRow.k = *trace.first;
  } else {
    traceRow.note = "no k <= " + std::to_string(kmax) + " reaches Delta+1";
  }
  report.rows.push_back(traceRow);

  const Spectrum signless =
      HermitianEigenSolver<Eigen::MatrixXd>(signless_laplacian(g)).spectrum();
  report.rows.push_back({"lambda_n(-)", "largest signless Laplacian eigenvalue",
                         RowKind::LambdaNUpper, signless.lambdaN(), {}, "", false});

  const ClassicMaxBounds classic = classic_max_bounds(g);
  report.rows.push_back({"2 Delta", "twice the max degree", RowKind::LambdaNUpper,
                         classic.twiceMaxDegree, {}, "", false});
  report.rows.push_back({"max d_i + d_j", "max over edges of the degree sum",
                         RowKind::LambdaNUpper, classic.maxEdgeDegreeSum, {}, "", false});
  report.rows.push_back({"max d_i + m_i", "max degree plus average 2-degree",
                         RowKind::LambdaNUpper, classic.maxDegreePlusAvg2, {}, "", false});

  const auto scanRow = [&](const std::string& name, DegreeKind kind,
                           std::optional<double> rr) -> BoundRow {
    BoundRow row{name, "min over k of max_i (d_i + x_i^k)", RowKind::LambdaNUpper, {}, {},
                 "", false};
    try {
      const ScanResult scan = scan_k_min_bound(g, kind, rr, kmax);
      row.value = scan.value;
      row.k = scan.k;
    } catch (const HypothesisError& err) {
      row.note = err.what();
    }
    return row;
  };
  report.rows.push_back(scanRow("max d_i + m_i^k", DegreeKind::M, std::nullopt));
  report.rows.push_back(
      scanRow("max d_i + n_i^k (r = " + fixed(r, 3) + ")", DegreeKind::N, r));
  report.rows.push_back(scanRow("max d_i + l_i^k", DegreeKind::L, std::nullopt));

  report.rows.push_back({"degree ratio",
                         "max over edges of (d_i(d_i+m_i) + d_j(d_j+m_j))/(d_i+d_j)",
                         RowKind::LambdaNUpper, classic.edgeRatio, {}, "", false});
  mark_best(report);
  validate(report);
  return report;
}

namespace {

const char* kind_label(RowKind kind) {
  switch (kind) {
    case RowKind::Reference: return "reference";
    case RowKind::Stat: return "stat";
    case RowKind::Lambda1Upper: return "upper bound on lambda_1";
    case RowKind::LambdaNLower: return "lower bound on lambda_n";
    case RowKind::LambdaNUpper: return "upper bound on lambda_n";
  }
  return "?";
}

std::string render_markdown(const BoundReport& report) {
  std::ostringstream out;
  out << "# " << report.graphLabel << "\n\n";
  out << "| bound | formula | kind | value | k |\n";
  out << "|---|---|---|---:|---:|\n";
  for (const BoundRow& row : report.rows) {
    out << "| " << row.name << " | " << row.formula << " | " << kind_label(row.kind)
        << " | ";
    if (row.value) {
      if (row.best) {
        out << "**" << fixed(*row.value, 3) << "**";
      } else {
        out << fixed(*row.value, 3);
      }
    } else {
      out << "n/a";
    }
    out << " | " << (row.k ? std::to_string(*row.k) : "") << " |\n";
  }
  for (const BoundRow& row : report.rows) {
    if (!row.value && !row.note.empty()) {
      out << "\n- " << row.name << ": " << row.note;
    }
  }
  out << "\n";
  return out.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "bound,formula,kind,value,k,best,note\n";
  for (const BoundRow& row : report.rows) {
    out << csv_escape(row.name) << ',' << csv_escape(row.formula) << ','
        << csv_escape(kind_label(row.kind)) << ',';
    if (row.value) out << fixed(*row.value, 12);
    out << ',';
    if (row.k) out << *row.k;
    out << ',' << (row.best ? "1" : "0") << ',' << csv_escape(row.note) << "\n";
  }
  return out.str();
}

std::string render_json(const BoundReport& report) {
  nlohmann::json doc;
  doc["graph"] = report.graphLabel;
  doc["lambda_1"] = report.lambda1;
  doc["lambda_n"] = report.lambdaN;
  doc["rows"] = nlohmann::json::array();
  for (const BoundRow& row : report.rows) {
    nlohmann::json r;
    r["bound"] = row.name;
    r["formula"] = row.formula;
    r["kind"] = kind_label(row.kind);
    if (row.value) r["value"] = *row.value;
    if (row.k) r["k"] = *row.k;
    if (!row.note.empty()) r["note"] = row.note;
    r["best"] = row.best;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const BoundReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Markdown: return render_markdown(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Json: return render_json(report);
  }
  throw InvalidArgument("render: unknown format");
}

}  // namespace gainlap

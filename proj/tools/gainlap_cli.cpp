#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "gainlap/balance.hpp"
#include "gainlap/bounds_min.hpp"
#include "gainlap/coloring.hpp"
#include "gainlap/eigensolver.hpp"
#include "gainlap/frustration.hpp"
#include "gainlap/gen.hpp"
#include "gainlap/matrices.hpp"
#include "gainlap/report.hpp"

namespace {

using namespace gainlap;

double neutrality_tol_from_env() {
  if (const char* raw = std::getenv("GAINSPEC_TOL")) {
    try {
      const double tol = std::stod(raw);
      if (tol > 0.0) return tol;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid GAINSPEC_TOL='" << raw << "'\n";
  }
  return kNeutralityTol;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "md") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw InvalidArgument("unknown format '" + name + "'");
}

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty() || outPath == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath);
  if (!out) throw ParseError("cannot open '" + outPath + "' for writing");
  out << text;
}

int run_gen(const std::string& named, int n, int n1, int n2, double p,
            std::uint64_t seed, const std::string& gains, const std::string& outPath) {
  GainGraph g;
  if (!named.empty()) {
    if (named != "k5_15") throw InvalidArgument("unknown named instance '" + named + "'");
    g = signed_k5_15();
  } else if (n1 > 0 || n2 > 0) {
    g = bipartite_erdos_renyi(n1, n2, p, seed);
  } else {
    g = erdos_renyi(n, p, seed);
  }
  if (gains == "random") {
    g = random_unit_gains(g, seed + 1);
  } else if (gains != "one") {
    throw InvalidArgument("unknown gain mode '" + gains + "' (use one|random)");
  }
  emit(to_ggf(g), outPath);
  return 0;
}

int run_eig(const std::string& path, const std::string& format) {
  const GainGraph g = load_ggf(path);
  const Spectrum spectrum =
      HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(g)).spectrum();
  if (format == "json") {
    nlohmann::json doc;
    doc["file"] = path;
    doc["eigenvalues"] = std::vector<double>(
        spectrum.values.data(), spectrum.values.data() + spectrum.values.size());
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "index,eigenvalue\n";
    char buf[64];
    for (int i = 0; i < spectrum.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%d,%.12f\n", i, spectrum.values(i));
      std::cout << buf;
    }
  } else {
    std::cout << "Laplacian spectrum of " << path << " (ascending):\n";
    char buf[64];
    for (int i = 0; i < spectrum.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "  lambda_%d = %.12f\n", i + 1, spectrum.values(i));
      std::cout << buf;
    }
  }
  return 0;
}

int run_bounds(const std::string& which, const std::string& path, double r, int kmax,
               const std::string& format) {
  const GainGraph g = load_ggf(path);
  BoundReport report;
  if (which == "min") {
    report = table2_lambda1(g);
  } else if (which == "max") {
    report = table3_lambdaN(g, r, kmax);
  } else {
    const auto parts = bipartition(g);
    if (!parts) throw HypothesisError("bounds bipartite: '" + path + "' is not bipartite");
    report = table1_bipartite(g, *parts);
  }
  report.graphLabel += " for " + path;
  std::cout << render(report, parse_format(format));
  return 0;
}

int run_frustration(const std::string& path, bool force, const std::string& format,
                    double tol) {
  const GainGraph g = load_ggf(path);
  const FrustrationResult eps = frustration_index(g, force, tol);
  const FrustrationResult nu = frustration_number(g, force, tol);
  const double lambda1 =
      g.order() == 0
          ? 0.0
          : HermitianEigenSolver<Eigen::MatrixXcd>(laplacian(g)).spectrum().lambda1();

  if (format == "json") {
    nlohmann::json doc;
    doc["file"] = path;
    doc["frustration_index"] = eps.value;
    doc["frustration_number"] = nu.value;
    doc["lambda_1"] = lambda1;
    auto& edges = doc["deleted_edges"] = nlohmann::json::array();
    for (int idx : eps.witness) {
      const GainEdge& e = g.edges()[static_cast<std::size_t>(idx)];
      edges.push_back({e.u, e.v});
    }
    doc["deleted_vertices"] = nu.witness;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (format == "md") {
    std::cout << "frustration of " << path << ":\n";
    std::cout << "  index epsilon   = " << eps.value << " (min edge deletions)\n";
    std::cout << "  number nu       = " << nu.value << " (min vertex deletions)\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", lambda1);
    std::cout << "  lambda_1        = " << buf << " (algebraic lower bound)\n";
  }
  // Machine-readable lines in both md and csv modes.
  std::cout << "epsilon " << eps.value << "\n";
  for (int idx : eps.witness) {
    const GainEdge& e = g.edges()[static_cast<std::size_t>(idx)];
    std::cout << "epsilon-witness-edge " << e.u << " " << e.v << "\n";
  }
  std::cout << "nu " << nu.value << "\n";
  for (int v : nu.witness) std::cout << "nu-witness-vertex " << v << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", lambda1);
  std::cout << "lambda1 " << buf << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal eigenvalue bounds, balance and frustration for complex "
               "unit gain graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a GGF graph");
  int genN = 10, genN1 = 0, genN2 = 0;
  double genP = 0.5;
  std::uint64_t genSeed = 1;
  std::string genGains = "one", genNamed, genOut = "-";
  gen->add_option("--n", genN, "vertex count");
  gen->add_option("--p", genP, "edge probability");
  gen->add_option("--n1", genN1, "first part size (bipartite)");
  gen->add_option("--n2", genN2, "second part size (bipartite)");
  gen->add_option("--seed", genSeed, "PRNG seed");
  gen->add_option("--gains", genGains, "gain mode: one|random");
  gen->add_option("--named", genNamed, "named instance: k5_15");
  gen->add_option("-o,--out", genOut, "output file (default stdout)");

  // eig
  auto* eig = app.add_subcommand("eig", "Laplacian spectrum of a GGF graph");
  std::string eigFile, eigFormat = "md";
  eig->add_option("file", eigFile, "input .ggf")->required();
  eig->add_option("--format", eigFormat, "md|csv|json");

  // bounds min|max|bipartite
  auto* bounds = app.add_subcommand("bounds", "bound tables");
  bounds->require_subcommand(1);
  std::string boundsFile, boundsFormat = "md";
  double boundsR = 0.99;
  int boundsKmax = 100;
  auto* bmin = bounds->add_subcommand("min", "upper bounds for lambda_1");
  auto* bmax = bounds->add_subcommand("max", "bounds for lambda_n");
  auto* bbip = bounds->add_subcommand("bipartite", "bipartite lambda_1 bounds");
  for (auto* sub : {bmin, bmax, bbip}) {
    sub->add_option("file", boundsFile, "input .ggf")->required();
    sub->add_option("--format", boundsFormat, "md|csv|json");
  }
  bmax->add_option("--r", boundsR, "shift for the n_i^k recurrence, in (0,1)");
  bmax->add_option("--kmax", boundsKmax, "scan depth for k-dependent bounds");

  // frustration
  auto* frus = app.add_subcommand("frustration", "exact frustration index and number");
  std::string frusFile, frusFormat = "md";
  bool frusForce = false;
  frus->add_option("file", frusFile, "input .ggf")->required();
  frus->add_flag("--force", frusForce, "override the size caps");
  frus->add_option("--format", frusFormat, "md|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const double tol = neutrality_tol_from_env();
  try {
    if (gen->parsed()) {
      return run_gen(genNamed, genN, genN1, genN2, genP, genSeed, genGains, genOut);
    }
    if (eig->parsed()) return run_eig(eigFile, eigFormat);
    if (bounds->parsed()) {
      const std::string which = bmin->parsed() ? "min" : (bmax->parsed() ? "max" : "bipartite");
      return run_bounds(which, boundsFile, boundsR, boundsKmax, boundsFormat);
    }
    if (frus->parsed()) return run_frustration(frusFile, frusForce, frusFormat, tol);
  } catch (const SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgman/config.hpp"
#include "hgman/errors.hpp"
#include "hgman/example.hpp"
#include "hgman/kahler.hpp"
#include "hgman/pipeline.hpp"
#include "hgman/report.hpp"

namespace {

constexpr unsigned long long kDefaultSeed = 1729;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::array<hgman::Rational, 4> parse_lambda(const std::string& text) {
  std::array<hgman::Rational, 4> out;
  std::stringstream ss(text);
  std::string piece;
  int i = 0;
  while (std::getline(ss, piece, ',')) {
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw hgman::ParseError("--lambda: empty component");
    if (i >= 4) throw hgman::ParseError("--lambda: expected exactly four values");
    out[static_cast<std::size_t>(i++)] =
        hgman::Rational::parse(piece.substr(first, last - first + 1));
  }
  if (i != 4) throw hgman::ParseError("--lambda: expected exactly four values");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hgman::ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hgman::ParseError("cannot write " + path);
  out << content;
}

void print_suite(const std::string& title, const hgman::CheckReport& report) {
  std::cout << title << ":\n";
  for (const auto& item : report.items)
    std::cout << "  " << item.name << ": " << item.render() << "\n";
}

void print_summary(const hgman::PipelineResult& r) {
  const auto& c = r.classification;
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "classification: in_K=" << yn(c.in_k) << " in_W(J_1)=" << yn(c.in_w_j[0])
            << " in_W(J_2)=" << yn(c.in_w_j[1]) << " in_W(J_3)=" << yn(c.in_w_j[2])
            << " in_W=" << yn(c.in_w) << " isotropic=" << yn(c.isotropic_hk) << "\n";
  std::cout << "parallel: torsion=" << yn(r.parallel_torsion.torsion_parallel)
            << " structural=" << yn(r.parallel_torsion.structural_parallel)
            << " lee_form=" << yn(r.parallel_torsion.lee_parallel) << "\n";
  std::cout << "scalars: tau=" << r.tau.str()
            << " theta(Omega)=" << r.lee.theta_omega.str()
            << " norms=" << r.lee.norms[0].str() << "," << r.lee.norms[1].str() << ","
            << r.lee.norms[2].str() << "\n";
}

int run_example(const std::string& lambda_arg, unsigned long long seed,
                const std::string& report_path) {
  std::array<hgman::Rational, 4> lambda;
  if (!lambda_arg.empty()) {
    lambda = parse_lambda(lambda_arg);
  } else {
    lambda = hgman::sample_lambdas(seed, 1).front();
    std::cout << "sampled lambda = " << lambda[0].str() << "," << lambda[1].str()
              << "," << lambda[2].str() << "," << lambda[3].str() << "\n";
  }

  const hgman::HGManifold M = hgman::build_example_w4(lambda);
  const hgman::PipelineResult result = hgman::run_pipeline(M);
  const std::vector<hgman::GoldenDiff> diffs = hgman::golden_table_diffs(result, lambda);
  const hgman::CheckReport example_checks = hgman::worked_example_checks(result, lambda);

  print_summary(result);
  print_suite("identity checks", result.identity_suite);
  print_suite("conditional checks", result.conditional_checks);
  print_suite("family checks", example_checks);
  if (diffs.empty()) {
    std::cout << "published tables: reproduced exactly\n";
  } else {
    std::cout << "published tables: " << diffs.size() << " difference(s)\n";
    for (const auto& d : diffs)
      std::cout << "  " << d.table << " " << d.entry << ": computed " << d.computed
                << ", table " << d.expected << "\n";
  }

  if (!report_path.empty())
    write_file(report_path, hgman::serialize_report(hgman::build_example_report(
                                result, diffs, example_checks)));

  const bool pass = result.all_passed() && example_checks.all_passed() && diffs.empty();
  std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitCheckFailure;
}

int run_analyze(const std::string& config_path, const std::string& report_path) {
  const hgman::ManifoldConfig config =
      hgman::parse_manifold_config(read_file(config_path));
  const hgman::HGManifold M = hgman::manifold_from_config(config);
  const hgman::PipelineResult result = hgman::run_pipeline(M);

  print_summary(result);
  print_suite("identity checks", result.identity_suite);
  print_suite("conditional checks", result.conditional_checks);

  if (!report_path.empty())
    write_file(report_path, hgman::serialize_report(hgman::build_report(result)));

  const bool pass = result.all_passed();
  std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitCheckFailure;
}

int run_identities(const std::string& config_path) {
  const hgman::ManifoldConfig config =
      hgman::parse_manifold_config(read_file(config_path));
  const hgman::HGManifold M = hgman::manifold_from_config(config);
  const hgman::PipelineResult result = hgman::run_pipeline(M);
  print_suite("identity checks", result.identity_suite);
  const bool pass = result.identity_suite.all_passed();
  std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitCheckFailure;
}

int run_prove(int n) {
  const auto t0 = std::chrono::steady_clock::now();
  const hgman::KahlerlikeNullspace ns = hgman::kahlerlike_nullspace(n);
  const auto t1 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "elapsed_ms=%lld\n",
               static_cast<long long>(
                   std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                       .count()));
  std::cout << "dimension: " << ns.dim << "\n"
            << "variables: " << ns.variables << "\n"
            << "rank: " << ns.rank << "\n"
            << "nullity: " << ns.nullity << "\n";
  if (ns.nullity == 0) {
    std::cout << "conclusion: the constraints admit only the zero tensor\n";
    return kExitPass;
  }
  std::cout << "conclusion: nonzero solutions exist\n";
  return kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic analysis of almost hypercomplex manifolds with "
      "Hermitian and anti-Hermitian metrics"};
  app.require_subcommand(1);

  std::string lambda_arg;
  std::string config_path;
  std::string report_path;
  unsigned long long seed = kDefaultSeed;
  int n = 1;

  CLI::App* example = app.add_subcommand(
      "example", "Build the four-dimensional parameter family and verify the "
                 "published component tables");
  example->add_option("--lambda", lambda_arg,
                      "Four comma-separated rational parameters, e.g. 1,2,3,4");
  example->add_option("--seed", seed,
                      "Sampling seed used when --lambda is omitted");
  example->add_option("--report", report_path, "Write the JSON report here");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Run the full analysis on a manifold described by a JSON config");
  analyze->add_option("--config", config_path, "Manifold config JSON file")
      ->required();
  analyze->add_option("--report", report_path, "Write the JSON report here");

  CLI::App* identities = app.add_subcommand(
      "identities", "Run only the structural identity suite on a config");
  identities->add_option("--config", config_path, "Manifold config JSON file")
      ->required();

  CLI::App* prove = app.add_subcommand(
      "prove-kahlerlike",
      "Eliminate the Kahler-like constraint system exactly and report its "
      "nullity");
  prove->add_option("--n", n, "Quarter of the frame dimension (1 or 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (example->parsed()) return run_example(lambda_arg, seed, report_path);
    if (analyze->parsed()) return run_analyze(config_path, report_path);
    if (identities->parsed()) return run_identities(config_path);
    if (prove->parsed()) return run_prove(n);
  } catch (const hgman::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hgman::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hgman::StructureError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hgman::ShapeError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hgman::Error& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}

// Command-line front end: build (full pipeline report), gauge (potential
// only), verify (randomized invariant suite).  Exit codes: 0 success,
// 1 invariant failure, 2 input error.  All reports go to stdout (or --out)
// and are byte-identical for identical inputs; timing goes to stderr.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gcmorse/errors.hpp"
#include "gcmorse/pipeline.hpp"
#include "gcmorse/report.hpp"
#include "gcmorse/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file)
    throw gcmorse::InputError("cannot open output file: " + out_path);
  file << text;
}

struct PipelineOptions {
  std::string input_path;
  std::string policy = "min";
  std::string out_path;
  std::string dot_dir;
};

int run_pipeline_command(const PipelineOptions& opt, bool gauge_only) {
  auto start = Clock::now();
  gcmorse::GraphInput input = gcmorse::load_graph_file(opt.input_path);
  gcmorse::PipelineResult result =
      gcmorse::run_pipeline(input, gcmorse::parse_tie_break(opt.policy));

  gcmorse::Json report = gauge_only ? gcmorse::gauge_report(result)
                                    : gcmorse::run_report(result);
  write_output(report.dump(2) + "\n", opt.out_path);

  if (!opt.dot_dir.empty()) {
    std::filesystem::create_directories(opt.dot_dir);
    auto path = std::filesystem::path(opt.dot_dir) / "d2_skeleton.dot";
    std::ofstream dot(path);
    if (!dot)
      throw gcmorse::InputError("cannot open output file: " + path.string());
    dot << gcmorse::dot_skeleton(result);
  }

  std::cerr << "completed in " << ms_since(start) << " ms\n";
  if (!result.agreement) {
    std::cerr << "error: Morse homology disagrees with the cellular oracle\n";
    return 1;
  }
  return 0;
}

int run_verify_command(int max_vertices, int samples, std::uint64_t seed) {
  auto start = Clock::now();
  gcmorse::VerifyResult res =
      gcmorse::run_verify(max_vertices, samples, seed);
  std::cerr << "completed in " << ms_since(start) << " ms\n";

  if (res.ok()) {
    std::cout << "PASS: " << res.graphs_checked
              << " graphs checked under both tie-break policies, "
              << "all invariants hold\n";
    return 0;
  }
  std::cout << "FAIL: " << res.failures.size() << " invariant failure(s) over "
            << res.graphs_checked << " graphs\n";
  for (const std::string& f : res.failures) std::cout << "  " << f << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Discrete Morse functions, first homology, and topological gauge "
      "potentials for two-particle graph configuration spaces"};
  app.require_subcommand(1);

  PipelineOptions build_opt;
  CLI::App* build = app.add_subcommand(
      "build", "Run the full pipeline on a graph and print a JSON report");
  build->add_option("input", build_opt.input_path,
                    "graph file (JSON object or edge list)")
      ->required();
  build->add_option("--policy", build_opt.policy,
                    "tie-break policy: min or max")
      ->capture_default_str();
  build->add_option("--out", build_opt.out_path,
                    "write the report to this file instead of stdout");
  build->add_option("--emit-dot", build_opt.dot_dir,
                    "write d2_skeleton.dot (the labeled 1-skeleton) into this "
                    "directory");

  PipelineOptions gauge_opt;
  CLI::App* gauge = app.add_subcommand(
      "gauge", "Print the gauge potential (parameters, per-edge phases, "
               "constraints) as JSON");
  gauge->add_option("input", gauge_opt.input_path,
                    "graph file (JSON object or edge list)")
      ->required();
  gauge->add_option("--policy", gauge_opt.policy,
                    "tie-break policy: min or max")
      ->capture_default_str();
  gauge->add_option("--out", gauge_opt.out_path,
                    "write the report to this file instead of stdout");

  int max_vertices = 8;
  int samples = 200;
  std::uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check every library invariant on the named corpus plus "
                "random connected graphs, under both tie-break policies");
  verify->add_option("--max-vertices", max_vertices,
                     "largest random graph size (2..10)")
      ->capture_default_str();
  verify->add_option("--samples", samples, "number of random graphs")
      ->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return run_pipeline_command(build_opt, false);
    if (gauge->parsed()) return run_pipeline_command(gauge_opt, true);
    return run_verify_command(max_vertices, samples, seed);
  } catch (const gcmorse::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcmorse::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "gcmorse/pipeline.hpp"

#include <string>
#include <utility>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

// Runs one stage, prefixing any library error with the stage name while
// keeping the input/invariant distinction (it drives the exit code).
template <class F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

PipelineResult run_pipeline(const GraphInput& input, TieBreak policy) {
  Graph original = stage("graph", [&] {
    return Graph(input.vertices, input.edges, input.adjacency_order);
  });
  RootedSpanningTree original_tree = stage("spanning-tree", [&] {
    return build_spanning_tree(original, input.tree, input.root);
  });
  RelabeledGraph rel = stage("relabel", [&] {
    return relabel_by_tree(original, original_tree);
  });
  OneParticleMorse f1 = stage("one-particle-function", [&] {
    return build_f1(rel.graph, rel.tree);
  });
  TwoParticleComplex d2 =
      stage("two-particle-complex", [&] { return build_d2(rel.graph); });
  CellFunction trial =
      stage("trial-function", [&] { return trial_f2(d2, f1); });
  auto [f2, log] = stage("repair", [&] {
    return repair(d2, trial, rel.tree, policy);
  });
  GradientField field = stage("gradient-field", [&] {
    return build_gradient_field(d2.complex(), f2);
  });
  MorseComplex mc = stage("morse-boundary", [&] {
    return morse_boundary(d2.complex(), field);
  });
  HomologyResult morse_h1 =
      stage("homology", [&] { return homology_h1(mc); });
  OracleResult oracle = stage("oracle", [&] {
    return cellular_homology_oracle(d2.complex());
  });
  bool agreement = morse_h1 == oracle.h1;
  GaugePotential gauge =
      stage("gauge", [&] { return build_gauge(d2.complex(), field); });

  return PipelineResult{input,
                        std::move(rel.graph),
                        std::move(rel.tree),
                        std::move(rel.new_label),
                        std::move(rel.old_label),
                        std::move(f1),
                        std::move(d2),
                        std::move(trial),
                        std::move(f2),
                        std::move(log),
                        std::move(field),
                        std::move(mc),
                        std::move(morse_h1),
                        std::move(oracle),
                        agreement,
                        std::move(gauge)};
}

}  // namespace gcmorse

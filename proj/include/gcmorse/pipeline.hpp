#pragma once

#include <vector>

#include "gcmorse/config_complex.hpp"
#include "gcmorse/gauge.hpp"
#include "gcmorse/graph.hpp"
#include "gcmorse/homology.hpp"
#include "gcmorse/io.hpp"
#include "gcmorse/morse.hpp"
#include "gcmorse/trial_fix.hpp"

namespace gcmorse {

// Everything one end-to-end run produces.  The gradient field and Morse
// complex index into d2.complex().
struct PipelineResult {
  GraphInput input;  // as supplied (original labels)
  Graph graph;       // relabeled
  RootedSpanningTree tree;
  std::vector<int> new_label;  // [original v - 1] -> working label
  std::vector<int> old_label;  // [working v - 1] -> original label
  OneParticleMorse f1;
  TwoParticleComplex d2;
  CellFunction trial;  // before repair
  CellFunction f2;     // after repair
  RepairLog log;
  GradientField field;
  MorseComplex mc;
  HomologyResult morse_h1;
  OracleResult oracle;
  bool agreement = false;  // Morse and oracle H1 identical
  GaugePotential gauge;
};

// Runs graph -> spanning tree -> relabeling -> one-particle function ->
// two-particle complex -> trial function -> repair -> gradient field ->
// Morse boundary -> homology (both routes) -> gauge potential.  Errors from
// stages are rethrown with the stage named.
PipelineResult run_pipeline(const GraphInput& input, TieBreak policy);

}  // namespace gcmorse

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcmorse/pipeline.hpp"

namespace gcmorse {

// A named input for the deterministic part of the verification corpus.
struct VerifySample {
  std::string name;
  GraphInput input;
};

// Hand-picked graphs covering the interesting regimes: trees, single cycles,
// dense graphs, bipartite graphs with torsion in H1 of the two-particle
// space, and the worked examples with their published spanning trees.
std::vector<VerifySample> named_corpus();

// Uniform connected simple graph: a random spanning tree plus extra edges,
// with labels permuted and the edge list shuffled so the default traversal
// sees arbitrary orderings.  Sometimes requests an explicit tree and root to
// exercise the override paths.  Uses only the raw mt19937_64 stream, so the
// sequence is identical across platforms.
GraphInput random_connected_graph(std::mt19937_64& rng, int min_vertices,
                                  int max_vertices);

// One-line JSON form of an input, for failure messages that can be replayed
// through the CLI.
std::string serialize_graph(const GraphInput& input);

// Re-checks every structural invariant on a completed run: the repaired
// function is Morse, the field is acyclic and properly partitioned, the
// repair log accounts exactly for the trial-vs-final difference, the
// closed-form critical classification matches, both boundary compositions
// vanish, the Morse and oracle homologies agree, Morse inequalities and the
// Euler count hold, and the gauge potential has the documented shape (heads
// zero, criticals parametric, paired squares flux-free, constraints
// mirroring the Morse boundary, heads forming a spanning tree).  Returns
// human-readable failure descriptions; empty means all invariants hold.
std::vector<std::string> check_invariants(const PipelineResult& r);

// The Morse boundary from dimension dim recomputed by explicit V-path
// enumeration with sign tracking — the independent route used to
// cross-validate the substitution-flow implementation.
IntegerMatrix vpath_boundary_matrix(const Complex& complex,
                                    const GradientField& field,
                                    const MorseComplex& mc, int dim);

// Descent along every maximal V-path: pair steps never increase the value,
// boundary steps strictly decrease it.
std::vector<std::string> check_vpath_descent(const Complex& complex,
                                             const GradientField& field,
                                             const CellFunction& f);

// Runs the full pipeline under both tie-break policies, checks all
// invariants, compares homology across policies, and (when cross_vpath)
// cross-validates the Morse boundary against V-path enumeration.
std::vector<std::string> verify_graph(const GraphInput& input,
                                      bool cross_vpath);

struct VerifyResult {
  int graphs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The named corpus plus `samples` random graphs with between min(3, N) and
// N vertices, N capped at 10.  V-path cross-validation runs on every graph
// with at most 6 vertices.  Deterministic for a fixed seed.
VerifyResult run_verify(int max_vertices, int samples, std::uint64_t seed);

}  // namespace gcmorse

#pragma once

#include <array>
#include <vector>

#include "gcmorse/cells.hpp"
#include "gcmorse/integer_matrix.hpp"
#include "gcmorse/morse.hpp"

namespace gcmorse {

// The chain complex on critical cells with gradient-flow boundary maps.
struct MorseComplex {
  std::array<std::vector<int>, 3> critical;  // cell indices per dim, ascending
  IntegerMatrix boundary1;  // rows: critical 0-cells, cols: critical 1-cells
  IntegerMatrix boundary2;  // rows: critical 1-cells, cols: critical 2-cells
};

// Builds the Morse complex of an acyclic field by gradient-flow
// substitution: each critical cell's boundary chain is rewritten until no
// noncritical tail remains (tails processed in flow order, one substitution
// each), then restricted to critical cells.  Verifies boundary1 * boundary2
// = 0.  Throws NonTermination if the substitution budget (total pair count
// + 1) is exceeded, which would mean a cyclic field.
MorseComplex morse_boundary(const Complex& complex, const GradientField& field);

// First homology over the integers: free rank plus invariant factors > 1.
struct HomologyResult {
  int free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologyResult&) const = default;
};

HomologyResult homology_h1(const MorseComplex& mc);

// Brute-force cellular homology straight from the full boundary matrices;
// no Morse theory involved.  h2_rank is informational.
struct OracleResult {
  HomologyResult h1;
  int h0_rank = 0;
  int h2_rank = 0;
};

OracleResult cellular_homology_oracle(const Complex& complex);

// Full boundary matrix from dimension dim to dim-1 (rows: (dim-1)-cells,
// cols: dim-cells).
IntegerMatrix boundary_matrix(const Complex& complex, int dim);

}  // namespace gcmorse

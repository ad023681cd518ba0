#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcmorse/config_complex.hpp"
#include "gcmorse/graph.hpp"
#include "gcmorse/morse.hpp"

namespace gcmorse {

// Which of the two admissible raises to apply at a two-way repair site
// {u,v} (u < v): raise the 1-cell whose parked particle is the smaller
// vertex (u x e(v)) or the larger one (v x e(u)).
enum class TieBreak { MinVertexFirst, MaxVertexFirst };

const char* to_string(TieBreak policy);
TieBreak parse_tie_break(const std::string& name);  // "min" | "max"

// One applied fix: the site whose local pattern forced it (a 2-cell for
// square fixes, a 0-cell for sibling fixes) and the 1-cell raised by +1.
// Square fixes also raise the 2-cell itself by +1.
struct RepairFix {
  CellId site;
  int raised_1cell = -1;
  auto operator<=>(const RepairFix&) const = default;
};

struct RepairLog {
  TieBreak policy = TieBreak::MinVertexFirst;
  std::vector<RepairFix> square_fixes;   // step 1: 2-cells with two tree factors
  std::vector<RepairFix> sibling_fixes;  // step 3: 0-cells {u,v} with tau(u)=tau(v)
};

// The trial function: value of a cell = sum of the one-particle values of
// its two factors (vertex or edge).  Not Morse in general.
CellFunction trial_f2(const TwoParticleComplex& d2, const OneParticleMorse& f1);

// Three-step repair of the trial function into a genuine Morse function.
// Step 1 raises every 2-cell with two tree parent-edge factors by +1
// together with one of its two "diagonal" 1-cells (policy choice).  Step 2
// verifies that no 1-cell violates the Morse conditions.  Step 3 raises one
// of the two equal-valued cofaces of every sibling 0-cell (policy choice;
// the raised cell becomes critical).  Every structural expectation along
// the way is asserted; a violation throws AssertionFailure and indicates a
// bug, not bad input.
std::pair<CellFunction, RepairLog> repair(const TwoParticleComplex& d2,
                                          const CellFunction& trial,
                                          const RootedSpanningTree& tree,
                                          TieBreak policy);

// Closed-form prediction of the critical cells, without running the repair:
//   dim 0: exactly {1,2};
//   dim 1: (a) v x e with e deleted and (e(v) meets e, or v = 1);
//          (b) for each sibling 0-cell {u,v}: the policy-raised cell;
//   dim 2: e1 x e2 with both factors deleted.
// Lists are sorted by payload.
struct PredictedCritical {
  std::vector<Cell0> dim0;
  std::vector<Cell1> dim1;
  std::vector<Cell2> dim2;
};

PredictedCritical classify_critical(const Graph& graph,
                                    const RootedSpanningTree& tree,
                                    TieBreak policy);

}  // namespace gcmorse

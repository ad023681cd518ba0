#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gcmorse/cells.hpp"

namespace gcmorse {

// Integer-valued function on every cell of a complex.  All constructions in
// this library are integral, so there are no tolerances anywhere.
class CellFunction {
 public:
  CellFunction() = default;
  explicit CellFunction(const Complex& complex);

  std::int64_t operator()(CellId c) const { return values_[c.dim][c.idx]; }
  void set(CellId c, std::int64_t v) { values_[c.dim][c.idx] = v; }
  void raise(CellId c, std::int64_t by) { values_[c.dim][c.idx] += by; }

  int size(int dim) const { return static_cast<int>(values_[dim].size()); }
  bool matches(const Complex& complex) const;

 private:
  std::array<std::vector<std::int64_t>, 3> values_;
};

// A cell breaking the discrete Morse conditions, with the offending
// neighbours: cofaces valued <= the cell, faces valued >= the cell.  A cell
// is listed when either list has more than one entry.
struct MorseViolation {
  CellId cell;
  std::vector<CellId> upper;
  std::vector<CellId> lower;
};

// Empty result iff f is a discrete Morse function: every cell has at most
// one coface with smaller-or-equal value and at most one face with
// greater-or-equal value.  Throws MissingValue if f does not cover the
// complex.
std::vector<MorseViolation> check_morse(const Complex& complex,
                                        const CellFunction& f);

enum class CellRole : unsigned char { Critical, Tail, Head };

// A discrete vector field: a partial pairing of cells across adjacent
// dimensions (tail -> head arrows); unpaired cells are critical.  Pure data;
// queries take the complex explicitly.
class GradientField {
 public:
  GradientField() = default;
  // Validates that each pair (alpha, beta) satisfies dim beta = dim alpha+1
  // and alpha in boundary(beta), and that no cell is in two pairs.
  GradientField(const Complex& complex,
                std::vector<std::pair<CellId, CellId>> pairs);

  CellRole role(CellId c) const { return role_[c.dim][c.idx]; }
  bool is_critical(CellId c) const { return role(c) == CellRole::Critical; }
  bool is_tail(CellId c) const { return role(c) == CellRole::Tail; }
  bool is_head(CellId c) const { return role(c) == CellRole::Head; }

  // The other member of c's pair (head of a tail, tail of a head).
  CellId partner(CellId c) const;

  const std::vector<std::pair<CellId, CellId>>& pairs() const {
    return pairs_;
  }
  // Ascending indices of critical cells of one dimension.
  std::vector<int> critical(int dim) const;

 private:
  std::array<std::vector<CellRole>, 3> role_;
  std::array<std::vector<int>, 3> partner_;
  std::vector<std::pair<CellId, CellId>> pairs_;
};

// Builds the gradient vector field of a Morse function: pairs (alpha, beta)
// exactly where beta is a coface of alpha with f(beta) <= f(alpha).  Throws
// NotMorse when check_morse reports violations, CyclicField if the resulting
// field has a closed V-path (impossible for Morse input; checked anyway).
GradientField build_gradient_field(const Complex& complex,
                                   const CellFunction& f);

// Alternating cell sequence a0, b0, a1, b1, ..., a_k (p- and (p+1)-cells):
// each (a_i, b_i) is a pair of the field and a_{i+1} is a face of b_i other
// than a_i.  `sign` is the product over steps of
// -<db_i, a_i> * <db_i, a_{i+1}> (empty product = +1), the multiplier this
// path contributes to gradient-flow coefficients.
struct VPath {
  std::vector<CellId> cells;
  int sign = 1;
  CellId end() const { return cells.back(); }
};

enum class VPathEnds { Any, CriticalOnly };

// All maximal V-paths starting at the given cells (which must share one
// dimension), depth-first.  A start cell that is not a tail yields the
// length-0 path.  Finite for acyclic fields; throws CyclicField if a path
// exceeds the total pair count (defensive).
std::vector<VPath> enumerate_vpaths(const Complex& complex,
                                    const GradientField& field,
                                    std::span<const CellId> from,
                                    VPathEnds ends = VPathEnds::Any);

// True iff the field has no closed V-path: the directed graph on tails
// (alpha -> alpha' when alpha' is another tail in the boundary of alpha's
// head) is cycle-free in every dimension.
bool check_acyclic(const Complex& complex, const GradientField& field);

}  // namespace gcmorse

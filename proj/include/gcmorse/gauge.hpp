#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcmorse/cells.hpp"
#include "gcmorse/morse.hpp"

namespace gcmorse {

// Affine integer combination of the gauge parameters (phases mod 2*pi).
// The construction only ever produces a zero constant term; it is kept so
// expressions form a closed algebra.
struct PhaseExpr {
  std::map<int, std::int64_t> coeffs;  // parameter index -> coefficient
  std::int64_t constant = 0;

  void add_scaled(const PhaseExpr& other, std::int64_t scale);
  PhaseExpr negated() const;
  bool is_zero() const { return coeffs.empty() && constant == 0; }
  bool operator==(const PhaseExpr&) const = default;

  static PhaseExpr parameter(int index) {
    PhaseExpr e;
    e.coeffs[index] = 1;
    return e;
  }
};

// A 1-cell traversed in its canonical direction (from the -1 face to the +1
// face) or reversed.
struct DirectedEdge {
  int cell = 0;
  bool reversed = false;
};

struct GaugeParam {
  int cell = 0;  // the critical 1-cell carrying this parameter
  std::string name;
};

// Antisymmetric phase assignment on directed 1-cells: zero on heads, a
// fresh parameter on each critical 1-cell, and tail values forced by zero
// flux through their paired 2-cells.  Critical 2-cells contribute flux
// constraints instead of equations.
struct GaugePotential {
  std::vector<GaugeParam> params;       // ascending by critical 1-cell
  std::vector<PhaseExpr> edge_expr;     // per 1-cell, canonical direction
  std::vector<std::pair<int, PhaseExpr>> constraints;  // (critical 2-cell, flux)

  const PhaseExpr& expr(int cell1) const { return edge_expr[cell1]; }
};

GaugePotential build_gauge(const Complex& complex, const GradientField& field);

// Signed sum of the potential along a closed edge cycle; throws
// NotAClosedCycle when consecutive directed edges do not chain up (the end
// vertex of each must be the start vertex of the next, cyclically).
PhaseExpr flux(const Complex& complex, const GaugePotential& potential,
               std::span<const DirectedEdge> cycle);

}  // namespace gcmorse

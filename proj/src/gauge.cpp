#include "gcmorse/gauge.hpp"

#include <string>

#include "gcmorse/errors.hpp"

namespace gcmorse {

void PhaseExpr::add_scaled(const PhaseExpr& other, std::int64_t scale) {
  for (const auto& [param, coeff] : other.coeffs) {
    auto it = coeffs.try_emplace(param, 0).first;
    it->second += coeff * scale;
    if (it->second == 0) coeffs.erase(it);
  }
  constant += other.constant * scale;
}

PhaseExpr PhaseExpr::negated() const {
  PhaseExpr out;
  out.add_scaled(*this, -1);
  return out;
}

GaugePotential build_gauge(const Complex& complex,
                           const GradientField& field) {
  GaugePotential pot;

  std::vector<int> param_of(complex.size(1), -1);
  for (int idx : field.critical(1)) {
    param_of[idx] = static_cast<int>(pot.params.size());
    pot.params.push_back(
        {idx, "phi" + std::to_string(pot.params.size() + 1)});
  }

  pot.edge_expr.assign(complex.size(1), PhaseExpr{});

  // Heads keep 0; criticals get their parameter; tails are solved from the
  // zero-flux equation of their paired 2-cell.  Each equation has exactly
  // one unknown when tails are resolved depth-first along the flow.
  std::vector<char> state(complex.size(1), 0);  // 0 new, 1 solving, 2 done
  auto solve = [&](auto&& self, int idx) -> void {
    if (state[idx] == 2) return;
    if (state[idx] == 1)
      throw UnsolvableOrder("gauge propagation loops through " +
                            complex.name(CellId{1, idx}));
    state[idx] = 1;
    CellId c{1, idx};
    if (field.is_critical(c)) {
      pot.edge_expr[idx] = PhaseExpr::parameter(param_of[idx]);
    } else if (field.is_tail(c)) {
      CellId square = field.partner(c);
      int self_sign = 0;
      PhaseExpr rest;
      for (const auto& entry : complex.faces(square)) {
        if (entry.cell == idx) {
          self_sign = entry.sign;
          continue;
        }
        self(self, entry.cell);
        rest.add_scaled(pot.edge_expr[entry.cell], entry.sign);
      }
      if (self_sign == 0)
        throw UnsolvableOrder("tail 1-cell missing from its square at " +
                              complex.name(c));
      // self_sign * expr + rest = 0
      pot.edge_expr[idx] = rest;
      if (self_sign == 1) pot.edge_expr[idx] = pot.edge_expr[idx].negated();
    }
    // heads: expression stays zero
    state[idx] = 2;
  };
  for (int i = 0; i < complex.size(1); ++i) solve(solve, i);

  for (int idx : field.critical(2)) {
    PhaseExpr f;
    for (const auto& entry : complex.faces(CellId{2, idx}))
      f.add_scaled(pot.edge_expr[entry.cell], entry.sign);
    pot.constraints.emplace_back(idx, std::move(f));
  }

  return pot;
}

namespace {

// Endpoints of a 1-cell in traversal order: canonical direction runs from
// the -1 face to the +1 face.
std::pair<int, int> endpoints(const Complex& complex, DirectedEdge e) {
  int from = -1, to = -1;
  for (const auto& entry : complex.faces(CellId{1, e.cell})) {
    if (entry.sign < 0)
      from = entry.cell;
    else
      to = entry.cell;
  }
  if (from < 0 || to < 0)
    throw InputError("1-cell " + complex.name(CellId{1, e.cell}) +
                     " lacks a +/- face pair");
  if (e.reversed) std::swap(from, to);
  return {from, to};
}

}  // namespace

PhaseExpr flux(const Complex& complex, const GaugePotential& potential,
               std::span<const DirectedEdge> cycle) {
  PhaseExpr total;
  if (cycle.empty()) return total;

  int expected_start = endpoints(complex, cycle.front()).first;
  int at = expected_start;
  for (const DirectedEdge& e : cycle) {
    auto [from, to] = endpoints(complex, e);
    if (from != at)
      throw NotAClosedCycle("cycle breaks at " +
                            complex.name(CellId{1, e.cell}));
    total.add_scaled(potential.expr(e.cell), e.reversed ? -1 : +1);
    at = to;
  }
  if (at != expected_start)
    throw NotAClosedCycle("cycle does not return to its start");
  return total;
}

}  // namespace gcmorse

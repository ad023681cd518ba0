#include "gcmorse/homology.hpp"

#include <algorithm>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

// Tails of dimension p ordered so that every tail precedes all tails
// reachable from it by a V-step (substituting in this order eliminates each
// tail at most once).  Throws CyclicField on a closed V-path.
std::vector<int> tails_in_flow_order(const Complex& complex,
                                     const GradientField& field, int p) {
  const int n = complex.size(p);
  std::vector<int> order;
  std::vector<char> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  auto visit = [&](auto&& self, int i) -> void {
    state[i] = 1;
    CellId beta = field.partner(CellId{p, i});
    for (const auto& entry : complex.faces(beta)) {
      if (entry.cell == i || !field.is_tail(CellId{p, entry.cell})) continue;
      if (state[entry.cell] == 1)
        throw CyclicField("closed V-path through " +
                          complex.name(CellId{p, entry.cell}));
      if (state[entry.cell] == 0) self(self, entry.cell);
    }
    state[i] = 2;
    order.push_back(i);
  };
  for (int i = 0; i < n; ++i)
    if (field.is_tail(CellId{p, i}) && state[i] == 0) visit(visit, i);
  std::reverse(order.begin(), order.end());  // sources first
  return order;
}

int incidence(const Complex& complex, CellId beta, int face_idx) {
  for (const auto& entry : complex.faces(beta))
    if (entry.cell == face_idx) return entry.sign;
  return 0;
}

}  // namespace

MorseComplex morse_boundary(const Complex& complex,
                            const GradientField& field) {
  MorseComplex mc;
  for (int d = 0; d < 3; ++d) mc.critical[d] = field.critical(d);

  const std::size_t budget = field.pairs().size() + 1;

  // row index within the critical list, per dimension
  std::array<std::vector<int>, 3> row_of;
  for (int d = 0; d < 3; ++d) {
    row_of[d].assign(complex.size(d), -1);
    for (int r = 0; r < static_cast<int>(mc.critical[d].size()); ++r)
      row_of[d][mc.critical[d][r]] = r;
  }

  auto flow_boundary = [&](int p) {
    // Boundary of critical (p+1)-cells, flowed down to critical p-cells.
    const auto order = tails_in_flow_order(complex, field, p);
    IntegerMatrix out(static_cast<int>(mc.critical[p].size()),
                      static_cast<int>(mc.critical[p + 1].size()));
    for (int col = 0; col < out.cols(); ++col) {
      CellId beta{p + 1, mc.critical[p + 1][col]};
      std::vector<Int> chain(complex.size(p));
      for (const auto& entry : complex.faces(beta))
        chain[entry.cell] += entry.sign;

      std::size_t substitutions = 0;
      for (int t : order) {
        if (chain[t] == 0) continue;
        if (++substitutions > budget)
          throw NonTermination("gradient flow exceeded its substitution budget");
        Int coef = chain[t];
        CellId upper = field.partner(CellId{p, t});
        int s = incidence(complex, upper, t);
        for (const auto& entry : complex.faces(upper))
          chain[entry.cell] -= coef * s * entry.sign;
      }

      for (int i = 0; i < complex.size(p); ++i) {
        if (chain[i] == 0) continue;
        if (row_of[p][i] < 0) {
          if (field.is_tail(CellId{p, i}))
            throw NonTermination("gradient flow left a tail coefficient at " +
                                 complex.name(CellId{p, i}));
          continue;  // heads drop out when restricting to critical cells
        }
        out.at(row_of[p][i], col) = chain[i];
      }
    }
    return out;
  };

  mc.boundary1 = flow_boundary(0);
  mc.boundary2 = flow_boundary(1);

  if (!mc.boundary1.multiplied_by(mc.boundary2).is_zero())
    throw InvariantError("Morse boundary maps do not compose to zero");

  return mc;
}

HomologyResult homology_h1(const MorseComplex& mc) {
  auto snf1 = smith_normal_form(mc.boundary1);
  auto snf2 = smith_normal_form(mc.boundary2);
  HomologyResult h;
  h.free_rank = static_cast<int>(mc.critical[1].size()) - snf1.rank() -
                snf2.rank();
  for (const Int& d : snf2.factors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

OracleResult cellular_homology_oracle(const Complex& complex) {
  auto snf1 = smith_normal_form(boundary_matrix(complex, 1));
  auto snf2 = smith_normal_form(boundary_matrix(complex, 2));
  OracleResult out;
  out.h1.free_rank = complex.size(1) - snf1.rank() - snf2.rank();
  for (const Int& d : snf2.factors)
    if (d > 1) out.h1.torsion.push_back(d);
  out.h0_rank = complex.size(0) - snf1.rank();
  out.h2_rank = complex.size(2) - snf2.rank();
  return out;
}

IntegerMatrix boundary_matrix(const Complex& complex, int dim) {
  IntegerMatrix m(complex.size(dim - 1), complex.size(dim));
  for (int j = 0; j < complex.size(dim); ++j)
    for (const auto& entry : complex.faces(CellId{dim, j}))
      m.at(entry.cell, j) += entry.sign;
  return m;
}

}  // namespace gcmorse

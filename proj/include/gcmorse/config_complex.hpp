#pragma once

#include <string>
#include <vector>

#include "gcmorse/cells.hpp"
#include "gcmorse/graph.hpp"

namespace gcmorse {

// 0-cell of the two-particle complex: two particles parked on distinct
// vertices, unordered; stored u < v.
struct Cell0 {
  int u = 0, v = 0;
  auto operator<=>(const Cell0&) const = default;
};

// 1-cell: one particle parked at `vertex`, the other moving along edge
// {j,k}; vertex is not an endpoint; stored j < k.
struct Cell1 {
  int vertex = 0;
  int j = 0, k = 0;
  auto operator<=>(const Cell1&) const = default;
};

// 2-cell: both particles moving along disjoint edges {a,b} and {c,d},
// unordered pair of edges; canonical form puts the edge containing the
// globally smallest endpoint first and sorts each edge's endpoints.
struct Cell2 {
  int a = 0, b = 0;  // first edge, a < b; a is the smallest of all four
  int c = 0, d = 0;  // second edge, c < d
  auto operator<=>(const Cell2&) const = default;
};

Cell0 make_cell0(int u, int v);
Cell1 make_cell1(int vertex, int j, int k);
Cell2 make_cell2(int a, int b, int c, int d);

std::string name_of(const Cell0&);  // "(1,2)"
std::string name_of(const Cell1&);  // "3x(2,4)"
std::string name_of(const Cell2&);  // "(1,3)x(4,5)"

// The discrete two-particle configuration space of a graph: all fully
// disjoint cell pairs of the graph, modulo particle exchange, as a regular
// cell complex with a fixed orientation convention.
class TwoParticleComplex {
 public:
  TwoParticleComplex(Graph graph, std::vector<Cell0> cells0,
                     std::vector<Cell1> cells1, std::vector<Cell2> cells2,
                     Complex complex);

  const Graph& graph() const { return graph_; }
  const Complex& complex() const { return complex_; }

  const std::vector<Cell0>& cells0() const { return cells0_; }
  const std::vector<Cell1>& cells1() const { return cells1_; }
  const std::vector<Cell2>& cells2() const { return cells2_; }

  // Index of a cell, or -1 when it is not a cell of the complex (payloads
  // are canonicalized before lookup).
  int index0(const Cell0&) const;
  int index1(const Cell1&) const;
  int index2(const Cell2&) const;

 private:
  Graph graph_;
  std::vector<Cell0> cells0_;
  std::vector<Cell1> cells1_;
  std::vector<Cell2> cells2_;
  Complex complex_;
};

// Builds the two-particle complex.  Cell lists are sorted by canonical
// payload within each dimension, independent of input edge order.
// Orientation:
// boundary of v x {j,k} (j<k) is +{v,k} - {v,j}; boundary of the square with
// canonical factors (e1,e2), e1={a,b} a<b, e2={c,d} c<d, is
// (b x e2) - (a x e2) - (d x e1) + (c x e1).  Throws TooSmall for |V| < 2.
TwoParticleComplex build_d2(const Graph& graph);

// Result of checking Abrams' two subdivision conditions for n particles:
// condition 1 — every simple path between distinct vertices of valence != 2
// has at least n-1 edges; condition 2 — every cycle has at least n+1 edges.
// Witnesses are vertex sequences (cycles listed without the repeated start).
struct AbramsReport {
  bool condition1 = true;
  bool condition2 = true;
  std::vector<std::vector<int>> short_paths;
  std::vector<std::vector<int>> short_cycles;
  bool ok() const { return condition1 && condition2; }
};

AbramsReport check_abrams(const Graph& graph, int n_particles);

}  // namespace gcmorse

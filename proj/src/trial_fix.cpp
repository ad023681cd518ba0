#include "gcmorse/trial_fix.hpp"

#include <algorithm>

#include "gcmorse/errors.hpp"

namespace gcmorse {

const char* to_string(TieBreak policy) {
  return policy == TieBreak::MinVertexFirst ? "min" : "max";
}

TieBreak parse_tie_break(const std::string& name) {
  if (name == "min") return TieBreak::MinVertexFirst;
  if (name == "max") return TieBreak::MaxVertexFirst;
  throw InputError("unknown tie-break policy '" + name + "' (expected min or max)");
}

CellFunction trial_f2(const TwoParticleComplex& d2,
                      const OneParticleMorse& f1) {
  const Complex& cx = d2.complex();
  const Graph& g = d2.graph();
  if (static_cast<int>(f1.vertex_value.size()) != g.vertex_count() ||
      f1.edge_value.size() != g.edges().size())
    throw MissingValue("one-particle function does not cover the graph");

  CellFunction f(cx);
  for (int i = 0; i < static_cast<int>(d2.cells0().size()); ++i) {
    const Cell0& c = d2.cells0()[i];
    f.set({0, i}, f1.vertex(c.u) + f1.vertex(c.v));
  }
  for (int i = 0; i < static_cast<int>(d2.cells1().size()); ++i) {
    const Cell1& c = d2.cells1()[i];
    f.set({1, i}, f1.vertex(c.vertex) + f1.edge(g.edge_index(c.j, c.k)));
  }
  for (int i = 0; i < static_cast<int>(d2.cells2().size()); ++i) {
    const Cell2& c = d2.cells2()[i];
    f.set({2, i},
          f1.edge(g.edge_index(c.a, c.b)) + f1.edge(g.edge_index(c.c, c.d)));
  }
  return f;
}

namespace {

// The endpoint of a tree edge that is the child (its parent edge is this
// edge).
int child_endpoint(const Graph& g, const RootedSpanningTree& tree,
                   int edge_idx) {
  const Edge& e = g.edges()[edge_idx];
  if (tree.parent_edge(e.u) == edge_idx) return e.u;
  if (tree.parent_edge(e.v) == edge_idx) return e.v;
  throw AssertionFailure("tree edge " + std::to_string(edge_idx) +
                         " has no child endpoint");
}

}  // namespace

std::pair<CellFunction, RepairLog> repair(const TwoParticleComplex& d2,
                                          const CellFunction& trial,
                                          const RootedSpanningTree& tree,
                                          TieBreak policy) {
  const Complex& cx = d2.complex();
  const Graph& g = d2.graph();
  if (!trial.matches(cx))
    throw MissingValue("trial function does not cover the complex");

  CellFunction f = trial;
  RepairLog log{policy, {}, {}};
  std::vector<char> raised(cx.size(1), 0);

  auto raise_one = [&](int idx, CellId site, std::vector<RepairFix>& fixes) {
    if (idx < 0)
      throw AssertionFailure("repair site names a 1-cell absent from the complex");
    if (raised[idx])
      throw AssertionFailure("1-cell raised twice: " + cx.name({1, idx}));
    raised[idx] = 1;
    f.raise({1, idx}, 1);
    fixes.push_back(RepairFix{site, idx});
  };

  // Step 1: every 2-cell whose factors are both tree edges is e(u) x e(v)
  // for the child endpoints u, v; raise it and one of the two equal-valued
  // diagonal 1-cells u x e(v), v x e(u).
  for (int i = 0; i < static_cast<int>(d2.cells2().size()); ++i) {
    const Cell2& c = d2.cells2()[i];
    int e1 = g.edge_index(c.a, c.b), e2 = g.edge_index(c.c, c.d);
    if (!tree.is_tree_edge(e1) || !tree.is_tree_edge(e2)) continue;
    int u = child_endpoint(g, tree, e1), v = child_endpoint(g, tree, e2);
    int b_u = d2.index1(make_cell1(u, c.c, c.d));  // u x e(v)
    int b_v = d2.index1(make_cell1(v, c.a, c.b));  // v x e(u)
    if (b_u < 0 || b_v < 0)
      throw AssertionFailure("square site " + cx.name({2, i}) +
                             " is missing a diagonal 1-cell");
    if (f({1, b_u}) != f({2, i}) || f({1, b_v}) != f({2, i}))
      throw AssertionFailure("square site " + cx.name({2, i}) +
                             " does not have equal-valued diagonals");
    f.raise({2, i}, 1);
    bool pick_u = (policy == TieBreak::MinVertexFirst) == (u < v);
    raise_one(pick_u ? b_u : b_v, CellId{2, i}, log.square_fixes);
  }

  // Step 2: no modifications; 1- and 2-cells must already be clean.
  for (const auto& v : check_morse(cx, f))
    if (v.cell.dim >= 1)
      throw AssertionFailure("after square fixes, cell " + cx.name(v.cell) +
                             " violates the Morse conditions");

  // Step 3: walk the 0-cells; the only violations left are the sibling
  // sites {u,v} with tau(u) = tau(v), which get one diagonal raised (the
  // raised cell becomes critical).  All other classes are assertions.
  for (int i = 0; i < static_cast<int>(d2.cells0().size()); ++i) {
    const Cell0& c = d2.cells0()[i];
    CellId kappa{0, i};

    std::vector<int> ups;  // cofaces valued <= the 0-cell
    for (const auto& entry : cx.cofaces(kappa))
      if (f({1, entry.cell}) <= f(kappa)) ups.push_back(entry.cell);
    std::sort(ups.begin(), ups.end());

    if (c.u == 1) {
      // Root-occupied pairs: {1,2} is critical, {1,v} pairs with 1 x e(v).
      if (c.v == 2) {
        if (!ups.empty())
          throw AssertionFailure("0-cell (1,2) should be critical");
      } else {
        const Edge& ev = g.edges()[tree.parent_edge(c.v)];
        int expect = d2.index1(make_cell1(1, ev.u, ev.v));
        if (ups.size() != 1 || ups[0] != expect)
          throw AssertionFailure("0-cell " + cx.name(kappa) +
                                 " should pair with 1 x e(" +
                                 std::to_string(c.v) + ")");
      }
      continue;
    }

    const Edge& eu = g.edges()[tree.parent_edge(c.u)];
    const Edge& ev = g.edges()[tree.parent_edge(c.v)];
    bool disjoint = !(eu.contains(ev.u) || eu.contains(ev.v));

    if (disjoint) {
      // Parent edges disjoint: the square fix already broke the tie; the
      // unraised diagonal remains as the unique pairing partner.
      if (ups.size() != 1 || raised[ups[0]])
        throw AssertionFailure("0-cell " + cx.name(kappa) +
                               " should pair with its unraised diagonal");
      continue;
    }

    if (tree.parent_of(c.u) == tree.parent_of(c.v)) {
      // Sibling site: exactly the two equal-valued diagonals remain.
      int b_u = d2.index1(make_cell1(c.u, ev.u, ev.v));  // u x e(v)
      int b_v = d2.index1(make_cell1(c.v, eu.u, eu.v));  // v x e(u)
      std::vector<int> expect{b_u, b_v};
      std::sort(expect.begin(), expect.end());
      if (b_u < 0 || b_v < 0 || ups != expect ||
          f({1, b_u}) != f(kappa) || f({1, b_v}) != f(kappa))
        throw AssertionFailure("sibling site " + cx.name(kappa) +
                               " does not match its expected diagonals");
      bool pick_u = policy == TieBreak::MinVertexFirst;  // c.u < c.v
      raise_one(pick_u ? b_u : b_v, kappa, log.sibling_fixes);
      continue;
    }

    // Parent-child pair: tau(v) = u; pairs with v x e(u).
    if (tree.parent_of(c.v) != c.u)
      throw AssertionFailure("0-cell " + cx.name(kappa) +
                             " fits no repair class");
    int expect = d2.index1(make_cell1(c.v, eu.u, eu.v));
    if (ups.size() != 1 || ups[0] != expect)
      throw AssertionFailure("0-cell " + cx.name(kappa) +
                             " should pair with " + std::to_string(c.v) +
                             " x e(" + std::to_string(c.u) + ")");
  }

  if (!check_morse(cx, f).empty())
    throw AssertionFailure("repair did not produce a Morse function");

  return {std::move(f), std::move(log)};
}

PredictedCritical classify_critical(const Graph& g,
                                    const RootedSpanningTree& tree,
                                    TieBreak policy) {
  PredictedCritical out;
  const int n = g.vertex_count();
  const auto& edges = g.edges();

  if (n >= 2) out.dim0.push_back(Cell0{1, 2});

  std::vector<int> deleted;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (!tree.is_tree_edge(i)) deleted.push_back(i);

  // (a) parked particle next to (or at the root relative to) a deleted edge
  // the other particle travels.
  for (int v = 1; v <= n; ++v)
    for (int ei : deleted) {
      const Edge& e = edges[ei];
      if (e.contains(v)) continue;
      bool crit = (v == 1) || e.contains(tree.parent_of(v));
      if (crit) out.dim1.push_back(make_cell1(v, e.u, e.v));
    }

  // (b) the policy-raised diagonal of each sibling pair.
  for (int u = 2; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (tree.parent_of(u) != tree.parent_of(v)) continue;
      const Edge& eu = edges[tree.parent_edge(u)];
      const Edge& ev = edges[tree.parent_edge(v)];
      out.dim1.push_back(policy == TieBreak::MinVertexFirst
                             ? make_cell1(u, ev.u, ev.v)
                             : make_cell1(v, eu.u, eu.v));
    }

  for (std::size_t i = 0; i < deleted.size(); ++i)
    for (std::size_t j = i + 1; j < deleted.size(); ++j) {
      const Edge &e = edges[deleted[i]], &f = edges[deleted[j]];
      if (e.contains(f.u) || e.contains(f.v)) continue;
      out.dim2.push_back(make_cell2(e.u, e.v, f.u, f.v));
    }

  std::sort(out.dim0.begin(), out.dim0.end());
  std::sort(out.dim1.begin(), out.dim1.end());
  std::sort(out.dim2.begin(), out.dim2.end());
  return out;
}

}  // namespace gcmorse

#include "gcmorse/verify.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include <json.hpp>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

GraphInput make_input(int vertices, std::vector<std::pair<int, int>> edges,
                      std::optional<std::vector<std::pair<int, int>>> tree =
                          std::nullopt,
                      std::optional<int> root = std::nullopt) {
  GraphInput in;
  in.vertices = vertices;
  in.edges = std::move(edges);
  in.tree = std::move(tree);
  in.root = root;
  return in;
}

std::vector<std::pair<int, int>> complete_graph_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> cycle_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return edges;
}

// Inclusive uniform draw from the raw generator stream; the tiny modulo
// bias is irrelevant here and the sequence is platform-independent (the
// standard distributions are not).
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <class T>
void shuffle_in_place(std::mt19937_64& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[i], v[draw(rng, 0, i)]);
}

}  // namespace

std::vector<VerifySample> named_corpus() {
  std::vector<VerifySample> corpus;

  corpus.push_back({"single-edge", make_input(2, {{1, 2}})});
  corpus.push_back({"path-3", make_input(3, {{1, 2}, {2, 3}})});
  corpus.push_back({"path-4", make_input(4, {{1, 2}, {2, 3}, {3, 4}})});
  corpus.push_back({"star-center-1", make_input(4, {{1, 2}, {1, 3}, {1, 4}})});
  corpus.push_back({"star-center-2", make_input(4, {{1, 2}, {2, 3}, {2, 4}})});
  corpus.push_back(
      {"spider-3x2",
       make_input(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}})});

  corpus.push_back(
      {"lasso", make_input(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}},
                           {{{1, 2}, {2, 3}, {2, 4}}})});
  corpus.push_back(
      {"lasso-default-tree", make_input(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}})});
  corpus.push_back(
      {"bowtie",
       make_input(5, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {2, 5}, {4, 5}},
                  {{{1, 2}, {2, 3}, {2, 4}, {2, 5}}})});
  corpus.push_back(
      {"bowtie-default-tree",
       make_input(5, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {2, 5}, {4, 5}})});

  corpus.push_back({"triangle", make_input(3, cycle_edges(3))});
  corpus.push_back({"cycle-4", make_input(4, cycle_edges(4))});
  corpus.push_back({"cycle-5", make_input(5, cycle_edges(5))});
  corpus.push_back({"cycle-6", make_input(6, cycle_edges(6))});

  corpus.push_back({"k4", make_input(4, complete_graph_edges(4))});
  corpus.push_back({"k5", make_input(5, complete_graph_edges(5))});
  corpus.push_back(
      {"k23", make_input(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})});
  corpus.push_back(
      {"k33", make_input(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                             {3, 4}, {3, 5}, {3, 6}})});

  corpus.push_back(
      {"theta",
       make_input(5, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}})});
  corpus.push_back(
      {"cube-q3",
       make_input(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8},
                      {8, 5}, {1, 5}, {2, 6}, {3, 7}, {4, 8}})});
  corpus.push_back(
      {"petersen",
       make_input(10, {{1, 2}, {2, 3}, {3, 4},  {4, 5},  {5, 1},
                       {1, 6}, {2, 7}, {3, 8},  {4, 9},  {5, 10},
                       {6, 8}, {8, 10}, {10, 7}, {7, 9},  {9, 6}})});

  return corpus;
}

GraphInput random_connected_graph(std::mt19937_64& rng, int min_vertices,
                                  int max_vertices) {
  const int n = draw(rng, min_vertices, max_vertices);

  // Random spanning tree: attach each vertex to a random earlier one.
  std::vector<std::pair<int, int>> tree;
  for (int v = 2; v <= n; ++v) tree.emplace_back(draw(rng, 1, v - 1), v);

  std::vector<std::pair<int, int>> extras;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      bool in_tree = std::any_of(tree.begin(), tree.end(), [&](auto& e) {
        return (e.first == u && e.second == v) ||
               (e.first == v && e.second == u);
      });
      if (!in_tree) extras.emplace_back(u, v);
    }
  shuffle_in_place(rng, extras);
  extras.resize(draw(rng, 0, static_cast<int>(extras.size())));

  // Random relabeling, so low labels carry no structural bias.
  std::vector<int> label(n + 1);
  std::iota(label.begin(), label.end(), 0);
  for (int i = n; i > 1; --i) std::swap(label[i], label[draw(rng, 1, i)]);

  auto mapped = [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto& [u, v] : edges) {
      int a = label[u], b = label[v];
      if (draw(rng, 0, 1)) std::swap(a, b);
      out.emplace_back(a, b);
    }
    return out;
  };

  GraphInput in;
  in.vertices = n;
  in.edges = mapped(tree);
  for (auto& e : mapped(extras)) in.edges.push_back(e);
  shuffle_in_place(rng, in.edges);

  // A third of the samples exercise the explicit-tree path, half of those
  // additionally the explicit-root path (any leaf of the requested tree).
  if (draw(rng, 0, 2) == 0) {
    auto requested = mapped(tree);
    shuffle_in_place(rng, requested);
    in.tree = requested;
    if (n >= 2 && draw(rng, 0, 1) == 0) {
      std::vector<int> degree(n + 1, 0);
      for (auto& [u, v] : requested) {
        ++degree[u];
        ++degree[v];
      }
      std::vector<int> leaves;
      for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.push_back(v);
      in.root = leaves[draw(rng, 0, static_cast<int>(leaves.size()) - 1)];
    }
  }
  return in;
}

std::string serialize_graph(const GraphInput& input) {
  nlohmann::ordered_json j;
  j["vertices"] = input.vertices;
  auto edge_array = [](const std::vector<std::pair<int, int>>& edges) {
    auto arr = nlohmann::ordered_json::array();
    for (auto& [u, v] : edges) arr.push_back({u, v});
    return arr;
  };
  j["edges"] = edge_array(input.edges);
  if (input.tree) j["tree"] = edge_array(*input.tree);
  if (input.root) j["root"] = *input.root;
  if (input.adjacency_order) j["adjacency_order"] = *input.adjacency_order;
  return j.dump();
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::int64_t to_int64(const Int& x) { return x.convert_to<std::int64_t>(); }

}  // namespace

std::vector<std::string> check_invariants(const PipelineResult& r) {
  std::vector<std::string> out;
  auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };
  const Complex& cx = r.d2.complex();
  const Graph& g = r.graph;
  const int n = g.vertex_count();

  // Relabeling is a permutation with preorder-compatible parents.
  {
    auto sorted = r.new_label;
    std::sort(sorted.begin(), sorted.end());
    bool perm = static_cast<int>(sorted.size()) == n;
    for (int v = 1; v <= n && perm; ++v) perm = sorted[v - 1] == v;
    for (int v = 1; v <= n && perm; ++v)
      perm = r.new_label[r.old_label[v - 1] - 1] == v;
    if (!perm) fail("relabeling is not an inverse pair of permutations");
    if (r.tree.root != 1) fail("relabeled tree root is not vertex 1");
    for (int v = 2; v <= n; ++v)
      if (r.tree.parent_of(v) >= v)
        fail("parent label not smaller at vertex " + std::to_string(v));
  }

  // One-particle function: parent-edge bijection and critical cells
  // (vertex 1 plus the deleted edges) via the generic Morse machinery on
  // the graph itself.
  {
    if (static_cast<int>(r.f1.deleted_edges.size()) != g.first_betti())
      fail("deleted edge count differs from the first Betti number");
    std::vector<std::int64_t> tree_values;
    for (int v = 2; v <= n; ++v) {
      if (r.f1.edge(r.tree.parent_edge(v)) != r.f1.vertex(v))
        fail("parent edge of " + std::to_string(v) +
             " does not carry the vertex value");
      tree_values.push_back(r.f1.edge(r.tree.parent_edge(v)));
    }
    std::sort(tree_values.begin(), tree_values.end());
    if (std::adjacent_find(tree_values.begin(), tree_values.end()) !=
        tree_values.end())
      fail("parent-edge map is not a bijection onto tree edges");

    try {
      Complex gc = g.as_complex();
      CellFunction f1c(gc);
      for (int v = 1; v <= n; ++v) f1c.set({0, v - 1}, r.f1.vertex(v));
      for (int e = 0; e < static_cast<int>(g.edges().size()); ++e)
        f1c.set({1, e}, r.f1.edge(e));
      GradientField gf = build_gradient_field(gc, f1c);
      if (gf.critical(0) != std::vector<int>{0})
        fail("one-particle critical 0-cells are not exactly vertex 1");
      if (gf.critical(1) != r.f1.deleted_edges)
        fail("one-particle critical 1-cells are not the deleted edges");
    } catch (const Error& e) {
      fail(std::string("one-particle function: ") + e.what());
    }
  }

  if (!check_abrams(g, 2).ok())
    fail("two-particle subdivision conditions fail on a simple graph");

  // Repaired function and its audit trail.
  if (!check_morse(cx, r.f2).empty())
    fail("repaired function violates the Morse conditions");
  {
    CellFunction expected = r.trial;
    std::vector<char> raised(cx.size(1), 0);
    auto apply = [&](const RepairFix& fix, bool square) {
      if (fix.raised_1cell < 0 || fix.raised_1cell >= cx.size(1)) {
        fail("repair log names an out-of-range 1-cell");
        return;
      }
      if (raised[fix.raised_1cell]++)
        fail("1-cell raised twice: " + cx.name({1, fix.raised_1cell}));
      expected.raise({1, fix.raised_1cell}, 1);
      const Cell1& b = r.d2.cells1()[fix.raised_1cell];
      if (square) {
        expected.raise(fix.site, 1);
        const Cell2& s = r.d2.cells2()[fix.site.idx];
        int e1 = g.edge_index(s.a, s.b), e2 = g.edge_index(s.c, s.d);
        if (!r.tree.is_tree_edge(e1) || !r.tree.is_tree_edge(e2))
          fail("square fix at " + cx.name(fix.site) +
               " has a non-tree factor");
        bool diag = (b.j == s.a && b.k == s.b && (b.vertex == s.c || b.vertex == s.d)) ||
                    (b.j == s.c && b.k == s.d && (b.vertex == s.a || b.vertex == s.b));
        if (!diag)
          fail("square fix raised a non-diagonal cell " + cx.name({1, fix.raised_1cell}));
      } else {
        const Cell0& s = r.d2.cells0()[fix.site.idx];
        if (r.tree.parent_of(s.u) != r.tree.parent_of(s.v))
          fail("sibling fix at a non-sibling 0-cell " + cx.name(fix.site));
        bool diag =
            (b.vertex == s.u &&
             g.edge_index(b.j, b.k) == r.tree.parent_edge(s.v)) ||
            (b.vertex == s.v &&
             g.edge_index(b.j, b.k) == r.tree.parent_edge(s.u));
        if (!diag)
          fail("sibling fix raised a non-diagonal cell " +
               cx.name({1, fix.raised_1cell}));
      }
    };
    for (const RepairFix& fix : r.log.square_fixes) apply(fix, true);
    for (const RepairFix& fix : r.log.sibling_fixes) apply(fix, false);
    for (int d = 0; d < 3; ++d)
      for (int i = 0; i < cx.size(d); ++i)
        if (expected(CellId{d, i}) != r.f2(CellId{d, i})) {
          fail("repair log does not account for the change at " +
               cx.name({d, i}));
          d = 3;
          break;
        }
  }

  // Gradient field: acyclic, properly partitioned, critical sets matching
  // the closed-form classification.
  if (!check_acyclic(cx, r.field)) fail("gradient field has a closed V-path");
  {
    std::array<int, 3> heads{}, tails{}, crits{};
    for (int d = 0; d < 3; ++d)
      for (int i = 0; i < cx.size(d); ++i) {
        switch (r.field.role(CellId{d, i})) {
          case CellRole::Head: ++heads[d]; break;
          case CellRole::Tail: ++tails[d]; break;
          case CellRole::Critical: ++crits[d]; break;
        }
      }
    if (heads[0] != 0 || tails[2] != 0)
      fail("field pairs run in the wrong direction");
    if (tails[0] != heads[1] || tails[1] != heads[2])
      fail("field tail and head counts do not match across dimensions");
    if (static_cast<std::size_t>(tails[0] + tails[1]) !=
        r.field.pairs().size())
      fail("field pair list does not match cell roles");
    for (int d = 0; d < 3; ++d)
      if (crits[d] != static_cast<int>(r.mc.critical[d].size()))
        fail("critical count mismatch in dimension " + std::to_string(d));
  }
  {
    PredictedCritical pred = classify_critical(g, r.tree, r.log.policy);
    std::vector<int> p0, p1, p2;
    for (const Cell0& c : pred.dim0) p0.push_back(r.d2.index0(c));
    for (const Cell1& c : pred.dim1) p1.push_back(r.d2.index1(c));
    for (const Cell2& c : pred.dim2) p2.push_back(r.d2.index2(c));
    if (p0 != r.mc.critical[0] || p1 != r.mc.critical[1] ||
        p2 != r.mc.critical[2])
      fail("closed-form critical classification differs from the realized field");
  }

  // Boundary compositions and homology, both routes.
  if (!boundary_matrix(cx, 1).multiplied_by(boundary_matrix(cx, 2)).is_zero())
    fail("full complex boundary maps do not compose to zero");
  if (!r.mc.boundary1.multiplied_by(r.mc.boundary2).is_zero())
    fail("Morse boundary maps do not compose to zero");
  if (!r.mc.boundary1.is_zero())
    fail("Morse boundary into dimension 0 is not zero");
  if (!(r.morse_h1 == r.oracle.h1))
    fail("Morse homology differs from the cellular oracle");
  if (r.agreement != (r.morse_h1 == r.oracle.h1))
    fail("agreement flag is inconsistent");
  if (r.oracle.h0_rank != 1)
    fail("oracle H0 rank is not 1 for a connected graph");
  {
    const auto m0 = static_cast<long long>(r.mc.critical[0].size());
    const auto m1 = static_cast<long long>(r.mc.critical[1].size());
    const auto m2 = static_cast<long long>(r.mc.critical[2].size());
    if (m0 < r.oracle.h0_rank || m1 < r.oracle.h1.free_rank ||
        m2 < r.oracle.h2_rank)
      fail("Morse inequalities violated");
    if (m0 - m1 + m2 != cx.euler_characteristic())
      fail("alternating critical count differs from the Euler characteristic");
  }

  // Gauge potential shape.
  {
    const GaugePotential& pot = r.gauge;
    if (static_cast<int>(pot.edge_expr.size()) != cx.size(1))
      fail("gauge potential does not cover the 1-cells");
    if (pot.params.size() != r.mc.critical[1].size())
      fail("gauge parameter count differs from the critical 1-cell count");
    for (int i = 0; i < static_cast<int>(pot.params.size()); ++i) {
      if (pot.params[i].cell != r.mc.critical[1][i])
        fail("gauge parameter order does not follow the critical 1-cells");
      else if (!(pot.expr(pot.params[i].cell) == PhaseExpr::parameter(i)))
        fail("critical 1-cell does not carry its own parameter");
    }
    int head_count = 0;
    UnionFind uf(cx.size(0));
    for (int i = 0; i < cx.size(1); ++i) {
      CellId c{1, i};
      if (!r.field.is_head(c)) continue;
      ++head_count;
      if (!pot.expr(i).is_zero())
        fail("head 1-cell has a nonzero phase: " + cx.name(c));
      auto fs = cx.faces(c);
      if (!uf.unite(fs[0].cell, fs[1].cell))
        fail("head 1-cells contain a cycle through " + cx.name(c));
    }
    if (head_count != cx.size(0) - 1)
      fail("head 1-cells do not form a spanning tree of the 0-cells");
    for (int i = 0; i < cx.size(2); ++i) {
      if (!r.field.is_head(CellId{2, i})) continue;
      PhaseExpr f;
      for (const auto& entry : cx.faces(CellId{2, i}))
        f.add_scaled(pot.expr(entry.cell), entry.sign);
      if (!f.is_zero())
        fail("paired square has nonzero flux: " + cx.name({2, i}));
    }
    if (static_cast<int>(pot.constraints.size()) != r.mc.boundary2.cols())
      fail("constraint count differs from the critical 2-cell count");
    else
      for (int col = 0; col < r.mc.boundary2.cols(); ++col) {
        const auto& [cell, expr] = pot.constraints[col];
        PhaseExpr expect;
        for (int row = 0; row < r.mc.boundary2.rows(); ++row) {
          const Int& v = r.mc.boundary2.at(row, col);
          if (v != 0) expect.coeffs[row] = to_int64(v);
        }
        if (cell != r.mc.critical[2][col] || !(expr == expect))
          fail("constraint does not mirror the Morse boundary column of " +
               cx.name({2, cell}));
      }
  }

  return out;
}

IntegerMatrix vpath_boundary_matrix(const Complex& complex,
                                    const GradientField& field,
                                    const MorseComplex& mc, int dim) {
  const auto& row_cells = mc.critical[dim - 1];
  const auto& col_cells = mc.critical[dim];
  std::vector<int> row_of(complex.size(dim - 1), -1);
  for (int r = 0; r < static_cast<int>(row_cells.size()); ++r)
    row_of[row_cells[r]] = r;

  IntegerMatrix out(static_cast<int>(row_cells.size()),
                    static_cast<int>(col_cells.size()));
  for (int col = 0; col < out.cols(); ++col) {
    CellId beta{dim, col_cells[col]};
    for (const auto& entry : complex.faces(beta)) {
      CellId start{dim - 1, entry.cell};
      for (const VPath& path : enumerate_vpaths(
               complex, field, std::span(&start, 1), VPathEnds::CriticalOnly))
        out.at(row_of[path.end().idx], col) += entry.sign * path.sign;
    }
  }
  return out;
}

std::vector<std::string> check_vpath_descent(const Complex& complex,
                                             const GradientField& field,
                                             const CellFunction& f) {
  std::vector<std::string> out;
  for (int d = 0; d <= 1; ++d) {
    std::vector<CellId> from;
    for (int i = 0; i < complex.size(d); ++i) from.push_back({d, i});
    for (const VPath& p :
         enumerate_vpaths(complex, field, from, VPathEnds::Any)) {
      for (std::size_t i = 0; i + 1 < p.cells.size(); i += 2) {
        if (f(p.cells[i + 1]) > f(p.cells[i]))
          out.push_back("V-path pair step increases the value at " +
                        complex.name(p.cells[i]));
        if (i + 2 < p.cells.size() && f(p.cells[i + 2]) >= f(p.cells[i + 1]))
          out.push_back("V-path boundary step fails to descend below " +
                        complex.name(p.cells[i + 1]));
      }
    }
  }
  return out;
}

std::vector<std::string> verify_graph(const GraphInput& input,
                                      bool cross_vpath) {
  std::vector<std::string> failures;
  std::optional<HomologyResult> h1_min, h1_max;

  for (TieBreak policy : {TieBreak::MinVertexFirst, TieBreak::MaxVertexFirst}) {
    std::string tag = std::string("[policy=") + to_string(policy) + "] ";
    try {
      PipelineResult r = run_pipeline(input, policy);
      for (auto& msg : check_invariants(r)) failures.push_back(tag + msg);
      if (cross_vpath) {
        const Complex& cx = r.d2.complex();
        if (!(vpath_boundary_matrix(cx, r.field, r.mc, 1) == r.mc.boundary1))
          failures.push_back(
              tag + "V-path enumeration differs from substitution flow (dim 1)");
        if (!(vpath_boundary_matrix(cx, r.field, r.mc, 2) == r.mc.boundary2))
          failures.push_back(
              tag + "V-path enumeration differs from substitution flow (dim 2)");
        for (auto& msg : check_vpath_descent(cx, r.field, r.f2))
          failures.push_back(tag + msg);
      }
      (policy == TieBreak::MinVertexFirst ? h1_min : h1_max) = r.morse_h1;
    } catch (const Error& e) {
      failures.push_back(tag + "exception: " + e.what());
    }
  }

  if (h1_min && h1_max && !(*h1_min == *h1_max))
    failures.push_back("homology differs between tie-break policies");
  return failures;
}

VerifyResult run_verify(int max_vertices, int samples, std::uint64_t seed) {
  if (max_vertices < 2 || max_vertices > 10)
    throw InputError("verify: max vertices must be between 2 and 10");
  if (samples < 0) throw InputError("verify: sample count must be >= 0");

  VerifyResult res;
  auto check = [&](const std::string& label, const GraphInput& input) {
    for (auto& msg : verify_graph(input, input.vertices <= 6))
      res.failures.push_back(label + ": " + msg);
    ++res.graphs_checked;
  };

  for (const VerifySample& s : named_corpus()) check("named " + s.name, s.input);

  std::mt19937_64 rng(seed);
  const int min_vertices = std::min(3, max_vertices);
  for (int k = 0; k < samples; ++k) {
    GraphInput input = random_connected_graph(rng, min_vertices, max_vertices);
    check("sample " + std::to_string(k) + " " + serialize_graph(input), input);
  }
  return res;
}

}  // namespace gcmorse

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gcmorse/cells.hpp"

namespace gcmorse {

// Undirected edge with endpoints stored sorted (u < v).
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
  bool contains(int x) const { return x == u || x == v; }
  int other(int x) const { return x == u ? v : u; }
};

// Finite connected simple graph on vertex labels 1..vertex_count().
// Edge order and per-vertex neighbour order are preserved from the input;
// both are meaningful downstream (tree construction, preorder labeling).
class Graph {
 public:
  // Neighbour lists default to input edge order; an explicit per-vertex
  // neighbour ordering may be supplied instead (it must list exactly the
  // neighbours of each vertex).
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs,
        const std::optional<std::vector<std::vector<int>>>& adjacency_order =
            std::nullopt);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v - 1]; }

  // Index into edges() of {u,v}, or -1 if absent.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  // |E| - |V| + 1 (first Betti number of a connected graph).
  int first_betti() const {
    return static_cast<int>(edges_.size()) - n_ + 1;
  }

  // The graph as a 1-dimensional cell complex; edge {i,j} (i<j) gets
  // boundary +j - i.  Vertex k is 0-cell k-1; edge order is preserved.
  Complex as_complex() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // [v-1] = neighbours of v, in order
};

// Spanning tree with a chosen root of tree-valency 1.  The parent map tau
// lives on the same labels as the graph; after relabel_by_tree the labels
// are preorder-consistent (every parent label < child label).
struct RootedSpanningTree {
  int root = 1;
  std::vector<int> parent;           // [v-1] = tau(v); 0 for the root
  std::vector<int> parent_edge_idx;  // [v-1] = edge index of {v,tau(v)}; -1 for root
  std::vector<int> tree_edges;       // edge indices, ascending
  std::vector<char> in_tree;         // by edge index

  int parent_of(int v) const { return parent[v - 1]; }
  int parent_edge(int v) const { return parent_edge_idx[v - 1]; }
  bool is_tree_edge(int edge_idx) const { return in_tree[edge_idx] != 0; }
};

// Builds a rooted spanning tree.  Default tree: depth-first from the
// lowest-index vertex following neighbour order.  Default root: the
// lowest-index valency-1 vertex of the tree.  A requested tree must span the
// graph (else NotATree); a requested root must be a tree leaf (else BadRoot).
RootedSpanningTree build_spanning_tree(
    const Graph& graph,
    const std::optional<std::vector<std::pair<int, int>>>& requested_tree =
        std::nullopt,
    std::optional<int> requested_root = std::nullopt);

struct RelabeledGraph {
  Graph graph;              // same graph, vertices renamed
  RootedSpanningTree tree;  // same tree on the new labels; root = 1
  std::vector<int> new_label;  // [old v - 1] -> new label
  std::vector<int> old_label;  // [new v - 1] -> old label
};

// Renames vertices 1..|V| by depth-first preorder from the tree root,
// visiting children in neighbour order, so every parent label is smaller
// than its children's labels.  Edge order is preserved (endpoints renamed
// in place); neighbour lists keep their positional order.
RelabeledGraph relabel_by_tree(const Graph& graph,
                               const RootedSpanningTree& tree);

// Vertex and edge values of the one-particle Morse function determined by a
// preorder-labeled rooted spanning tree: vertex k gets 2k-2, a tree edge the
// larger endpoint value, a deleted (non-tree) edge the larger endpoint value
// plus 2.  Critical cells on the graph are vertex 1 and the deleted edges.
struct OneParticleMorse {
  std::vector<std::int64_t> vertex_value;  // [v-1]
  std::vector<std::int64_t> edge_value;    // by edge index
  std::vector<int> deleted_edges;          // edge indices, ascending

  std::int64_t vertex(int v) const { return vertex_value[v - 1]; }
  std::int64_t edge(int e) const { return edge_value[e]; }
};

// Requires the tree to be preorder-labeled (as produced by relabel_by_tree).
OneParticleMorse build_f1(const Graph& graph, const RootedSpanningTree& tree);

}  // namespace gcmorse

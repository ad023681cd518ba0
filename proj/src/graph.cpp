#include "gcmorse/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

std::string edge_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Disjoint-set forest used for tree validation.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Returns false if x and y were already joined.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Graph::Graph(int vertex_count,
             const std::vector<std::pair<int, int>>& edge_pairs,
             const std::optional<std::vector<std::vector<int>>>& adjacency_order)
    : n_(vertex_count) {
  if (n_ < 1) throw InputError("vertex count must be positive");

  std::map<std::pair<int, int>, int> seen;
  adj_.resize(n_);
  for (const auto& [a, b] : edge_pairs) {
    if (a < 1 || a > n_ || b < 1 || b > n_)
      throw InputError("edge endpoint out of range: " + edge_name(a, b));
    if (a == b)
      throw InputError("loop edge not allowed at vertex " +
                       std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.emplace(std::make_pair(e.u, e.v), (int)edges_.size()).second)
      throw InputError("duplicate edge " + edge_name(e.u, e.v));
    edges_.push_back(e);
    adj_[a - 1].push_back(b);
    adj_[b - 1].push_back(a);
  }

  if (adjacency_order) {
    if (static_cast<int>(adjacency_order->size()) != n_)
      throw InputError("adjacency order must list every vertex");
    for (int v = 1; v <= n_; ++v) {
      const auto& given = (*adjacency_order)[v - 1];
      auto sorted_given = given;
      auto sorted_have = adj_[v - 1];
      std::sort(sorted_given.begin(), sorted_given.end());
      std::sort(sorted_have.begin(), sorted_have.end());
      if (sorted_given != sorted_have)
        throw InputError(
            "adjacency order for vertex " + std::to_string(v) +
            " does not match its neighbour set");
      adj_[v - 1] = given;
    }
  }

  // Connectivity (single component) via depth-first search from vertex 1.
  std::vector<char> visited(n_, 0);
  std::vector<int> stack{1};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v - 1])
      if (!visited[w - 1]) {
        visited[w - 1] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n_) throw Disconnected("not connected");
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    if (edges_[i].u == u && edges_[i].v == v) return i;
  return -1;
}

Complex Graph::as_complex() const {
  std::array<std::vector<std::string>, 3> names;
  for (int v = 1; v <= n_; ++v) names[0].push_back(std::to_string(v));
  std::vector<std::vector<BoundaryEntry>> faces1;
  for (const Edge& e : edges_) {
    names[1].push_back(edge_name(e.u, e.v));
    faces1.push_back({{e.u - 1, -1}, {e.v - 1, +1}});
  }
  return Complex(std::move(names), std::move(faces1), {});
}

RootedSpanningTree build_spanning_tree(
    const Graph& graph,
    const std::optional<std::vector<std::pair<int, int>>>& requested_tree,
    std::optional<int> requested_root) {
  const int n = graph.vertex_count();
  std::vector<int> tree_edges;

  if (requested_tree) {
    if (static_cast<int>(requested_tree->size()) != n - 1)
      throw NotATree("requested tree: expected " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(requested_tree->size()));
    UnionFind uf(n);
    for (const auto& [a, b] : *requested_tree) {
      int idx = graph.edge_index(a, b);
      if (idx < 0)
        throw NotATree("requested tree: edge (" + std::to_string(a) + "," +
                       std::to_string(b) + ") is not a graph edge");
      if (!uf.unite(a - 1, b - 1))
        throw NotATree("requested tree: contains a cycle");
      tree_edges.push_back(idx);
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    if (std::adjacent_find(tree_edges.begin(), tree_edges.end()) !=
        tree_edges.end())
      throw NotATree("requested tree: duplicate edge");
  } else {
    // Depth-first tree from the lowest-index vertex, children taken in
    // neighbour order.
    std::vector<char> visited(n, 0);
    std::vector<std::pair<int, size_t>> stack{{1, 0}};  // (vertex, next nbr)
    visited[0] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = graph.neighbors(v);
      if (next >= nbrs.size()) {
        stack.pop_back();
        continue;
      }
      int w = nbrs[next++];
      if (!visited[w - 1]) {
        visited[w - 1] = 1;
        tree_edges.push_back(graph.edge_index(v, w));
        stack.push_back({w, 0});
      }
    }
    if (static_cast<int>(tree_edges.size()) != n - 1)
      throw Disconnected("not connected");  // unreachable for valid Graph
    std::sort(tree_edges.begin(), tree_edges.end());
  }

  RootedSpanningTree t;
  t.tree_edges = tree_edges;
  t.in_tree.assign(graph.edges().size(), 0);
  for (int idx : tree_edges) t.in_tree[idx] = 1;

  // Tree adjacency (neighbour order restricted to tree edges).
  std::vector<std::vector<int>> tadj(n);
  for (int v = 1; v <= n; ++v)
    for (int w : graph.neighbors(v))
      if (v < w && t.in_tree[graph.edge_index(v, w)] != 0) {
        tadj[v - 1].push_back(w);
        tadj[w - 1].push_back(v);
      }

  auto tree_valency = [&](int v) { return (int)tadj[v - 1].size(); };

  if (requested_root) {
    int r = *requested_root;
    if (r < 1 || r > n) throw BadRoot("requested root out of range");
    if (n > 1 && tree_valency(r) != 1)
      throw BadRoot("requested root " + std::to_string(r) +
                    " has tree-valency " + std::to_string(tree_valency(r)) +
                    ", need 1");
    t.root = r;
  } else if (n == 1) {
    t.root = 1;
  } else {
    int r = 0;
    for (int v = 1; v <= n; ++v)
      if (tree_valency(v) == 1) {
        r = v;
        break;
      }
    t.root = r;  // every tree with >= 2 vertices has a leaf
  }

  // Parent map by depth-first walk from the root over tree edges.
  t.parent.assign(n, 0);
  t.parent_edge_idx.assign(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<int> stack{t.root};
  visited[t.root - 1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : tadj[v - 1])
      if (!visited[w - 1]) {
        visited[w - 1] = 1;
        t.parent[w - 1] = v;
        t.parent_edge_idx[w - 1] = graph.edge_index(v, w);
        stack.push_back(w);
      }
  }
  if (std::count(visited.begin(), visited.end(), 1) != n)
    throw NotATree("requested tree: does not span the graph");

  return t;
}

RelabeledGraph relabel_by_tree(const Graph& graph,
                               const RootedSpanningTree& tree) {
  const int n = graph.vertex_count();

  // Tree adjacency in neighbour order (children are visited in this order).
  std::vector<std::vector<int>> tchildren(n);
  for (int v = 1; v <= n; ++v)
    for (int w : graph.neighbors(v))
      if (tree.in_tree[graph.edge_index(v, w)] != 0 && tree.parent_of(w) == v)
        tchildren[v - 1].push_back(w);

  // Iterative preorder: label on first visit, children pushed in reverse so
  // the first child in neighbour order is visited first.
  std::vector<int> new_label(n, 0), old_label(n, 0);
  std::vector<int> stack{tree.root};
  int next = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    new_label[v - 1] = next;
    old_label[next - 1] = v;
    ++next;
    const auto& kids = tchildren[v - 1];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
      stack.push_back(*it);
  }

  std::vector<std::pair<int, int>> new_edges;
  new_edges.reserve(graph.edges().size());
  for (const Edge& e : graph.edges())
    new_edges.emplace_back(new_label[e.u - 1], new_label[e.v - 1]);

  std::vector<std::vector<int>> new_adj(n);
  for (int v = 1; v <= n; ++v)
    for (int w : graph.neighbors(v))
      new_adj[new_label[v - 1] - 1].push_back(new_label[w - 1]);

  Graph renamed(n, new_edges, new_adj);

  // Same tree, renamed.  Edge order is preserved, so indices carry over.
  RootedSpanningTree rt;
  rt.root = 1;
  rt.tree_edges = tree.tree_edges;
  rt.in_tree = tree.in_tree;
  rt.parent.assign(n, 0);
  rt.parent_edge_idx.assign(n, -1);
  for (int v = 1; v <= n; ++v) {
    if (v == tree.root) continue;
    int nv = new_label[v - 1];
    rt.parent[nv - 1] = new_label[tree.parent_of(v) - 1];
    rt.parent_edge_idx[nv - 1] = tree.parent_edge(v);
  }
  return RelabeledGraph{std::move(renamed), std::move(rt),
                        std::move(new_label), std::move(old_label)};
}

OneParticleMorse build_f1(const Graph& graph, const RootedSpanningTree& tree) {
  const int n = graph.vertex_count();
  if (tree.root != 1)
    throw InputError("tree root must be labeled 1");
  for (int v = 2; v <= n; ++v)
    if (tree.parent_of(v) >= v)
      throw InputError(
          "tree is not preorder-labeled (parent of " +
          std::to_string(v) + " is " + std::to_string(tree.parent_of(v)) + ")");

  OneParticleMorse f;
  f.vertex_value.resize(n);
  for (int v = 1; v <= n; ++v) f.vertex_value[v - 1] = 2 * (v - 1);

  const auto& edges = graph.edges();
  f.edge_value.resize(edges.size());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    std::int64_t m = std::max(f.vertex(edges[i].u), f.vertex(edges[i].v));
    if (tree.is_tree_edge(i)) {
      f.edge_value[i] = m;
    } else {
      f.edge_value[i] = m + 2;
      f.deleted_edges.push_back(i);
    }
  }
  return f;
}

}  // namespace gcmorse

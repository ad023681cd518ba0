#include "gcmorse/config_complex.hpp"

#include <algorithm>
#include <utility>

#include "gcmorse/errors.hpp"

namespace gcmorse {

Cell0 make_cell0(int u, int v) {
  if (u > v) std::swap(u, v);
  return Cell0{u, v};
}

Cell1 make_cell1(int vertex, int j, int k) {
  if (j > k) std::swap(j, k);
  return Cell1{vertex, j, k};
}

Cell2 make_cell2(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (c < a) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return Cell2{a, b, c, d};
}

std::string name_of(const Cell0& c) {
  return "(" + std::to_string(c.u) + "," + std::to_string(c.v) + ")";
}

std::string name_of(const Cell1& c) {
  return std::to_string(c.vertex) + "x(" + std::to_string(c.j) + "," +
         std::to_string(c.k) + ")";
}

std::string name_of(const Cell2& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")x(" +
         std::to_string(c.c) + "," + std::to_string(c.d) + ")";
}

TwoParticleComplex::TwoParticleComplex(Graph graph, std::vector<Cell0> cells0,
                                       std::vector<Cell1> cells1,
                                       std::vector<Cell2> cells2,
                                       Complex complex)
    : graph_(std::move(graph)),
      cells0_(std::move(cells0)),
      cells1_(std::move(cells1)),
      cells2_(std::move(cells2)),
      complex_(std::move(complex)) {}

namespace {

// Cell lists are kept in sorted payload order, so membership is a binary
// search.
template <class Cell>
int lookup(const std::vector<Cell>& cells, const Cell& c) {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it != cells.end() && *it == c) return static_cast<int>(it - cells.begin());
  return -1;
}

}  // namespace

int TwoParticleComplex::index0(const Cell0& c) const {
  return lookup(cells0_, make_cell0(c.u, c.v));
}

int TwoParticleComplex::index1(const Cell1& c) const {
  return lookup(cells1_, make_cell1(c.vertex, c.j, c.k));
}

int TwoParticleComplex::index2(const Cell2& c) const {
  return lookup(cells2_, make_cell2(c.a, c.b, c.c, c.d));
}

TwoParticleComplex build_d2(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n < 2)
    throw TooSmall("need at least 2 vertices to place two particles, got " +
                   std::to_string(n));

  std::vector<Cell0> cells0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) cells0.push_back(Cell0{u, v});

  std::vector<Cell1> cells1;
  for (int v = 1; v <= n; ++v)
    for (const Edge& e : graph.edges())
      if (!e.contains(v)) cells1.push_back(Cell1{v, e.u, e.v});
  std::sort(cells1.begin(), cells1.end());

  std::vector<Cell2> cells2;
  const auto& edges = graph.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(edges.size()); ++j) {
      const Edge &e = edges[i], &f = edges[j];
      if (e.contains(f.u) || e.contains(f.v)) continue;
      cells2.push_back(make_cell2(e.u, e.v, f.u, f.v));
    }
  std::sort(cells2.begin(), cells2.end());

  std::array<std::vector<std::string>, 3> names;
  for (const auto& c : cells0) names[0].push_back(name_of(c));
  for (const auto& c : cells1) names[1].push_back(name_of(c));
  for (const auto& c : cells2) names[2].push_back(name_of(c));

  auto idx0 = [&](int u, int v) {
    return lookup(cells0, make_cell0(u, v));
  };
  auto idx1 = [&](int vertex, int j, int k) {
    return lookup(cells1, make_cell1(vertex, j, k));
  };

  // Boundary of v x {j,k} (j < k): +{v,k} - {v,j}.
  std::vector<std::vector<BoundaryEntry>> faces1;
  faces1.reserve(cells1.size());
  for (const auto& c : cells1)
    faces1.push_back(
        {{idx0(c.vertex, c.j), -1}, {idx0(c.vertex, c.k), +1}});

  // Boundary of the square (e1,e2) = ({a,b},{c,d}):
  // (b x e2) - (a x e2) - (d x e1) + (c x e1).
  std::vector<std::vector<BoundaryEntry>> faces2;
  faces2.reserve(cells2.size());
  for (const auto& c : cells2)
    faces2.push_back({{idx1(c.b, c.c, c.d), +1},
                      {idx1(c.a, c.c, c.d), -1},
                      {idx1(c.d, c.a, c.b), -1},
                      {idx1(c.c, c.a, c.b), +1}});

  Complex complex(std::move(names), std::move(faces1), std::move(faces2));
  return TwoParticleComplex(graph, std::move(cells0), std::move(cells1),
                            std::move(cells2), std::move(complex));
}

AbramsReport check_abrams(const Graph& graph, int n_particles) {
  const int n = graph.vertex_count();
  AbramsReport report;

  std::vector<char> essential(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    essential[v] = static_cast<int>(graph.neighbors(v).size()) != 2;

  // Condition 1: no simple path with fewer than n_particles-1 edges between
  // two distinct essential vertices.  Bounded-depth DFS from each essential
  // vertex; paths recorded once (smaller endpoint first).
  const int max_path_edges = n_particles - 2;  // violating length bound
  std::vector<int> path;
  std::vector<char> on_path(n + 1, 0);
  auto dfs_paths = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) > 1 && essential[v] &&
        path.front() < v)
      report.short_paths.push_back(path);
    if (static_cast<int>(path.size()) - 1 >= max_path_edges) return;
    for (int w : graph.neighbors(v)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  if (max_path_edges >= 1) {
    for (int s = 1; s <= n; ++s) {
      if (!essential[s]) continue;
      path = {s};
      on_path.assign(n + 1, 0);
      on_path[s] = 1;
      dfs_paths(dfs_paths, s);
    }
  }
  report.condition1 = report.short_paths.empty();

  // Condition 2: no cycle with fewer than n_particles+1 edges.  Bounded-depth
  // DFS restricted to vertices >= the start; each cycle recorded once by
  // requiring the second vertex to be smaller than the last.
  const int max_cycle_edges = n_particles;  // violating length bound
  auto dfs_cycles = [&](auto&& self, int start, int v) -> void {
    for (int w : graph.neighbors(v)) {
      if (w == start && static_cast<int>(path.size()) >= 3 &&
          path[1] < path.back()) {
        report.short_cycles.push_back(path);
        continue;
      }
      if (w <= start || on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_cycle_edges) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  if (max_cycle_edges >= 3) {
    for (int s = 1; s <= n; ++s) {
      path = {s};
      on_path.assign(n + 1, 0);
      on_path[s] = 1;
      dfs_cycles(dfs_cycles, s, s);
    }
  }
  report.condition2 = report.short_cycles.empty();

  return report;
}

}  // namespace gcmorse

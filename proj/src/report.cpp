#include "gcmorse/report.hpp"

#include <sstream>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

std::int64_t to_int64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw InvariantError("integer too large for JSON emission");
  return static_cast<std::int64_t>(x);
}

Json edges_json(const std::vector<std::pair<int, int>>& edges) {
  Json arr = Json::array();
  for (const auto& [a, b] : edges) arr.push_back(Json::array({a, b}));
  return arr;
}

Json homology_json(const HomologyResult& h) {
  Json t = Json::array();
  for (const Int& d : h.torsion) t.push_back(to_int64(d));
  return Json{{"h1_free_rank", h.free_rank}, {"h1_torsion", t}};
}

Json matrix_json(const Complex& cx, const IntegerMatrix& m,
                 const std::vector<int>& row_cells, int row_dim,
                 const std::vector<int>& col_cells, int col_dim) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (int i : row_cells) rows.push_back(cx.name(CellId{row_dim, i}));
  for (int j : col_cells) cols.push_back(cx.name(CellId{col_dim, j}));
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_int64(m.at(i, j)));
    entries.push_back(row);
  }
  return Json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

Json expr_json(const GaugePotential& pot, const PhaseExpr& e) {
  Json params = Json::object();
  for (const auto& [param, coeff] : e.coeffs)
    params[pot.params[param].name] = coeff;
  return Json{{"params", params}, {"const", e.constant}};
}

bool is_perfect(const PipelineResult& r) {
  return static_cast<int>(r.mc.critical[0].size()) == r.oracle.h0_rank &&
         static_cast<int>(r.mc.critical[1].size()) ==
             r.oracle.h1.free_rank &&
         static_cast<int>(r.mc.critical[2].size()) == r.oracle.h2_rank &&
         r.oracle.h1.torsion.empty();
}

}  // namespace

Json run_report(const PipelineResult& r) {
  const Complex& cx = r.d2.complex();

  Json input{{"vertices", r.input.vertices}, {"edges", edges_json(r.input.edges)}};
  input["tree"] = r.input.tree ? edges_json(*r.input.tree) : Json(nullptr);
  input["root"] = r.input.root ? Json(*r.input.root) : Json(nullptr);
  input["policy"] = to_string(r.log.policy);

  Json relabel = Json::array();
  for (int v = 1; v <= r.graph.vertex_count(); ++v)
    relabel.push_back(r.new_label[v - 1]);

  Json tree;
  tree["root"] = r.tree.root;
  Json parent = Json::object();
  for (int v = 1; v <= r.graph.vertex_count(); ++v)
    if (v != r.tree.root)
      parent[std::to_string(v)] = r.tree.parent_of(v);
  tree["parent"] = parent;
  Json tree_edges = Json::array(), deleted_edges = Json::array();
  for (int i = 0; i < static_cast<int>(r.graph.edges().size()); ++i) {
    const Edge& e = r.graph.edges()[i];
    (r.tree.is_tree_edge(i) ? tree_edges : deleted_edges)
        .push_back(Json::array({e.u, e.v}));
  }
  tree["tree_edges"] = tree_edges;
  tree["deleted_edges"] = deleted_edges;

  Json f1;
  Json vertex_values = Json::array();
  for (int v = 1; v <= r.graph.vertex_count(); ++v)
    vertex_values.push_back(r.f1.vertex(v));
  f1["vertex_values"] = vertex_values;
  Json edge_values = Json::array();
  for (int i = 0; i < static_cast<int>(r.graph.edges().size()); ++i) {
    const Edge& e = r.graph.edges()[i];
    edge_values.push_back(Json{{"edge", "(" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ")"},
                               {"value", r.f1.edge(i)},
                               {"deleted", !r.tree.is_tree_edge(i)}});
  }
  f1["edge_values"] = edge_values;

  auto abrams = check_abrams(r.graph, 2);
  Json complex_summary{{"cells0", cx.size(0)},
                       {"cells1", cx.size(1)},
                       {"cells2", cx.size(2)},
                       {"euler_characteristic", cx.euler_characteristic()},
                       {"abrams_condition1", abrams.condition1},
                       {"abrams_condition2", abrams.condition2}};

  Json function = Json::object();
  for (int d = 0; d < 3; ++d) {
    Json cells = Json::array();
    for (int i = 0; i < cx.size(d); ++i) {
      CellId c{d, i};
      cells.push_back(Json{{"cell", cx.name(c)},
                           {"trial", r.trial(c)},
                           {"value", r.f2(c)}});
    }
    function["dim" + std::to_string(d)] = cells;
  }

  auto fixes_json = [&](const std::vector<RepairFix>& fixes) {
    Json arr = Json::array();
    for (const RepairFix& fix : fixes)
      arr.push_back(Json{{"site", cx.name(fix.site)},
                         {"raised", cx.name(CellId{1, fix.raised_1cell})}});
    return arr;
  };
  Json repair_log{{"policy", to_string(r.log.policy)},
                  {"square_fixes", fixes_json(r.log.square_fixes)},
                  {"sibling_fixes", fixes_json(r.log.sibling_fixes)}};

  Json critical = Json::object();
  for (int d = 0; d < 3; ++d) {
    Json arr = Json::array();
    for (int i : r.mc.critical[d]) arr.push_back(cx.name(CellId{d, i}));
    critical["dim" + std::to_string(d)] = arr;
  }

  Json morse_boundary{
      {"boundary1", matrix_json(cx, r.mc.boundary1, r.mc.critical[0], 0,
                                r.mc.critical[1], 1)},
      {"boundary2", matrix_json(cx, r.mc.boundary2, r.mc.critical[1], 1,
                                r.mc.critical[2], 2)}};

  Json oracle = homology_json(r.oracle.h1);
  oracle["h0_rank"] = r.oracle.h0_rank;
  oracle["h2_rank"] = r.oracle.h2_rank;

  Json gauge_summary{
      {"num_params", static_cast<int>(r.gauge.params.size())},
      {"num_constraints",
       static_cast<int>(std::count_if(
           r.gauge.constraints.begin(), r.gauge.constraints.end(),
           [](const auto& c) { return !c.second.is_zero(); }))}};

  return Json{{"input", input},
              {"relabeling", relabel},
              {"spanning_tree", tree},
              {"f1", f1},
              {"complex", complex_summary},
              {"function", function},
              {"repair", repair_log},
              {"critical", critical},
              {"morse_boundary", morse_boundary},
              {"homology", homology_json(r.morse_h1)},
              {"oracle", oracle},
              {"agreement", r.agreement},
              {"perfect", is_perfect(r)},
              {"gauge", gauge_summary}};
}

Json gauge_report(const PipelineResult& r) {
  const Complex& cx = r.d2.complex();

  Json params = Json::array();
  for (const GaugeParam& p : r.gauge.params)
    params.push_back(
        Json{{"name", p.name}, {"edge", cx.name(CellId{1, p.cell})}});

  Json edges = Json::array();
  for (int i = 0; i < cx.size(1); ++i)
    edges.push_back(Json{{"edge", cx.name(CellId{1, i})},
                         {"expr", expr_json(r.gauge, r.gauge.edge_expr[i])}});

  Json constraints = Json::array();
  for (const auto& [cell, expr] : r.gauge.constraints)
    if (!expr.is_zero())
      constraints.push_back(Json{{"cell", cx.name(CellId{2, cell})},
                                 {"expr", expr_json(r.gauge, expr)}});

  Json input{{"vertices", r.input.vertices}, {"edges", edges_json(r.input.edges)}};
  input["policy"] = to_string(r.log.policy);

  return Json{{"input", input},
              {"params", params},
              {"edges", edges},
              {"constraints", constraints}};
}

std::string dot_skeleton(const PipelineResult& r) {
  const Complex& cx = r.d2.complex();

  std::vector<char> crit0(cx.size(0), 0), crit1(cx.size(1), 0);
  for (int i : r.mc.critical[0]) crit0[i] = 1;
  for (int i : r.mc.critical[1]) crit1[i] = 1;

  std::ostringstream dot;
  dot << "graph two_particle_skeleton {\n";
  dot << "  node [shape=ellipse];\n";
  for (int i = 0; i < cx.size(0); ++i) {
    dot << "  \"" << cx.name(CellId{0, i}) << "\" [label=\""
        << cx.name(CellId{0, i}) << "\\nf=" << r.f2(CellId{0, i}) << "\"";
    if (crit0[i]) dot << " penwidth=2 color=red";
    dot << "];\n";
  }
  for (int i = 0; i < cx.size(1); ++i) {
    CellId c{1, i};
    int from = -1, to = -1;
    for (const auto& entry : cx.faces(c))
      (entry.sign < 0 ? from : to) = entry.cell;
    dot << "  \"" << cx.name(CellId{0, from}) << "\" -- \""
        << cx.name(CellId{0, to}) << "\" [label=\"" << cx.name(c)
        << "\\nf=" << r.f2(c) << "\"";
    if (crit1[i]) dot << " penwidth=2 color=red";
    dot << "];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace gcmorse

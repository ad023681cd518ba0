#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "gcmorse/errors.hpp"
#include "gcmorse/io.hpp"
#include "gcmorse/pipeline.hpp"
#include "gcmorse/report.hpp"
#include "gcmorse/verify.hpp"

using namespace gcmorse;

namespace {

GraphInput lasso_input() {
  GraphInput in;
  in.vertices = 4;
  in.edges = {{1, 2}, {2, 3}, {2, 4}, {3, 4}};
  in.tree = {{{1, 2}, {2, 3}, {2, 4}}};
  return in;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("JSON graph parsing") {
  GraphInput in = parse_graph_json(
      R"({"vertices": 4, "edges": [[1,2],[2,3],[2,4],[3,4]],
          "tree": [[1,2],[2,3],[2,4]], "root": 1,
          "adjacency_order": [[2],[1,3,4],[2,4],[2,3]]})");
  CHECK(in.vertices == 4);
  CHECK(in.edges.size() == 4);
  CHECK(in.edges[3] == std::pair<int, int>{3, 4});
  REQUIRE(in.tree.has_value());
  CHECK(in.tree->size() == 3);
  CHECK(in.root == 1);
  REQUIRE(in.adjacency_order.has_value());
  CHECK((*in.adjacency_order)[1] == std::vector<int>{1, 3, 4});

  GraphInput minimal = parse_graph_json(R"({"vertices":2,"edges":[[1,2]]})");
  CHECK_FALSE(minimal.tree.has_value());
  CHECK_FALSE(minimal.root.has_value());
  CHECK_FALSE(minimal.adjacency_order.has_value());
}

TEST_CASE("malformed JSON graphs are rejected") {
  CHECK_THROWS_AS(parse_graph_json("{\"vertices\":"), InputError);
  CHECK_THROWS_AS(parse_graph_json("[1,2]"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges": [[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": "four", "edges": []})"),
                  InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": 3, "edges": [[1,2],[3]]})"),
                  InputError);
  CHECK_THROWS_AS(
      parse_graph_json(R"({"vertices": 2, "edges": [[1,2]], "root": "a"})"),
      InputError);
  CHECK_THROWS_AS(
      parse_graph_json(R"({"vertices": 2, "edges": [[1,2]], "tree": 7})"),
      InputError);
  CHECK_THROWS_AS(
      parse_graph_json(
          R"({"vertices": 2, "edges": [[1,2]], "adjacency_order": [2, 1]})"),
      InputError);
}

TEST_CASE("edge list parsing") {
  GraphInput in = parse_edge_list("# a comment\n1 2\n\n2 3\n  3 4\n");
  CHECK(in.vertices == 4);
  CHECK(in.edges ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(in.tree.has_value());

  CHECK(message_of([] { parse_edge_list("1 2\n2 3\n1 2 3\n"); })
            .find("line 3") != std::string::npos);
  CHECK_THROWS_AS(parse_edge_list("1 x\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("5\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n\n"), InputError);
}

TEST_CASE("file loading dispatches on content") {
  TempFile json_file("tmp_io_graph.json",
                     "  \n\t {\"vertices\":2,\"edges\":[[1,2]]}");
  GraphInput a = load_graph_file(json_file.path);
  CHECK(a.vertices == 2);

  TempFile list_file("tmp_io_graph.txt", "1 2\n2 3\n");
  GraphInput b = load_graph_file(list_file.path);
  CHECK(b.vertices == 3);
  CHECK(b.edges.size() == 2);

  CHECK_THROWS_AS(load_graph_file("tmp_io_no_such_file.txt"), InputError);
}

TEST_CASE("pipeline errors name the failing stage") {
  GraphInput disconnected;
  disconnected.vertices = 4;
  disconnected.edges = {{1, 2}, {3, 4}};
  std::string msg = message_of(
      [&] { run_pipeline(disconnected, TieBreak::MinVertexFirst); });
  CHECK(msg.find("graph:") == 0);

  GraphInput bad_tree = lasso_input();
  bad_tree.tree = {{{1, 2}, {2, 3}, {1, 3}}};
  msg = message_of([&] { run_pipeline(bad_tree, TieBreak::MinVertexFirst); });
  CHECK(msg.find("spanning-tree:") == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  PipelineResult a = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);
  PipelineResult b = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);
  CHECK(run_report(a).dump(2) == run_report(b).dump(2));
  CHECK(gauge_report(a).dump(2) == gauge_report(b).dump(2));
  CHECK(dot_skeleton(a) == dot_skeleton(b));
}

TEST_CASE("run report carries the pinned lasso facts") {
  PipelineResult r = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);
  Json j = run_report(r);
  CHECK(j["input"]["policy"] == "min");
  CHECK(j["relabeling"] == Json::array({1, 2, 3, 4}));
  CHECK(j["spanning_tree"]["root"] == 1);
  CHECK(j["spanning_tree"]["parent"]["4"] == 2);
  CHECK(j["spanning_tree"]["deleted_edges"] ==
        Json::array({Json::array({3, 4})}));
  CHECK(j["f1"]["vertex_values"] == Json::array({0, 2, 4, 6}));
  CHECK(j["complex"]["cells0"] == 6);
  CHECK(j["complex"]["cells1"] == 8);
  CHECK(j["complex"]["cells2"] == 1);
  CHECK(j["complex"]["euler_characteristic"] == -1);
  CHECK(j["complex"]["abrams_condition1"] == true);
  CHECK(j["complex"]["abrams_condition2"] == true);
  CHECK(j["repair"]["square_fixes"] == Json::array());
  REQUIRE(j["repair"]["sibling_fixes"].size() == 1);
  CHECK(j["repair"]["sibling_fixes"][0]["site"] == "(3,4)");
  CHECK(j["repair"]["sibling_fixes"][0]["raised"] == "3x(2,4)");
  CHECK(j["critical"]["dim0"] == Json::array({"(1,2)"}));
  CHECK(j["critical"]["dim1"] == Json::array({"1x(3,4)", "3x(2,4)"}));
  CHECK(j["critical"]["dim2"] == Json::array());
  CHECK(j["homology"]["h1_free_rank"] == 2);
  CHECK(j["homology"]["h1_torsion"] == Json::array());
  CHECK(j["oracle"]["h1_free_rank"] == 2);
  CHECK(j["oracle"]["h0_rank"] == 1);
  CHECK(j["oracle"]["h2_rank"] == 0);
  CHECK(j["agreement"] == true);
  CHECK(j["perfect"] == true);  // critical counts equal the Betti numbers
}

TEST_CASE("gauge report shape on the lasso") {
  PipelineResult r = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);
  Json j = gauge_report(r);
  REQUIRE(j["params"].size() == 2);
  CHECK(j["params"][0] == Json{{"name", "phi1"}, {"edge", "1x(3,4)"}});
  CHECK(j["params"][1] == Json{{"name", "phi2"}, {"edge", "3x(2,4)"}});
  CHECK(j["constraints"] == Json::array());
  bool found = false;
  for (const Json& e : j["edges"]) {
    if (e["edge"] == "2x(3,4)") {
      found = true;
      CHECK(e["expr"]["params"] == Json{{"phi1", 1}});
      CHECK(e["expr"]["const"] == 0);
    }
  }
  CHECK(found);
}

TEST_CASE("the skeleton drawing marks critical cells") {
  PipelineResult r = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);
  std::string dot = dot_skeleton(r);
  CHECK(dot.find("graph two_particle_skeleton {") != std::string::npos);
  CHECK(dot.find("\"(1,2)\" [label=\"(1,2)\\nf=2\" penwidth=2 color=red]") !=
        std::string::npos);
  CHECK(dot.find("label=\"3x(2,4)\\nf=11\" penwidth=2 color=red") !=
        std::string::npos);
  CHECK(dot.find("\"(1,3)\" -- \"(1,4)\"") != std::string::npos);
}

TEST_CASE("a single edge is handled end to end") {
  GraphInput in;
  in.vertices = 2;
  in.edges = {{1, 2}};
  PipelineResult r = run_pipeline(in, TieBreak::MinVertexFirst);
  CHECK(r.morse_h1 == HomologyResult{0, {}});
  CHECK(r.oracle.h0_rank == 1);
  CHECK(r.agreement);
  Json j = run_report(r);
  CHECK(j["perfect"] == true);
  CHECK(j["homology"]["h1_torsion"] == Json::array());
}

TEST_CASE("serialized inputs replay through the JSON parser") {
  GraphInput in = lasso_input();
  in.root = 1;
  GraphInput back = parse_graph_json(serialize_graph(in));
  CHECK(back.vertices == in.vertices);
  CHECK(back.edges == in.edges);
  CHECK(back.tree == in.tree);
  CHECK(back.root == in.root);
}

TEST_CASE("random graphs are deterministic for a fixed seed") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    GraphInput ga = random_connected_graph(a, 3, 7);
    GraphInput gb = random_connected_graph(b, 3, 7);
    CHECK(serialize_graph(ga) == serialize_graph(gb));
  }
}

TEST_CASE("the verification harness passes on a small run") {
  VerifyResult res = run_verify(4, 3, 123);
  for (const std::string& f : res.failures) MESSAGE(f);
  CHECK(res.ok());
  CHECK(res.graphs_checked ==
        static_cast<int>(named_corpus().size()) + 3);
  bool has_k5 = false, has_k33 = false;
  for (const VerifySample& s : named_corpus()) {
    has_k5 = has_k5 || s.name == "k5";
    has_k33 = has_k33 || s.name == "k33";
  }
  CHECK(has_k5);
  CHECK(has_k33);
}

TEST_CASE("verification rejects out-of-range sizes") {
  CHECK_THROWS_AS(run_verify(1, 5, 1), InputError);
  CHECK_THROWS_AS(run_verify(11, 5, 1), InputError);
}

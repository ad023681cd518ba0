// Acceptance gate: runs the six end-to-end checks this library must satisfy
// and prints one PASS/FAIL line per check.  Exits non-zero if any fails.
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcmorse/config_complex.hpp"
#include "gcmorse/gauge.hpp"
#include "gcmorse/homology.hpp"
#include "gcmorse/pipeline.hpp"
#include "gcmorse/report.hpp"
#include "gcmorse/verify.hpp"

using namespace gcmorse;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

GraphInput lasso_input() {
  GraphInput in;
  in.vertices = 4;
  in.edges = {{1, 2}, {2, 3}, {2, 4}, {3, 4}};
  in.tree = {{{1, 2}, {2, 3}, {2, 4}}};
  return in;
}

GraphInput bowtie_input() {
  GraphInput in;
  in.vertices = 5;
  in.edges = {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {2, 5}, {4, 5}};
  in.tree = {{{1, 2}, {2, 3}, {2, 4}, {2, 5}}};
  return in;
}

std::vector<std::string> names_of(const PipelineResult& r, int dim) {
  std::vector<std::string> out;
  for (int idx : r.mc.critical[dim])
    out.push_back(r.d2.complex().name({dim, idx}));
  return out;
}

// 1. Cycle-with-tail worked example: published tree, trial failure at the
// sibling pair {3,4}, one raise, pinned critical cells, H1 = Z^2 by both
// routes.
void criterion_lasso() {
  PipelineResult r = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);

  std::vector<MorseViolation> v = check_morse(r.d2.complex(), r.trial);
  require(v.size() == 1 && v[0].cell == CellId{0, r.d2.index0(make_cell0(3, 4))},
          "trial function must fail exactly at the vertex pair {3,4}");

  require(r.log.square_fixes.empty() && r.log.sibling_fixes.size() == 1,
          "repair must apply exactly one sibling fix");
  require(r.log.sibling_fixes[0].raised_1cell ==
                  r.d2.index1(make_cell1(3, 2, 4)) &&
              r.f2({1, r.log.sibling_fixes[0].raised_1cell}) == 11,
          "repair must raise 3x(2,4) from 10 to 11");

  std::vector<std::string> crit1 = names_of(r, 1);
  require(names_of(r, 0) == std::vector<std::string>{"(1,2)"},
          "critical 0-cells must be {(1,2)}, got " + show(names_of(r, 0)));
  require(crit1 == std::vector<std::string>{"1x(3,4)", "3x(2,4)"},
          "critical 1-cells must be {1x(3,4), 3x(2,4)}, got " + show(crit1));
  require(r.mc.critical[2].empty(), "no critical 2-cells expected");

  require(r.morse_h1 == HomologyResult{2, {}},
          "Morse route H1 must be free of rank 2");
  require(r.oracle.h1 == HomologyResult{2, {}} && r.oracle.h0_rank == 1,
          "oracle H1 must be free of rank 2 with one component");
  require(r.agreement, "both homology routes must agree");
}

// 2. Two-triangle worked example: five critical 1-cells, one critical
// square whose Morse boundary couples exactly the two raised diagonals with
// opposite unit signs, H1 = Z^4.
void criterion_bowtie() {
  PipelineResult r = run_pipeline(bowtie_input(), TieBreak::MinVertexFirst);

  std::vector<std::string> crit1 = names_of(r, 1);
  require(crit1 == std::vector<std::string>{"1x(4,5)", "2x(1,3)", "3x(2,4)",
                                            "3x(2,5)", "4x(2,5)"},
          "critical 1-cells mismatch: " + show(crit1));
  require(names_of(r, 2) == std::vector<std::string>{"(1,3)x(4,5)"},
          "critical 2-cells must be {(1,3)x(4,5)}");

  require(r.mc.boundary1.is_zero(), "boundary into 0-cells must vanish");
  const IntegerMatrix& m = r.mc.boundary2;
  require(m.rows() == 5 && m.cols() == 1, "Morse boundary must be 5x1");
  int nonzero = 0;
  for (int i = 0; i < 5; ++i)
    if (m.at(i, 0) != 0) ++nonzero;
  require(nonzero == 2 && m.at(2, 0) == 1 && m.at(3, 0) == -1,
          "Morse boundary column must be +3x(2,4) - 3x(2,5)");

  require(r.morse_h1 == HomologyResult{4, {}} &&
              r.oracle.h1 == HomologyResult{4, {}} && r.agreement,
          "H1 must be free of rank 4 by both routes");
}

// 3. Star with the centre labeled 1: the forced relabeling [2,1,3,4], a
// hexagon complex, H1 = Z by both routes.
void criterion_star() {
  GraphInput in;
  in.vertices = 4;
  in.edges = {{1, 2}, {1, 3}, {1, 4}};
  PipelineResult r = run_pipeline(in, TieBreak::MinVertexFirst);

  require(r.new_label == std::vector<int>{2, 1, 3, 4},
          "star must relabel to [2,1,3,4], got " + show(r.new_label));
  const Complex& c = r.d2.complex();
  require(c.size(0) == 6 && c.size(1) == 6 && c.size(2) == 0,
          "star complex must have 6/6/0 cells");
  require(r.morse_h1 == HomologyResult{1, {}} &&
              r.oracle.h1 == HomologyResult{1, {}} && r.oracle.h0_rank == 1 &&
              r.agreement,
          "H1 of the star must be Z by both routes");
}

// 4. Gauge potential on the lasso: two parameters, the square's fourth side
// forced to phi1, zero flux around the filled square, and the exchange
// cycle producing exactly the second parameter.
void criterion_gauge() {
  PipelineResult r = run_pipeline(lasso_input(), TieBreak::MinVertexFirst);
  const GaugePotential& pot = r.gauge;

  require(pot.params.size() == 2 &&
              pot.params[0].cell == r.d2.index1(make_cell1(1, 3, 4)) &&
              pot.params[1].cell == r.d2.index1(make_cell1(3, 2, 4)),
          "two parameters on 1x(3,4) and 3x(2,4) expected");
  require(pot.expr(r.d2.index1(make_cell1(2, 3, 4))) ==
              PhaseExpr::parameter(0),
          "the tail 2x(3,4) must carry phi1");

  auto de = [&](int vertex, int j, int k, bool rev = false) {
    return DirectedEdge{r.d2.index1(make_cell1(vertex, j, k)), rev};
  };
  std::vector<DirectedEdge> square = {de(1, 3, 4), de(4, 1, 2),
                                      de(2, 3, 4, true), de(3, 1, 2, true)};
  require(flux(r.d2.complex(), pot, square).is_zero(),
          "flux around the filled square must vanish");

  std::vector<DirectedEdge> hexagon = {de(1, 2, 3),       de(3, 1, 2),
                                       de(3, 2, 4),       de(4, 2, 3, true),
                                       de(4, 1, 2, true), de(1, 2, 4, true)};
  require(flux(r.d2.complex(), pot, hexagon) == PhaseExpr::parameter(1),
          "flux around the exchange cycle must be phi2");
}

// 5. Property sweep: the named corpus plus 220 seeded random graphs on up
// to 8 vertices, both tie-break policies, every structural invariant.
void criterion_properties() {
  VerifyResult res = run_verify(8, 220, 20260814);
  if (!res.ok()) {
    std::ostringstream msg;
    msg << res.failures.size() << " invariant failure(s); first: "
        << res.failures.front();
    throw std::runtime_error(msg.str());
  }
  require(res.graphs_checked >= 220, "expected at least 220 graphs checked");
}

// 6. Morse boundary cross-validation: substitution flow vs explicit
// gradient-path enumeration with sign tracking, on every corpus and random
// graph with at most 6 vertices.
void criterion_vpath_cross() {
  int checked = 0;
  auto cross = [&](const GraphInput& input) {
    for (TieBreak policy :
         {TieBreak::MinVertexFirst, TieBreak::MaxVertexFirst}) {
      PipelineResult r = run_pipeline(input, policy);
      const Complex& c = r.d2.complex();
      for (int dim = 1; dim <= 2; ++dim) {
        IntegerMatrix direct = vpath_boundary_matrix(c, r.field, r.mc, dim);
        const IntegerMatrix& flowed =
            dim == 1 ? r.mc.boundary1 : r.mc.boundary2;
        require(direct == flowed,
                "path-enumerated boundary differs from flowed boundary (dim " +
                    std::to_string(dim) + ")");
      }
      std::vector<std::string> descent =
          check_vpath_descent(c, r.field, r.f2);
      require(descent.empty(),
              "gradient paths must descend: " +
                  (descent.empty() ? std::string() : descent.front()));
    }
    ++checked;
  };

  for (const VerifySample& s : named_corpus())
    if (s.input.vertices <= 6) cross(s.input);

  std::mt19937_64 rng(87);
  for (int k = 0; k < 120; ++k) cross(random_connected_graph(rng, 3, 6));
  require(checked >= 120, "cross-validation corpus unexpectedly small");
}

struct Criterion {
  std::string label;
  std::function<void()> fn;
  long long budget_ms;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. cycle-with-tail golden run (tree, repair, criticals, H1)",
       criterion_lasso, 1000},
      {"2. two-triangle golden run (Morse boundary, H1 = Z^4)",
       criterion_bowtie, 1000},
      {"3. star relabeling golden run (H1 = Z)", criterion_star, 1000},
      {"4. gauge potential golden run (phases, flux)", criterion_gauge, 1000},
      {"5. invariant sweep: corpus + 220 random graphs, both policies",
       criterion_properties, 300000},
      {"6. boundary cross-check: substitution flow vs path enumeration",
       criterion_vpath_cross, 120000},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.fn();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (failure.empty() && ms > c.budget_ms) {
      std::ostringstream over;
      over << "exceeded time budget (" << ms << " ms > " << c.budget_ms
           << " ms)";
      failure = over.str();
    }
    if (failure.empty()) {
      std::cout << "[PASS] " << c.label << " (" << ms << " ms)\n";
    } else {
      std::cout << "[FAIL] " << c.label << " (" << ms << " ms): " << failure
                << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "gcmorse/config_complex.hpp"
#include "gcmorse/errors.hpp"
#include "gcmorse/graph.hpp"
#include "gcmorse/homology.hpp"

using namespace gcmorse;

namespace {

Graph lasso() { return Graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph k5() {
  return Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                   {3, 4}, {3, 5}, {4, 5}});
}

Graph k33() {
  return Graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4},
                   {3, 5}, {3, 6}});
}

}  // namespace

TEST_CASE("cell payloads are canonicalized") {
  CHECK(make_cell0(4, 2) == Cell0{2, 4});
  CHECK(make_cell1(3, 4, 2) == Cell1{3, 2, 4});
  // The factor containing the smallest endpoint goes first.
  CHECK(make_cell2(4, 5, 1, 3) == Cell2{1, 3, 4, 5});
  CHECK(make_cell2(5, 4, 3, 1) == Cell2{1, 3, 4, 5});
  CHECK(name_of(Cell0{1, 2}) == "(1,2)");
  CHECK(name_of(Cell1{3, 2, 4}) == "3x(2,4)");
  CHECK(name_of(Cell2{1, 3, 4, 5}) == "(1,3)x(4,5)");
}

TEST_CASE("two-particle complex of the lasso") {
  TwoParticleComplex d2 = build_d2(lasso());
  const Complex& c = d2.complex();
  CHECK(c.size(0) == 6);
  CHECK(c.size(1) == 8);
  CHECK(c.size(2) == 1);
  CHECK(c.euler_characteristic() == -1);

  // Unordered lookup finds the one square under either factor order.
  CHECK(d2.index2(make_cell2(3, 4, 1, 2)) == 0);
  CHECK(d2.index2(make_cell2(1, 2, 3, 4)) == 0);
  CHECK(d2.cells2()[0] == Cell2{1, 2, 3, 4});
  CHECK(d2.index1(make_cell1(5, 1, 2)) == -1);
  CHECK(d2.index0(make_cell0(1, 2)) == 0);

  // Edge boundary: one particle parked at 3, the other crossing {1,2}.
  int e = d2.index1(make_cell1(3, 1, 2));
  REQUIRE(e >= 0);
  auto faces = c.faces({1, e});
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].cell == d2.index0(make_cell0(3, 1)));
  CHECK(faces[0].sign == -1);
  CHECK(faces[1].cell == d2.index0(make_cell0(3, 2)));
  CHECK(faces[1].sign == 1);
}

TEST_CASE("square boundary orientation") {
  TwoParticleComplex d2 = build_d2(lasso());
  const Complex& c = d2.complex();
  // Square (1,2)x(3,4): +2x(3,4) -1x(3,4) -4x(1,2) +3x(1,2).
  auto faces = c.faces({2, 0});
  REQUIRE(faces.size() == 4);
  auto sign_of = [&](const Cell1& cell) {
    int idx = d2.index1(cell);
    for (const BoundaryEntry& b : faces)
      if (b.cell == idx) return b.sign;
    return 0;
  };
  CHECK(sign_of(make_cell1(2, 3, 4)) == 1);
  CHECK(sign_of(make_cell1(1, 3, 4)) == -1);
  CHECK(sign_of(make_cell1(4, 1, 2)) == -1);
  CHECK(sign_of(make_cell1(3, 1, 2)) == 1);
}

TEST_CASE("boundary of a boundary vanishes") {
  for (const Graph& g :
       {lasso(), k5(), k33(),
        Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})}) {
    TwoParticleComplex d2 = build_d2(g);
    const Complex& c = d2.complex();
    IntegerMatrix d1 = boundary_matrix(c, 1);
    IntegerMatrix d2m = boundary_matrix(c, 2);
    CHECK(d1.multiplied_by(d2m).is_zero());
  }
}

TEST_CASE("cell counts for the standard examples") {
  // Star with centre 2 (preorder labels): no room for two moving particles.
  TwoParticleComplex star = build_d2(Graph(4, {{1, 2}, {2, 3}, {2, 4}}));
  CHECK(star.complex().size(0) == 6);
  CHECK(star.complex().size(1) == 6);
  CHECK(star.complex().size(2) == 0);
  CHECK(star.complex().euler_characteristic() == 0);

  TwoParticleComplex edge = build_d2(Graph(2, {{1, 2}}));
  CHECK(edge.complex().size(0) == 1);
  CHECK(edge.complex().size(1) == 0);
  CHECK(edge.complex().size(2) == 0);

  TwoParticleComplex k4 =
      build_d2(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(k4.complex().size(0) == 6);
  CHECK(k4.complex().size(1) == 12);
  CHECK(k4.complex().size(2) == 3);

  // Closed-surface cases: Euler characteristics -5 and -3.
  TwoParticleComplex d5 = build_d2(k5());
  const Complex& c5 = d5.complex();
  CHECK(c5.size(0) == 10);
  CHECK(c5.size(1) == 30);
  CHECK(c5.size(2) == 15);
  CHECK(c5.euler_characteristic() == -5);
  TwoParticleComplex d33 = build_d2(k33());
  const Complex& c33 = d33.complex();
  CHECK(c33.size(0) == 15);
  CHECK(c33.size(1) == 36);
  CHECK(c33.size(2) == 18);
  CHECK(c33.euler_characteristic() == -3);
}

TEST_CASE("complex needs room for two particles") {
  CHECK_THROWS_AS(build_d2(Graph(1, {})), TooSmall);
}

TEST_CASE("one-skeleton of the two-particle complex is connected") {
  for (const Graph& g : {Graph(3, {{1, 2}, {2, 3}}), lasso(), k33()}) {
    TwoParticleComplex d2 = build_d2(g);
    const Complex& c = d2.complex();
    std::vector<int> comp(c.size(0));
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (int e = 0; e < c.size(1); ++e) {
      auto f = c.faces({1, e});
      comp[find(f[0].cell)] = find(f[1].cell);
    }
    int roots = 0;
    for (int v = 0; v < c.size(0); ++v)
      if (find(v) == v) ++roots;
    CHECK(roots == 1);
  }
}

TEST_CASE("subdivision conditions for more particles") {
  // Two particles: any simple graph qualifies.
  CHECK(check_abrams(lasso(), 2).ok());
  CHECK(check_abrams(k5(), 2).ok());
  CHECK(check_abrams(Graph(3, {{1, 2}, {1, 3}, {2, 3}}), 2).ok());

  // Triangle, three particles: the 3-cycle is too short.
  AbramsReport tri = check_abrams(Graph(3, {{1, 2}, {1, 3}, {2, 3}}), 3);
  CHECK(tri.condition1);
  CHECK_FALSE(tri.condition2);
  REQUIRE_FALSE(tri.short_cycles.empty());
  CHECK(tri.short_cycles[0] == std::vector<int>{1, 2, 3});

  // Star, three particles: centre-to-leaf paths are too short.
  AbramsReport star = check_abrams(Graph(4, {{1, 2}, {1, 3}, {1, 4}}), 3);
  CHECK_FALSE(star.condition1);
  CHECK(star.condition2);
  CHECK(std::find(star.short_paths.begin(), star.short_paths.end(),
                  std::vector<int>{1, 2}) != star.short_paths.end());

  // Path on four vertices supports three particles.
  CHECK(check_abrams(Graph(4, {{1, 2}, {2, 3}, {3, 4}}), 3).ok());

  // Five-cycle: fine for four particles, too short for five.
  Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK(check_abrams(c5, 4).ok());
  CHECK_FALSE(check_abrams(c5, 5).condition2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "csigma/rips.hpp"
#include "support/generators.hpp"

using csigma::Rational;
using namespace csigma::space;
using namespace csigma::rips;

namespace {

Truncation truncation(std::int64_t outer) { return Truncation{Rational(outer), std::nullopt, std::nullopt}; }

std::size_t brute_force_edges(const Space& s, int scale, const Rational& radius) {
  auto ball = s.enumerate_ball(radius);
  std::size_t count = 0;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = i + 1; j < ball.size(); ++j)
      if (s.distance(ball[i], ball[j]) <= Rational(scale)) ++count;
  return count;
}

}  // namespace

TEST_CASE("scale-1 graph of the discrete book connects only ray 1") {
  auto d = discrete_open_book(3);
  auto g = build_rips(d, 1, truncation(5));
  // vertices: *, 1:1..1:5, 2:2, 2:4, 3:3
  REQUIRE(g.vertex_count() == 9);
  CHECK(g.edge_count() == 5);  // *-1:1 and the ray-1 chain
  auto id = [&](const std::string& text) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (d.label(static_cast<PointId>(i)).str() == text) return static_cast<PointId>(i);
    FAIL("missing vertex ", text);
    return PointId{-1};
  };
  CHECK(g.adjacency[static_cast<std::size_t>(id("2:2"))].empty());
  CHECK(g.adjacency[static_cast<std::size_t>(id("2:4"))].empty());
  CHECK(g.adjacency[static_cast<std::size_t>(id("3:3"))].empty());
  CHECK(g.adjacency[0].size() == 1);  // wedge point to 1:1
}

TEST_CASE("one-point space gives a single vertex and no edges") {
  auto s = point_cloud({"o"}, {{Rational(0)}}, 0);
  auto g = build_rips(s, 3, truncation(10));
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("integer ray edge count matches brute force") {
  auto r = integer_ray();
  auto g = build_rips(r, 2, truncation(4));
  CHECK(g.edge_count() == 7);
  CHECK(g.edge_count() == brute_force_edges(r, 2, Rational(4)));
}

TEST_CASE("banded edge enumeration equals the quadratic scan on random models") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    auto model = testsupport::random_arm_model(rng);
    for (int scale = 1; scale <= 3; ++scale) {
      auto g = build_rips(model.space, scale, model.trunc);
      CHECK(g.edge_count() == brute_force_edges(model.space, scale, model.trunc.outer_radius));
    }
  }
}

TEST_CASE("components outside an inner radius, open book") {
  auto b = open_book(2, Rational(1, 2));
  auto g = build_rips(b, 1, truncation(20));
  auto part = components_outside(g, Rational(2));
  CHECK(part.roots.size() == 2);  // one per ray
}

TEST_CASE("components outside zero is the graph minus the basepoint") {
  auto r = integer_ray();
  auto g = build_rips(r, 1, truncation(6));
  auto part = components_outside(g, Rational(0));
  CHECK(part.roots.size() == 1);
  CHECK(part.component_of[0] == -1);
  for (std::size_t v = 1; v < g.vertex_count(); ++v) CHECK(part.component_of[v] == 1);
}

TEST_CASE("discrete book components split into ray chains and singletons") {
  auto d = discrete_open_book(5);
  auto g = build_rips(d, 2, truncation(30));
  auto part = components_outside(g, Rational(3));
  // rays 1 and 2 are chains; rays 3,4,5 contribute isolated singletons
  std::size_t singletons = 0, chains = 0;
  for (PointId root : part.roots) {
    std::size_t members = 0;
    for (auto c : part.component_of)
      if (c == root) ++members;
    (members == 1 ? singletons : chains) += 1;
  }
  CHECK(chains == 2);
  CHECK(singletons == 9 + 7 + 6);  // multiples of 3, 4, 5 in (3, 30]
}

TEST_CASE("persistent components of the discrete book need reachability") {
  auto d = discrete_open_book(5);
  Truncation t{Rational(30), Rational(3), Rational(3)};
  auto persistent = persistent_components(d, 2, t);
  REQUIRE(persistent.size() == 2);
  CHECK(d.label(persistent[0]).part.at(0) == 1);
  CHECK(d.label(persistent[1]).part.at(0) == 2);
}

TEST_CASE("persistent components of the open book count its rays") {
  auto b = open_book(7, Rational(1, 2));
  Truncation t{Rational(50), std::nullopt, std::nullopt};
  CHECK(persistent_components(b, 3, t).size() == 7);
}

TEST_CASE("one-point space has no persistent components") {
  auto s = point_cloud({"o"}, {{Rational(0)}}, 0);
  Truncation t{Rational(10), Rational(1), Rational(2)};
  CHECK(persistent_components(s, 2, t).empty());
}

TEST_CASE("thin truncation is an explicit error") {
  auto r = integer_ray();
  Truncation t{Rational(10), Rational(8), Rational(4)};  // R-W=6 <= r=8
  CHECK_THROWS_AS(persistent_components(r, 1, t), csigma::ThinTruncationError);
}

TEST_CASE("scale monotonicity: components refine upward") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    auto model = testsupport::random_arm_model(rng);
    auto g1 = build_rips(model.space, 2, model.trunc, 3);
    auto g2 = build_rips(model.space, 3, model.trunc, 3);
    auto p1 = components_outside(g1, g1.inner_radius);
    auto p2 = components_outside(g2, g2.inner_radius);
    // same component at scale 2 implies same component at scale 3
    for (std::size_t v = 0; v < g1.vertex_count(); ++v)
      for (std::size_t w = v + 1; w < g1.vertex_count(); ++w) {
        if (p1.component_of[v] < 0 || p1.component_of[w] < 0) continue;
        if (p1.component_of[v] == p1.component_of[w])
          CHECK(p2.component_of[v] == p2.component_of[w]);
      }
  }
}

TEST_CASE("path correspondence: same component means an avoiding path exists") {
  auto d = discrete_open_book(4);
  auto g = build_rips(d, 3, truncation(40));
  const Rational inner(3);
  auto part = components_outside(g, inner);
  // BFS inside the induced subgraph from each root; every member must be
  // reached through vertices outside the inner ball with steps <= N.
  for (PointId root : part.roots) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<PointId> queue{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!queue.empty()) {
      PointId v = queue.back();
      queue.pop_back();
      for (PointId u : g.adjacency[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(u)]) continue;
        if (!(d.distance_to_basepoint(u) > inner)) continue;
        seen[static_cast<std::size_t>(u)] = true;
        queue.push_back(u);
      }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (part.component_of[v] == root) CHECK(seen[v]);
  }
}

TEST_CASE("construction is deterministic") {
  auto build = [] {
    auto b = open_book(4, Rational(1, 2));
    auto g = build_rips(b, 2, truncation(25));
    return to_dot(g);
  };
  CHECK(build() == build());
}

TEST_CASE("dot export names vertices by label") {
  auto r = integer_ray();
  auto g = build_rips(r, 1, truncation(2));
  auto dot = to_dot(g);
  CHECK(dot.find("label=\"0\"") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}

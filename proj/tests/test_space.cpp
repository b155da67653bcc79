#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csigma/space.hpp"
#include "support/generators.hpp"

using csigma::Rational;
using namespace csigma::space;

namespace {

Label ray_point(int ray, const Rational& t) { return Label{{ray}, {t}, ""}; }

}  // namespace

TEST_CASE("discrete open book distances follow the wedge formula") {
  auto d = discrete_open_book(3);
  CHECK(d.distance(ray_point(2, Rational(4)), ray_point(2, Rational(6))) == Rational(2));
  CHECK(d.distance(ray_point(2, Rational(4)), ray_point(3, Rational(3))) == Rational(7));
  CHECK(d.distance(d.basepoint_label(), d.basepoint_label()) == Rational(0));
  CHECK(d.distance(d.basepoint_label(), ray_point(3, Rational(9))) == Rational(9));
}

TEST_CASE("open book net distance example") {
  auto b = open_book(2, Rational(1, 2));
  CHECK(b.distance(ray_point(1, Rational(3, 2)), ray_point(2, Rational(1))) == Rational(5, 2));
}

TEST_CASE("enumerate_ball of the discrete open book") {
  auto d = discrete_open_book(3);
  auto ball = d.enumerate_ball(Rational(2));
  REQUIRE(ball.size() == 4);  // wedge point, (1,1), (1,2), (2,2)
  CHECK(d.label(ball[0]).str() == "*");
  CHECK(d.label(ball[1]).str() == "1:1");
  CHECK(d.label(ball[2]).str() == "1:2");
  CHECK(d.label(ball[3]).str() == "2:2");
}

TEST_CASE("radius zero gives the basepoint only") {
  auto spaces = {integer_ray(), discrete_open_book(4), lattice(2), real_line(Rational(1, 2))};
  for (const auto& s : spaces) {
    auto ball = s.enumerate_ball(Rational(0));
    REQUIRE(ball.size() == 1);
    CHECK(ball[0] == s.basepoint());
  }
}

TEST_CASE("integer ray ball") {
  auto r = integer_ray();
  CHECK(r.ball_size(Rational(5)) == 6);  // 0..5
  CHECK(r.label(5).str() == "5");
}

TEST_CASE("point ids are stable across growing enumerations") {
  auto d = discrete_open_book(5);
  auto small = d.enumerate_ball(Rational(3));
  auto big = d.enumerate_ball(Rational(20));
  REQUIRE(big.size() >= small.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
  // and the same ids resolve to the same labels
  CHECK(d.find(ray_point(2, Rational(2)), Rational(20)).value() ==
        d.find(ray_point(2, Rational(2)), Rational(3)).value());
}

TEST_CASE("ball monotonicity property") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto model = testsupport::random_arm_model(rng);
    auto r1 = Rational(testsupport::pick(rng, 0, 8), 2);
    auto r2 = r1 + Rational(testsupport::pick(rng, 0, 8), 2);
    auto small = model.space.enumerate_ball(r1);
    auto big = model.space.enumerate_ball(r2);
    REQUIRE(small.size() <= big.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
  }
}

TEST_CASE("triangle inequality holds exactly on sampled triples") {
  std::mt19937 rng(13);
  std::vector<Space> spaces = {discrete_open_book(4), open_book(3, Rational(1, 2)), lattice(2),
                               integer_line()};
  for (const auto& s : spaces) {
    auto ball = s.enumerate_ball(Rational(6));
    REQUIRE(!ball.empty());
    for (int trial = 0; trial < 300; ++trial) {
      auto a = ball[rng() % ball.size()];
      auto b = ball[rng() % ball.size()];
      auto c = ball[rng() % ball.size()];
      CHECK(s.distance(a, c) <= s.distance(a, b) + s.distance(b, c));
      CHECK(s.distance(a, b) == s.distance(b, a));
      CHECK((s.distance(a, b) == Rational(0)) == (a == b));
    }
  }
}

TEST_CASE("wedge cross distances match an independent recomputation") {
  std::mt19937 rng(17);
  // Independent oracle: distance through the wedge point from the label
  // data alone.
  auto wedge = metric_wedge({integer_ray(), discrete_ray(Rational(2)), ray_net(Rational(1, 2))});
  auto ball = wedge.enumerate_ball(Rational(10));
  for (int trial = 0; trial < 500; ++trial) {
    auto a = ball[rng() % ball.size()];
    auto b = ball[rng() % ball.size()];
    const auto& la = wedge.label(a);
    const auto& lb = wedge.label(b);
    Rational expected;
    if (la.part.empty() || lb.part.empty()) {
      expected = la.coord.empty() && lb.coord.empty()
                     ? Rational(0)
                     : (la.part.empty() ? lb.coord.at(0) : la.coord.at(0));
    } else if (la.part[0] == lb.part[0]) {
      expected = csigma::abs(la.coord.at(0) - lb.coord.at(0));
    } else {
      expected = la.coord.at(0) + lb.coord.at(0);
    }
    CHECK(wedge.distance(a, b) == expected);
  }
}

TEST_CASE("wedge of integer rays keeps within-ray distances") {
  auto wedge = metric_wedge({integer_ray(), integer_ray()});
  CHECK(wedge.distance(ray_point(1, Rational(2)), ray_point(1, Rational(7))) == Rational(5));
  CHECK(wedge.distance(ray_point(1, Rational(2)), ray_point(2, Rational(1))) == Rational(3));
}

TEST_CASE("wedge of a single space is isometric to it") {
  auto plain = discrete_ray(Rational(2));
  auto wrapped = metric_wedge({discrete_ray(Rational(2))});
  auto pb = plain.enumerate_ball(Rational(12));
  auto wb = wrapped.enumerate_ball(Rational(12));
  REQUIRE(pb.size() == wb.size());
  for (std::size_t i = 0; i < pb.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      CHECK(plain.distance(pb[i], pb[j]) == wrapped.distance(wb[i], wb[j]));
}

TEST_CASE("one-point cloud is a valid space") {
  auto s = point_cloud({"o"}, {{Rational(0)}}, 0);
  CHECK(s.enumerate_ball(Rational(100)).size() == 1);
  CHECK(s.basepoint_label().str() == "o");
}

TEST_CASE("metric violations are rejected with a witness") {
  // d(a,c) = 5 > 1 + 1
  std::vector<std::vector<Rational>> bad = {
      {Rational(0), Rational(1), Rational(5)},
      {Rational(1), Rational(0), Rational(1)},
      {Rational(5), Rational(1), Rational(0)},
  };
  CHECK_THROWS_WITH_AS(point_cloud({"a", "b", "c"}, bad, 0),
                       doctest::Contains("triangle violation"), csigma::SpecError);
  CHECK_THROWS_AS(point_cloud({"a", "b"},
                              {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}, 0),
                  csigma::SpecError);
  CHECK_THROWS_AS(discrete_ray(Rational(0)), csigma::SpecError);
  CHECK_THROWS_AS(open_book(0, Rational(1, 2)), csigma::SpecError);
  CHECK_THROWS_AS(metric_wedge({}), csigma::SpecError);
}

TEST_CASE("rebasing keeps the metric and re-centers enumeration") {
  auto d = discrete_open_book(4);
  Label y0 = ray_point(2, Rational(4));
  auto rebased = d.with_basepoint(y0);
  CHECK(rebased.basepoint_label() == y0);
  CHECK(rebased.distance(ray_point(1, Rational(3)), ray_point(2, Rational(4))) == Rational(7));
  auto ball = rebased.enumerate_ball(Rational(3));
  // within 3 of (2,4): itself, (2,2), (2,6) — the wedge point is 4 away
  REQUIRE(ball.size() == 3);
  CHECK(rebased.label(ball[0]) == y0);
  for (auto id : ball) CHECK(rebased.distance_to_basepoint(id) <= Rational(3));
}

TEST_CASE("lattice balls and distances") {
  auto z2 = lattice(2);
  CHECK(z2.ball_size(Rational(1)) == 5);
  CHECK(z2.ball_size(Rational(2)) == 13);
  auto a = z2.find(Label{{}, {Rational(1), Rational(0)}, ""}, Rational(2));
  auto b = z2.find(Label{{}, {Rational(0), Rational(-1)}, ""}, Rational(2));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(z2.distance(*a, *b) == Rational(2));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csigma/sigma.hpp"
#include "support/generators.hpp"

using csigma::Rational;
using namespace csigma::sigma;
using namespace csigma::space;

namespace {

Truncation truncation(std::int64_t outer) {
  return Truncation{Rational(outer), std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("discrete book levels count the slow rays") {
  auto d = discrete_open_book(6);
  auto lvl = sigma_level(d, 4, truncation(100));
  CHECK(lvl.size() == 4);
  for (std::size_t k = 0; k < lvl.size(); ++k) {
    const auto& root = d.label(lvl.classes[k].component);
    CHECK(root.part.at(0) == static_cast<int>(k + 1));
  }
}

TEST_CASE("open book levels count every ray") {
  auto b = open_book(9, Rational(1, 2));
  CHECK(sigma_level(b, 1, truncation(100)).size() == 9);
}

TEST_CASE("one-point space has empty levels") {
  auto s = point_cloud({"o"}, {{Rational(0)}}, 0);
  CHECK(sigma_level(s, 3, Truncation{Rational(20), Rational(3), std::nullopt}).size() == 0);
}

TEST_CASE("representatives are valid scale paths from basepoint into the shell") {
  auto d = discrete_open_book(6);
  auto lvl = sigma_level(d, 3, truncation(60));
  REQUIRE(lvl.size() == 3);
  for (const auto& cls : lvl.classes) {
    REQUIRE(!cls.representative.empty());
    CHECK(cls.representative.front() == d.basepoint());
    for (std::size_t i = 0; i + 1 < cls.representative.size(); ++i)
      CHECK(d.distance(cls.representative[i], cls.representative[i + 1]) <= Rational(3));
    CHECK(d.distance_to_basepoint(cls.representative.back()) >
          lvl.outer_radius - lvl.witness_margin);
    // shortest: length equals BFS depth + 1, spot-check monotone growth
    CHECK(cls.representative.size() >= 2);
  }
}

TEST_CASE("bonding maps embed the discrete book levels") {
  auto d = discrete_open_book(5);
  auto map = bonding_map(d, 2, truncation(60));
  REQUIRE(map.size() == 2);
  CHECK(map[0] == 0);
  CHECK(map[1] == 1);
}

TEST_CASE("two-ray wedge has bijective scale-1 bonding") {
  auto w = metric_wedge({integer_ray(), integer_ray()});
  auto map = bonding_map(w, 1, truncation(40));
  CHECK(map == std::vector<int>{0, 1});
}

TEST_CASE("window sizes for both books") {
  auto d = discrete_open_book(8);
  auto dw = ind_sigma(d, 1, 5, truncation(80));
  for (int n = 1; n <= 5; ++n) CHECK(dw.level(n).size() == static_cast<std::size_t>(n));
  for (int n = 1; n < 5; ++n) {
    const auto& map = dw.bonding(n);
    for (std::size_t k = 0; k < map.size(); ++k) CHECK(map[k] == static_cast<int>(k));
  }

  auto b = open_book(6, Rational(1, 2));
  auto bw = ind_sigma(b, 1, 4, truncation(60));
  for (int n = 1; n <= 4; ++n) CHECK(bw.level(n).size() == 6);
  CHECK(sigma_stability(bw).stable_within_window);
  CHECK(sigma_stability(bw).stable_from == 1);
  CHECK_FALSE(sigma_stability(dw).stable_within_window);
}

TEST_CASE("one-point space is vacuously stable from the window start") {
  auto s = point_cloud({"o"}, {{Rational(0)}}, 0);
  auto w = ind_sigma(s, 1, 3, Truncation{Rational(20), Rational(3), std::nullopt});
  auto report = sigma_stability(w);
  CHECK(report.stable_within_window);
  CHECK(report.stable_from == 1);
}

TEST_CASE("stability needs two levels") {
  auto b = open_book(2, Rational(1, 2));
  auto w = ind_sigma(b, 2, 2, truncation(30));
  CHECK_THROWS_AS(sigma_stability(w), csigma::SpecError);
}

TEST_CASE("a line has two ends at every scale") {
  auto z = integer_line();
  auto w = ind_sigma(z, 1, 4, truncation(50));
  for (int n = 1; n <= 4; ++n) CHECK(w.level(n).size() == 2);
  CHECK(sigma_stability(w).stable_from == 1);
}

TEST_CASE("the plane lattice has one end") {
  auto z2 = lattice(2);
  auto w = ind_sigma(z2, 1, 3, truncation(24));
  for (int n = 1; n <= 3; ++n) CHECK(w.level(n).size() == 1);
}

TEST_CASE("bonding functoriality: two steps compose") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    auto model = testsupport::random_arm_model(rng);
    Truncation t = model.trunc;
    auto w = ind_sigma(model.space, 1, 3, t);
    // composite of the two bondings equals the directly computed 1->3 map
    for (std::size_t k = 0; k < w.level(1).size(); ++k) {
      int via = w.bonding(2)[static_cast<std::size_t>(w.bonding(1)[k])];
      PointId root = w.level(1).classes[k].component;
      int direct = w.level(3).index_of_component(
          w.level(3).component_of.at(static_cast<std::size_t>(root)));
      CHECK(via == direct);
    }
  }
}

TEST_CASE("truncation robustness: doubling the radius keeps the shape") {
  struct Probe {
    Space space;
    std::int64_t radius;
    int max_scale;
  };
  std::vector<Probe> probes = {{discrete_open_book(8), 60, 5},
                               {open_book(5, Rational(1, 2)), 40, 4},
                               {integer_ray(), 40, 4},
                               {lattice(2), 16, 2},
                               {integer_line(), 40, 4}};
  for (const auto& probe : probes) {
    auto w1 = ind_sigma(probe.space, 1, probe.max_scale, truncation(probe.radius));
    auto w2 = ind_sigma(probe.space, 1, probe.max_scale, truncation(2 * probe.radius));
    for (int n = 1; n <= probe.max_scale; ++n) {
      CHECK(w1.level(n).size() == w2.level(n).size());
      if (n < probe.max_scale) CHECK(w1.bonding(n) == w2.bonding(n));
    }
  }
}

TEST_CASE("export to a concrete direct sequence") {
  auto d = discrete_open_book(5);
  auto w = ind_sigma(d, 1, 4, truncation(60));
  auto seq = to_direct_sequence(w);
  CHECK(seq.first == 1);
  REQUIRE(seq.levels.size() == 4);
  for (int n = 1; n <= 4; ++n) CHECK(seq.level(n).size() == static_cast<std::size_t>(n));
  CHECK(seq.bondings == w.bondings);
  auto lim = csigma::dirseq::direct_limit(csigma::dirseq::DirectSequence(seq));
  CHECK(lim.cardinality.value == 4);
}

TEST_CASE("locate_class follows paths and reports failures") {
  auto d = discrete_open_book(4);
  auto w = ind_sigma(d, 1, 3, truncation(40));
  // the canonical representative classifies as its own class
  for (int n = 1; n <= 3; ++n) {
    const auto& lvl = w.level(n);
    for (std::size_t k = 0; k < lvl.size(); ++k) {
      std::vector<Label> labels;
      for (auto id : lvl.classes[k].representative) labels.push_back(d.label(id));
      std::string err;
      CHECK(locate_class(w, n, labels, &err) == static_cast<int>(k));
    }
  }
  // a path stopping early does not commit to an end
  std::vector<Label> tiny{d.basepoint_label(), Label{{1}, {Rational(1)}, ""}};
  std::string err;
  CHECK(locate_class(w, 1, tiny, &err) == -1);
  CHECK(err.find("inner ball") != std::string::npos);
  // a path with an oversized step is rejected
  std::vector<Label> jump{d.basepoint_label(), Label{{2}, {Rational(4)}, ""}};
  CHECK(locate_class(w, 1, jump, &err) == -1);
  CHECK(err.find("exceeds scale") != std::string::npos);
}

TEST_CASE("oracle agreement on fixed small models") {
  // two integer arms: two classes at scale 1
  std::mt19937 rng(47);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto model = testsupport::random_arm_model(rng);
    csigma::seqcore::OracleModel guards;
    for (int scale = 1; scale <= 3; ++scale) {
      auto agreement = compare_with_oracle(model.space, scale, model.trunc, guards);
      CHECK_MESSAGE(agreement.agree, agreement.detail);
      ++checked;
    }
  }
  CHECK(checked == 75);
}

TEST_CASE("unreachable shell singletons are not classes") {
  // one arm plus a far singleton in the shell: reachability must exclude it
  std::vector<std::string> names{"o", "a1", "a2", "a3", "far"};
  std::vector<Rational> depth{Rational(0), Rational(1), Rational(2), Rational(3), Rational(3)};
  std::vector<int> arm{-1, 0, 0, 0, 1};
  std::vector<std::vector<Rational>> m(5, std::vector<Rational>(5, Rational(0)));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            arm[static_cast<std::size_t>(i)] == arm[static_cast<std::size_t>(j)]
                ? csigma::abs(depth[static_cast<std::size_t>(i)] - depth[static_cast<std::size_t>(j)])
                : depth[static_cast<std::size_t>(i)] + depth[static_cast<std::size_t>(j)];
  auto s = point_cloud(names, m, 0);
  Truncation t{Rational(3), Rational(1), Rational(1)};
  auto lvl = sigma_level(s, 1, t);
  REQUIRE(lvl.size() == 1);
  CHECK(s.label(lvl.classes[0].component).atom.front() == 'a');
  // the oracle agrees: no walk reaches the singleton
  csigma::seqcore::OracleModel guards;
  auto agreement = compare_with_oracle(s, 1, t, guards);
  CHECK_MESSAGE(agreement.agree, agreement.detail);
}

TEST_CASE("determinism: identical runs produce identical windows") {
  auto run = [] {
    auto d = discrete_open_book(6);
    auto w = ind_sigma(d, 1, 4, truncation(60));
    std::string fingerprint;
    for (const auto& lvl : w.levels)
      for (const auto& cls : lvl.classes) {
        fingerprint += d.label(cls.component).str();
        for (auto id : cls.representative) fingerprint += "," + d.label(id).str();
        fingerprint += ";";
      }
    return fingerprint;
  };
  CHECK(run() == run());
}

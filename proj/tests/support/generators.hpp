#pragma once

// Deterministic random models for the property tests and the acceptance
// suite. Everything draws from a caller-owned mt19937 so runs reproduce
// bit for bit.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "csigma/dirseq.hpp"
#include "csigma/space.hpp"

namespace testsupport {

inline int pick(std::mt19937& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

/// Wedge of 1-2 arms with rational coordinates plus optional far
/// singleton decorations, presented as an explicit point cloud.
///
/// The family is tuned so the walk-enumeration oracle with its default
/// length cap is a faithful model at scales 1..3: every coordinate and
/// every gap lies in (3/2, 3], so there are no cross-arm edges (sums
/// exceed 3) and no skip edges along an arm (consecutive gap sums exceed
/// 3), and walk counts stay small.
struct ArmModel {
  csigma::space::Space space;
  csigma::space::Truncation trunc;  // outer = farthest point, witness explicit
  int arm_count = 0;
  std::vector<int> arm_lengths;
  int decorations = 0;
};

inline ArmModel random_arm_model(std::mt19937& rng) {
  using csigma::Rational;
  static const Rational kSteps[] = {Rational(7, 4), Rational(2),     Rational(9, 4),
                                    Rational(5, 2), Rational(11, 4), Rational(3)};
  static const Rational kWitness[] = {Rational(1), Rational(3, 2), Rational(2)};

  ArmModel model;
  model.arm_count = pick(rng, 0, 2) == 0 ? 2 : 1;
  std::vector<std::vector<Rational>> arms;
  int budget = 11;  // points besides the basepoint
  for (int a = 0; a < model.arm_count; ++a) {
    int len = model.arm_count == 2 ? pick(rng, 4, 5) : pick(rng, 4, 9);
    model.arm_lengths.push_back(len);
    std::vector<Rational> coords;
    Rational t(0);
    for (int i = 0; i < len; ++i) {
      t += kSteps[pick(rng, 0, 5)];
      coords.push_back(t);
    }
    arms.push_back(std::move(coords));
    budget -= len;
  }
  Rational top(0);
  for (const auto& arm : arms) top = csigma::max(top, arm.back());

  model.decorations = std::min(budget, pick(rng, 0, 2));
  std::vector<Rational> decor;
  for (int d = 0; d < model.decorations; ++d) {
    // Either deep inside (unreachable, off the shell) or at the very
    // edge (unreachable shell singleton).
    if (pick(rng, 0, 1) == 0) {
      decor.push_back(Rational(4) + Rational(pick(rng, 0, 2), 2));
    } else {
      decor.push_back(top + Rational(pick(rng, 0, 1), 2));
    }
  }
  for (const auto& c : decor) top = csigma::max(top, c);

  // Assemble the wedge metric as an explicit matrix.
  std::vector<std::string> names{"o"};
  std::vector<Rational> depth{Rational(0)};
  std::vector<int> arm_of{-1};
  for (std::size_t a = 0; a < arms.size(); ++a)
    for (std::size_t i = 0; i < arms[a].size(); ++i) {
      names.push_back("a" + std::to_string(a + 1) + "x" + std::to_string(i + 1));
      depth.push_back(arms[a][i]);
      arm_of.push_back(static_cast<int>(a));
    }
  for (std::size_t d = 0; d < decor.size(); ++d) {
    names.push_back("d" + std::to_string(d + 1));
    depth.push_back(decor[d]);
    arm_of.push_back(100 + static_cast<int>(d));
  }
  const std::size_t n = names.size();
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      matrix[i][j] = arm_of[i] == arm_of[j] ? csigma::abs(depth[i] - depth[j])
                                            : depth[i] + depth[j];
    }
  model.space = csigma::space::point_cloud(std::move(names), std::move(matrix), 0);
  model.trunc.outer_radius = top;
  model.trunc.witness_margin = kWitness[pick(rng, 0, 2)];
  return model;
}

/// Random concrete direct sequence: 3-6 levels of sizes 1-5 with
/// arbitrary total bondings. Element names are level-local.
inline csigma::dirseq::ConcreteSequence random_sequence(std::mt19937& rng) {
  csigma::dirseq::ConcreteSequence seq;
  seq.first = 1;
  const int levels = pick(rng, 3, 6);
  for (int i = 0; i < levels; ++i) {
    const int size = pick(rng, 1, 5);
    std::vector<std::string> names;
    for (int k = 0; k < size; ++k)
      names.push_back("x" + std::to_string(i + 1) + "." + std::to_string(k));
    seq.levels.push_back(std::move(names));
  }
  for (int i = 0; i + 1 < levels; ++i) {
    std::vector<int> map(seq.levels[static_cast<std::size_t>(i)].size());
    for (auto& v : map)
      v = pick(rng, 0, static_cast<int>(seq.levels[static_cast<std::size_t>(i + 1)].size()) - 1);
    seq.bondings.push_back(std::move(map));
  }
  seq.validate();
  return seq;
}

/// An equivalent pair built from a random sequence by a saturating index
/// shift and per-level relabelings, together with the morphisms that
/// witness the equivalence (f at the same level, g shifting by s).
struct EquivalentPair {
  csigma::dirseq::ConcreteSequence a;
  csigma::dirseq::ConcreteSequence b;
  csigma::dirseq::Morphism f;  // a -> b
  csigma::dirseq::Morphism g;  // b -> a
};

inline EquivalentPair random_equivalent_pair(std::mt19937& rng) {
  using csigma::dirseq::ConcreteSequence;
  EquivalentPair pair;
  pair.a = random_sequence(rng);
  const int first = pair.a.first, top = pair.a.last();
  const int shift = pick(rng, 0, 2);
  auto sat = [&](int i) { return std::min(i + shift, top); };

  // Per-level permutations pi_i: index in A_{sat(i)} -> index in B_i.
  std::vector<std::vector<int>> perm, inverse;
  for (int i = first; i <= top; ++i) {
    std::vector<int> p(pair.a.level(sat(i)).size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<int>(k);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) q[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
    perm.push_back(std::move(p));
    inverse.push_back(std::move(q));
  }

  auto compose_a = [&](int i, int j) {  // phi^A_{ij} as a table
    std::vector<int> t(pair.a.level(i).size());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<int>(k);
    for (int m = i; m < j; ++m)
      for (auto& v : t) v = pair.a.bonding(m)[static_cast<std::size_t>(v)];
    return t;
  };

  pair.b.first = first;
  for (int i = first; i <= top; ++i) {
    std::vector<std::string> names(pair.a.level(sat(i)).size());
    for (std::size_t k = 0; k < names.size(); ++k)
      names[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - first)][k])] =
          "y" + std::to_string(i) + "." + std::to_string(k);
    pair.b.levels.push_back(std::move(names));
  }
  for (int i = first; i < top; ++i) {
    // psi^B_i = pi_{i+1} o phi^A_{sat(i), sat(i+1)} o pi_i^{-1}
    auto base = compose_a(sat(i), sat(i + 1));
    std::vector<int> map(base.size());
    const auto& pi_next = perm[static_cast<std::size_t>(i + 1 - first)];
    const auto& inv_i = inverse[static_cast<std::size_t>(i - first)];
    for (std::size_t x = 0; x < map.size(); ++x)
      map[x] = pi_next[static_cast<std::size_t>(
          base[static_cast<std::size_t>(inv_i[x])])];
    pair.b.bondings.push_back(std::move(map));
  }
  pair.b.validate();

  pair.f.first = first;
  pair.g.first = first;
  for (int i = first; i <= top; ++i) {
    // f_i = pi_i o phi^A_{i, sat(i)} : A_i -> B_i
    auto push = compose_a(i, sat(i));
    std::vector<int> f_i(push.size());
    const auto& pi_i = perm[static_cast<std::size_t>(i - first)];
    for (std::size_t x = 0; x < f_i.size(); ++x)
      f_i[x] = pi_i[static_cast<std::size_t>(push[x])];
    pair.f.index_map.push_back(i);
    pair.f.components.push_back(std::move(f_i));
    // g_i = pi_i^{-1} : B_i -> A_{sat(i)}
    pair.g.index_map.push_back(sat(i));
    pair.g.components.push_back(inverse[static_cast<std::size_t>(i - first)]);
  }
  return pair;
}

}  // namespace testsupport

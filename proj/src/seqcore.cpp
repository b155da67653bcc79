#include "csigma/seqcore.hpp"

#include <algorithm>
#include <deque>

#include "csigma/rips.hpp"

namespace csigma::seqcore {

using space::PointId;

bool is_n_sequence(const space::Space& s, const FinSeq& seq, int scale) {
  const Rational bound(scale);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (s.distance(seq[i], seq[i + 1]) > bound) return false;
  return true;
}

bool is_subsequence(const FinSeq& s, const FinSeq& t) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < t.size() && i < s.size(); ++j)
    if (s[i] == t[j]) ++i;
  return i == s.size();
}

OracleClasses oracle_classes(const OracleModel& model, int scale) {
  const auto& s = model.space;
  const std::size_t n = s.ball_size(model.outer_radius);
  if (static_cast<int>(n) > model.max_vertices)
    throw OracleGuardError("oracle refused: " + std::to_string(n) + " vertices exceeds guard of " +
                           std::to_string(model.max_vertices));
  space::Truncation trunc{model.outer_radius, Rational(0), Rational(1)};
  const auto graph = rips::build_rips(s, scale, trunc);
  const int max_len = model.max_len.value_or(static_cast<int>(n));

  auto in_shell = [&](PointId v) {
    return s.distance_to_basepoint(v) > model.shell_threshold;
  };

  OracleClasses out;
  if (n == 0) return out;

  // Depth-first enumeration in lexicographic order of vertex sequences.
  FinSeq walk{0};
  long long enumerated = 1;
  std::vector<std::size_t> next_choice{0};
  if (in_shell(0)) out.paths.push_back(walk);
  while (!walk.empty()) {
    PointId tip = walk.back();
    const auto& nbrs = graph.adjacency[static_cast<std::size_t>(tip)];
    std::size_t& choice = next_choice.back();
    if (static_cast<int>(walk.size()) >= max_len || choice >= nbrs.size()) {
      walk.pop_back();
      next_choice.pop_back();
      continue;
    }
    PointId next = nbrs[choice++];
    walk.push_back(next);
    next_choice.push_back(0);
    if (++enumerated > model.walk_budget)
      throw OracleGuardError("oracle refused: more than " + std::to_string(model.walk_budget) +
                             " walks of length <= " + std::to_string(max_len) + " (recorded " +
                             std::to_string(out.paths.size()) + " shell-reaching so far)");
    if (in_shell(next)) out.paths.push_back(walk);
  }

  const std::size_t p = out.paths.size();
  out.related.assign(p, {});
  out.class_of.assign(p, -1);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (is_subsequence(out.paths[i], out.paths[j]) ||
          is_subsequence(out.paths[j], out.paths[i])) {
        out.related[i].push_back(static_cast<int>(j));
        out.related[j].push_back(static_cast<int>(i));
      }
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (out.class_of[i] >= 0) continue;
    const int cls = out.class_count++;
    std::deque<std::size_t> queue{i};
    out.class_of[i] = cls;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (int u : out.related[v]) {
        if (out.class_of[static_cast<std::size_t>(u)] >= 0) continue;
        out.class_of[static_cast<std::size_t>(u)] = cls;
        queue.push_back(static_cast<std::size_t>(u));
      }
    }
  }
  return out;
}

std::vector<int> OracleClasses::chain(int a, int b) const {
  if (class_of.at(static_cast<std::size_t>(a)) != class_of.at(static_cast<std::size_t>(b)))
    throw InternalError("chain requested between inequivalent paths");
  std::vector<int> prev(paths.size(), -2);
  std::deque<int> queue{a};
  prev[static_cast<std::size_t>(a)] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == b) break;
    for (int u : related[static_cast<std::size_t>(v)]) {
      if (prev[static_cast<std::size_t>(u)] != -2) continue;
      prev[static_cast<std::size_t>(u)] = v;
      queue.push_back(u);
    }
  }
  std::vector<int> chain;
  for (int cur = b; cur >= 0; cur = prev[static_cast<std::size_t>(cur)]) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace csigma::seqcore

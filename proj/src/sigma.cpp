#include "csigma/sigma.hpp"

#include <algorithm>
#include <map>

namespace csigma::sigma {

using space::PointId;

int SigmaLevel::index_of_component(PointId root) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].component == root) return static_cast<int>(i);
  return -1;
}

namespace {

SigmaLevel level_from_persistence(const rips::RipsGraph& graph, rips::Persistence&& pers) {
  SigmaLevel lvl;
  lvl.scale = graph.scale;
  lvl.outer_radius = graph.outer_radius;
  lvl.inner_radius = graph.inner_radius;
  lvl.witness_margin = graph.witness_margin;
  lvl.component_of = std::move(pers.partition.component_of);
  const std::size_t n = graph.vertex_count();
  // Classes ordered by the root's label, not its id: on a wedge this
  // lines classes up with the rays, so bonding maps of growing windows
  // read as prefix inclusions.
  std::vector<PointId> roots = pers.persistent;
  std::sort(roots.begin(), roots.end(), [&](PointId a, PointId b) {
    return graph.space.label(a) < graph.space.label(b);
  });
  for (PointId root : roots) {
    SigmaClass cls;
    cls.scale = graph.scale;
    cls.component = root;
    // Shortest shell-reaching path: pick the shell vertex of this
    // component with the smallest BFS depth, then id.
    PointId best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (lvl.component_of[v] != root) continue;
      if (!graph.in_shell(static_cast<PointId>(v))) continue;
      if (!pers.bfs.reachable(static_cast<PointId>(v)))
        throw InternalError("persistent component contains unreachable shell vertex");
      if (best < 0 || pers.bfs.depth[v] < pers.bfs.depth[static_cast<std::size_t>(best)])
        best = static_cast<PointId>(v);
    }
    if (best < 0) throw InternalError("persistent component without shell vertex");
    cls.representative = pers.bfs.path_to(best);
    lvl.classes.push_back(std::move(cls));
  }
  return lvl;
}

}  // namespace

SigmaLevel sigma_level(const space::Space& s, int scale, const space::Truncation& trunc) {
  return sigma_level(s, scale, trunc, scale);
}

SigmaLevel sigma_level(const space::Space& s, int scale, const space::Truncation& trunc,
                       int inner_reference) {
  auto graph = rips::build_rips(s, scale, trunc, inner_reference);
  auto pers = rips::persistent_components(graph);
  return level_from_persistence(graph, std::move(pers));
}

std::vector<int> bonding_map(const space::Space& s, int scale, const space::Truncation& trunc) {
  SigmaLevel a = sigma_level(s, scale, trunc, scale + 1);
  SigmaLevel b = sigma_level(s, scale + 1, trunc, scale + 1);
  std::vector<int> map(a.classes.size(), -1);
  for (std::size_t k = 0; k < a.classes.size(); ++k) {
    PointId root = a.classes[k].component;
    PointId target_root = b.component_of.at(static_cast<std::size_t>(root));
    int idx = b.index_of_component(target_root);
    if (idx < 0)
      throw InternalError("scale-" + std::to_string(scale) +
                          " persistent component landed in a non-persistent component one scale up");
    map[k] = idx;
  }
  return map;
}

SigmaWindow ind_sigma(const space::Space& s, int first, int last,
                      const space::Truncation& trunc) {
  if (first < 1 || last < first) throw SpecError("scale window must satisfy 1 <= first <= last");
  SigmaWindow w;
  w.space = s;
  w.first = first;
  w.last = last;
  w.outer_radius = trunc.outer_radius;
  w.inner_radius = trunc.inner_for(last);
  for (int n = first; n <= last; ++n) w.levels.push_back(sigma_level(s, n, trunc, last));
  for (int n = first; n < last; ++n) {
    const SigmaLevel& a = w.level(n);
    const SigmaLevel& b = w.level(n + 1);
    std::vector<int> map(a.classes.size(), -1);
    for (std::size_t k = 0; k < a.classes.size(); ++k) {
      PointId root = a.classes[k].component;
      int idx = b.index_of_component(b.component_of.at(static_cast<std::size_t>(root)));
      if (idx < 0)
        throw InternalError("bonding map hit a non-persistent component at scale " +
                            std::to_string(n + 1));
      map[k] = idx;
    }
    w.bondings.push_back(std::move(map));
  }
  return w;
}

StabilityReport sigma_stability(const SigmaWindow& w) {
  if (w.levels.size() < 2) throw SpecError("stability needs a window of at least two levels");
  auto bijective = [&](int n) {
    const auto& map = w.bonding(n);
    if (map.size() != w.level(n + 1).size()) return false;
    std::vector<bool> hit(map.size(), false);
    for (int img : map) {
      if (hit[static_cast<std::size_t>(img)]) return false;
      hit[static_cast<std::size_t>(img)] = true;
    }
    return true;
  };
  StabilityReport report;
  int k = w.last;  // least K with all bondings at N >= K bijective
  while (k > w.first && bijective(k - 1)) --k;
  if (k == w.last) {
    report.stable_within_window = false;
    report.verdict = "not stable within window [" + std::to_string(w.first) + ".." +
                     std::to_string(w.last) + "]";
  } else {
    report.stable_within_window = true;
    report.stable_from = k;
    report.verdict = "window-stable from K=" + std::to_string(k) + " (evidence on [" +
                     std::to_string(w.first) + ".." + std::to_string(w.last) +
                     "], not a proof of sigma-stability)";
  }
  return report;
}

StabilityReport StabilityReport::of(const SigmaWindow& w) { return sigma_stability(w); }

dirseq::ConcreteSequence to_direct_sequence(const SigmaWindow& w) {
  dirseq::ConcreteSequence seq;
  seq.first = w.first;
  for (const auto& lvl : w.levels) {
    std::vector<std::string> names;
    names.reserve(lvl.classes.size());
    for (const auto& cls : lvl.classes) names.push_back(w.space.label(cls.component).str());
    seq.levels.push_back(std::move(names));
  }
  seq.bondings = w.bondings;
  seq.validate();
  return seq;
}

int locate_class(const SigmaWindow& w, int level, const std::vector<space::Label>& path,
                 std::string* error) {
  auto fail = [&](const std::string& why) {
    if (error) *error = why;
    return -1;
  };
  if (path.empty()) return fail("empty path");
  const SigmaLevel& lvl = w.level(level);
  const Rational bound(level);
  if (!(path.front() == w.space.basepoint_label()))
    return fail("path does not start at the basepoint");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (w.space.distance(path[i], path[i + 1]) > bound)
      return fail("step " + std::to_string(i) + " exceeds scale " + std::to_string(level) +
                  ": d(" + path[i].str() + "," + path[i + 1].str() + ")=" +
                  w.space.distance(path[i], path[i + 1]).str());
  }
  // Follow the path while it stays inside the truncation (a path that
  // leaves the outer ball has already committed to an end out there).
  // The endpoint anchors the class: it must sit outside the inner ball
  // in a persistent component.
  PointId endpoint = -1;
  for (const auto& label : path) {
    auto id = w.space.find(label, w.outer_radius);
    if (!id) break;
    endpoint = *id;
  }
  if (endpoint < 0) return fail("path never enters the truncation");
  PointId root = lvl.component_of.at(static_cast<std::size_t>(endpoint));
  if (root < 0)
    return fail("path ends at " + w.space.label(endpoint).str() + " inside the inner ball of radius " +
                lvl.inner_radius.str() + "; it does not commit to an end");
  int idx = lvl.index_of_component(root);
  if (idx < 0)
    return fail("path ends at " + w.space.label(endpoint).str() +
                " in a component that never reaches the witness shell");
  return idx;
}

OracleAgreement compare_with_oracle(const space::Space& s, int scale,
                                    const space::Truncation& trunc,
                                    const seqcore::OracleModel& guards) {
  auto graph = rips::build_rips(s, scale, trunc);
  auto pers = rips::persistent_components(graph);
  SigmaLevel lvl = level_from_persistence(graph, rips::Persistence(pers));

  seqcore::OracleModel model = guards;
  model.space = s;
  model.outer_radius = graph.outer_radius;
  model.shell_threshold = graph.outer_radius - graph.witness_margin;
  auto oracle = seqcore::oracle_classes(model, scale);

  OracleAgreement result;
  result.sigma_count = lvl.size();
  result.oracle_count = oracle.class_count;
  result.paths = oracle.paths.size();
  if (lvl.size() != static_cast<std::size_t>(oracle.class_count)) {
    result.detail = "class counts differ: sigma=" + std::to_string(lvl.size()) +
                    " oracle=" + std::to_string(oracle.class_count);
    return result;
  }
  // Partition agreement: oracle classes must correspond one-to-one with
  // persistent components via path endpoints.
  std::map<int, PointId> component_for_class;
  for (std::size_t p = 0; p < oracle.paths.size(); ++p) {
    PointId end = oracle.paths[p].back();
    PointId root = pers.partition.component_of.at(static_cast<std::size_t>(end));
    if (root < 0 || lvl.index_of_component(root) < 0) {
      result.detail = "oracle path ends in a non-persistent component at vertex " +
                      s.label(end).str();
      return result;
    }
    auto [it, fresh] = component_for_class.try_emplace(oracle.class_of[p], root);
    if (!fresh && it->second != root) {
      result.detail = "one oracle class spans two components (roots " +
                      s.label(it->second).str() + " and " + s.label(root).str() + ")";
      return result;
    }
  }
  std::vector<PointId> hit;
  for (const auto& [cls, root] : component_for_class) hit.push_back(root);
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) {
    result.detail = "two oracle classes landed in one component";
    return result;
  }
  if (hit.size() != lvl.size()) {
    result.detail = "oracle reached " + std::to_string(hit.size()) + " of " +
                    std::to_string(lvl.size()) + " persistent components";
    return result;
  }
  result.agree = true;
  result.detail = "agree: " + std::to_string(lvl.size()) + " classes, " +
                  std::to_string(oracle.paths.size()) + " shell-reaching paths";
  return result;
}

}  // namespace csigma::sigma

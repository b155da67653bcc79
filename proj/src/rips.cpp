#include "csigma/rips.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace csigma::rips {

using space::PointId;

std::size_t RipsGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

RipsGraph build_rips(const space::Space& s, int scale, const space::Truncation& trunc) {
  return build_rips(s, scale, trunc, scale);
}

RipsGraph build_rips(const space::Space& s, int scale, const space::Truncation& trunc,
                     int inner_reference_scale) {
  if (scale < 1) throw SpecError("rips scale must be a positive integer");
  RipsGraph g;
  g.space = s;
  g.scale = scale;
  g.outer_radius = trunc.outer_radius;
  g.inner_radius = trunc.inner_for(inner_reference_scale);
  g.witness_margin = trunc.witness_for(scale);
  if (g.inner_radius.is_negative() || !(g.inner_radius < g.outer_radius))
    throw SpecError("truncation needs 0 <= inner radius < outer radius");
  if (!(Rational(0) < g.witness_margin)) throw SpecError("witness margin must be positive");

  const std::size_t n = s.ball_size(g.outer_radius);
  g.adjacency.assign(n, {});
  const Rational bound(scale);
  // Vertices are sorted by distance to the basepoint, so any neighbor of
  // v lies in the band |d0(u) - d0(v)| <= N; scan forward until the band
  // closes instead of over all pairs.
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& di = s.distance_to_basepoint(static_cast<PointId>(i));
    const Rational cutoff = di + bound;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.distance_to_basepoint(static_cast<PointId>(j)) > cutoff) break;
      if (s.distance(static_cast<PointId>(i), static_cast<PointId>(j)) <= bound) {
        g.adjacency[i].push_back(static_cast<PointId>(j));
        g.adjacency[j].push_back(static_cast<PointId>(i));
      }
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int ComponentPartition::index_of_root(PointId root) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), root);
  if (it == roots.end() || *it != root) return -1;
  return static_cast<int>(it - roots.begin());
}

namespace {

// Union-find with path compression; roots are canonicalized to the
// minimum member afterwards.
struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), PointId{0});
  }
  PointId find(PointId v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(PointId a, PointId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);  // keep the smaller id as root
    parent[static_cast<std::size_t>(b)] = a;
  }
  std::vector<PointId> parent;
};

}  // namespace

ComponentPartition components_outside(const RipsGraph& g, const Rational& inner_radius) {
  const std::size_t n = g.vertex_count();
  ComponentPartition part;
  part.inner_radius = inner_radius;
  part.component_of.assign(n, PointId{-1});
  auto outside = [&](PointId v) {
    return g.space.distance_to_basepoint(v) > inner_radius;
  };
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!outside(static_cast<PointId>(i))) continue;
    for (PointId j : g.adjacency[i])
      if (j > static_cast<PointId>(i) && outside(j)) uf.unite(static_cast<PointId>(i), j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!outside(static_cast<PointId>(i))) continue;
    PointId root = uf.find(static_cast<PointId>(i));
    part.component_of[i] = root;
    if (root == static_cast<PointId>(i)) part.roots.push_back(root);
  }
  std::sort(part.roots.begin(), part.roots.end());
  return part;
}

BfsTree bfs_from_basepoint(const RipsGraph& g) {
  const std::size_t n = g.vertex_count();
  BfsTree tree;
  tree.depth.assign(n, -1);
  tree.parent.assign(n, PointId{-1});
  if (n == 0) return tree;
  std::deque<PointId> queue;
  tree.depth[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    PointId v = queue.front();
    queue.pop_front();
    for (PointId u : g.adjacency[static_cast<std::size_t>(v)]) {
      if (tree.depth[static_cast<std::size_t>(u)] >= 0) continue;
      tree.depth[static_cast<std::size_t>(u)] = tree.depth[static_cast<std::size_t>(v)] + 1;
      tree.parent[static_cast<std::size_t>(u)] = v;
      queue.push_back(u);
    }
  }
  return tree;
}

std::vector<PointId> BfsTree::path_to(PointId v) const {
  std::vector<PointId> path;
  for (PointId cur = v; cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
    path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

Persistence persistent_components(const RipsGraph& g) {
  if (!(g.inner_radius < g.outer_radius - g.witness_margin))
    throw ThinTruncationError(
        "truncation too thin to witness persistence: R-W=" +
        (g.outer_radius - g.witness_margin).str() + " <= r=" + g.inner_radius.str());
  Persistence out;
  out.partition = components_outside(g, g.inner_radius);
  out.bfs = bfs_from_basepoint(g);
  const std::size_t n = g.vertex_count();
  std::vector<bool> touches_shell(n, false);
  std::vector<bool> reachable(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    PointId root = out.partition.component_of[v];
    if (root < 0) continue;
    if (g.in_shell(static_cast<PointId>(v))) touches_shell[static_cast<std::size_t>(root)] = true;
    if (out.bfs.reachable(static_cast<PointId>(v))) reachable[static_cast<std::size_t>(root)] = true;
  }
  for (PointId root : out.partition.roots)
    if (touches_shell[static_cast<std::size_t>(root)] && reachable[static_cast<std::size_t>(root)])
      out.persistent.push_back(root);
  return out;
}

std::vector<PointId> persistent_components(const space::Space& s, int scale,
                                           const space::Truncation& trunc) {
  return persistent_components(build_rips(s, scale, trunc)).persistent;
}

std::string to_dot(const RipsGraph& g) {
  std::ostringstream os;
  os << "graph rips_scale_" << g.scale << " {\n";
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i)
    os << "  v" << i << " [label=\"" << g.space.label(static_cast<PointId>(i)).str() << "\"];\n";
  for (std::size_t i = 0; i < n; ++i)
    for (PointId j : g.adjacency[i])
      if (j > static_cast<PointId>(i)) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace csigma::rips

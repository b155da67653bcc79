#pragma once

#include <string>
#include <vector>

#include "csigma/space.hpp"

namespace csigma::rips {

/// Scale-N neighborhood graph on a truncation: vertices are exactly the
/// points of enumerate_ball(R) (always the id prefix [0, n)), edges are
/// exactly the pairs at distance <= N. Paths in this graph are exactly
/// the finite point lists whose consecutive distances are <= N.
struct RipsGraph {
  space::Space space;
  int scale = 1;
  Rational outer_radius;   // R
  Rational inner_radius;   // r, resolved
  Rational witness_margin; // W, resolved for this scale
  std::vector<std::vector<space::PointId>> adjacency;  // sorted, symmetric

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t edge_count() const;

  bool outside_inner(space::PointId v) const {
    return space.distance_to_basepoint(v) > inner_radius;
  }
  /// Witness shell: further than R - W from the basepoint.
  bool in_shell(space::PointId v) const {
    return space.distance_to_basepoint(v) > outer_radius - witness_margin;
  }
};

/// Builds the graph. The truncation's unset inner radius defaults to the
/// scale itself (callers working with a scale window pass the window
/// maximum through `inner_reference_scale` so that every level shares one
/// truncation). Throws SpecError for scale < 1.
RipsGraph build_rips(const space::Space& s, int scale, const space::Truncation& trunc);
RipsGraph build_rips(const space::Space& s, int scale, const space::Truncation& trunc,
                     int inner_reference_scale);

/// Partition of the vertices outside the inner ball into connected
/// components of the induced subgraph. Component ids are canonical: the
/// smallest member in enumeration order.
struct ComponentPartition {
  Rational inner_radius;
  std::vector<space::PointId> component_of;  // -1 for vertices at distance <= r
  std::vector<space::PointId> roots;         // ascending

  int index_of_root(space::PointId root) const;
};

ComponentPartition components_outside(const RipsGraph& g, const Rational& inner_radius);

/// Breadth-first tree from the basepoint over the full graph, with
/// deterministic parents (first discovery, neighbors in id order).
struct BfsTree {
  std::vector<int> depth;                    // -1 for unreachable
  std::vector<space::PointId> parent;        // -1 for root/unreachable
  bool reachable(space::PointId v) const { return depth[static_cast<std::size_t>(v)] >= 0; }
  /// Path basepoint -> v; v must be reachable.
  std::vector<space::PointId> path_to(space::PointId v) const;
};

BfsTree bfs_from_basepoint(const RipsGraph& g);

/// The components of components_outside(g, r) that are the truncation's
/// proxies for ends at this scale: they touch the witness shell (some
/// vertex further than R - W, i.e. the component keeps going as far as
/// the truncation can see) and they are reachable from the basepoint in
/// the full graph (an N-sequence from the basepoint can actually enter
/// them). Throws ThinTruncationError when R - W <= r.
struct Persistence {
  ComponentPartition partition;
  BfsTree bfs;
  std::vector<space::PointId> persistent;  // component roots, ascending
};

Persistence persistent_components(const RipsGraph& g);
std::vector<space::PointId> persistent_components(const space::Space& s, int scale,
                                                  const space::Truncation& trunc);

/// Graphviz dump for debugging.
std::string to_dot(const RipsGraph& g);

}  // namespace csigma::rips

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csigma/errors.hpp"
#include "csigma/rational.hpp"

namespace csigma::space {

using PointId = std::int32_t;

/// Structured name of a point inside a presentation.
///
/// `part` is the wedge nesting path (1-based part indices, outermost
/// first); it is empty for points of a non-wedge space and for a wedge
/// point itself. `coord` holds the coordinates of the leaf point (one
/// value for rays and nets, d values for a lattice). `atom` names points
/// of an explicit point cloud.
struct Label {
  std::vector<int> part;
  std::vector<Rational> coord;
  std::string atom;

  friend bool operator==(const Label& a, const Label& b) {
    return a.part == b.part && a.coord == b.coord && a.atom == b.atom;
  }
  friend bool operator<(const Label& a, const Label& b);

  /// Canonical printable form, e.g. "*", "3/2", "(1,-2)", "2:6", "p3".
  std::string str() const;
};

/// Truncation of an infinite presentation to a finite window: keep the
/// ball of radius `outer_radius` around the basepoint, discard the ball
/// of radius `inner_radius` when looking for components at infinity, and
/// treat anything beyond `outer_radius - witness_margin` as the witness
/// shell. Unset fields are resolved per scale: `inner_radius` defaults to
/// the largest scale in play and `witness_margin` to N+1 at scale N.
struct Truncation {
  Rational outer_radius;
  std::optional<Rational> inner_radius;
  std::optional<Rational> witness_margin;

  Rational inner_for(int reference_scale) const {
    return inner_radius.value_or(Rational(reference_scale));
  }
  Rational witness_for(int scale) const {
    return witness_margin.value_or(Rational(scale + 1));
  }
};

namespace detail {
class SpaceImpl;
}

/// A locally finite pointed metric space given by exact pairwise
/// distances and ball enumeration. Immutable value handle; all queries
/// are pure and safe to run from many threads.
///
/// Point ids are assigned in the canonical enumeration order (distance
/// to the basepoint, then label) and are stable across calls: the ball
/// of radius R is always the id prefix [0, |ball(R)|).
class Space {
 public:
  Space() = default;
  explicit Space(std::shared_ptr<const detail::SpaceImpl> impl);

  bool valid() const { return impl_ != nullptr; }

  /// Always id 0: the unique point at distance zero.
  PointId basepoint() const;
  Label basepoint_label() const;

  /// Exact distance between two enumerated points.
  Rational distance(PointId a, PointId b) const;
  Rational distance(const Label& a, const Label& b) const;

  /// All points p with distance(basepoint, p) <= radius, in canonical
  /// order. The result is a contiguous id prefix; monotone in radius.
  std::vector<PointId> enumerate_ball(const Rational& radius) const;

  /// Number of points within `radius` (same enumeration as above).
  std::size_t ball_size(const Rational& radius) const;

  const Label& label(PointId id) const;
  /// Cached distance from the basepoint.
  const Rational& distance_to_basepoint(PointId id) const;

  /// Id of a label if it lies within the enumerated ball of `radius`.
  std::optional<PointId> find(const Label& label, const Rational& radius) const;

  /// Same underlying metric space, re-pointed at `new_basepoint`.
  Space with_basepoint(const Label& new_basepoint) const;

  /// Kind tag, e.g. "discrete_open_book".
  const std::string& kind() const;
  /// One-line parameter summary for reports.
  std::string describe() const;

  /// Underlying presentation; opaque outside the library.
  std::shared_ptr<const detail::SpaceImpl> impl() const { return impl_; }

 private:
  struct Registry;
  std::shared_ptr<const detail::SpaceImpl> impl_;
  std::shared_ptr<Registry> registry_;
};

/// Explicit finite metric space. `distances` is a full square matrix;
/// metric axioms are checked exactly on every triple and violations are
/// reported with a witness. Throws SpecError.
Space point_cloud(std::vector<std::string> names,
                  std::vector<std::vector<Rational>> distances,
                  std::size_t basepoint_index = 0);

/// {0, 1, 2, ...} with |a-b|.
Space integer_ray();
/// {0, s, 2s, ...} with |a-b|; spacing s > 0.
Space discrete_ray(const Rational& spacing);
/// Net {0, d, 2d, ...} standing in for the continuous ray [0, inf).
Space ray_net(const Rational& delta);
/// Two-sided net {k*d : k in Z} standing in for the real line.
Space real_line(const Rational& delta);
/// Z with the usual metric.
Space integer_line();
/// Z^dim with the l1 metric, based at the origin. dim in {1, 2, 3}.
Space lattice(int dim);

/// Metric wedge of pointed presentations: basepoints are glued into a
/// single wedge point; distances within one part are the part's own,
/// distances across parts are the sum of the distances to the respective
/// basepoints. Throws SpecError on an empty list.
Space metric_wedge(std::vector<Space> parts);

/// Wedge of `num_rays` copies of ray_net(delta).
Space open_book(int num_rays, const Rational& delta);
/// Wedge of the arithmetic rays {i*n : n >= 0} for i = 1..num_rays.
Space discrete_open_book(int num_rays);

}  // namespace csigma::space

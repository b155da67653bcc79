#pragma once

#include <string>
#include <vector>

#include "csigma/dirseq.hpp"
#include "csigma/rips.hpp"
#include "csigma/seqcore.hpp"
#include "csigma/space.hpp"

namespace csigma::sigma {

/// One scale-N end class. The computational model: classes are the
/// persistent components of the scale-N graph outside the inner ball
/// (components that reach the witness shell and can be entered from the
/// basepoint by a scale-N path). The representative is a concrete
/// scale-N path from the basepoint into the shell: shortest, ties broken
/// by canonical vertex order.
struct SigmaClass {
  int scale = 1;
  space::PointId component = -1;               // canonical root of the component
  std::vector<space::PointId> representative;  // basepoint -> shell vertex
};

struct SigmaLevel {
  int scale = 1;
  Rational outer_radius;
  Rational inner_radius;
  Rational witness_margin;
  std::vector<SigmaClass> classes;             // ordered by component root
  std::vector<space::PointId> component_of;    // outside-r component per vertex, -1 inside

  std::size_t size() const { return classes.size(); }
  /// Index of the class owning component `root`, or -1.
  int index_of_component(space::PointId root) const;
};

/// Classes at one scale. The truncation's unset inner radius defaults to
/// the scale (pass `inner_reference` when the level takes part in a
/// window). Throws ThinTruncationError when R - W <= r.
SigmaLevel sigma_level(const space::Space& s, int scale, const space::Truncation& trunc);
SigmaLevel sigma_level(const space::Space& s, int scale, const space::Truncation& trunc,
                       int inner_reference);

/// The reinterpretation map from scale N to scale N+1: every scale-N
/// component sits inside a unique scale-(N+1) component over the same
/// truncation. Entry k is the target class index of class k.
std::vector<int> bonding_map(const space::Space& s, int scale, const space::Truncation& trunc);

/// Levels N = first..last over one shared truncation, with all bonding
/// maps. The computable stand-in for the full direct sequence of sets.
struct SigmaWindow {
  space::Space space;
  int first = 1;
  int last = 1;
  Rational outer_radius;
  Rational inner_radius;
  std::vector<SigmaLevel> levels;
  std::vector<std::vector<int>> bondings;  // bondings[k]: level first+k -> first+k+1

  const SigmaLevel& level(int n) const {
    return levels.at(static_cast<std::size_t>(n - first));
  }
  const std::vector<int>& bonding(int n) const {
    return bondings.at(static_cast<std::size_t>(n - first));
  }
};

SigmaWindow ind_sigma(const space::Space& s, int first, int last,
                      const space::Truncation& trunc);

/// Window-relative stability: the least K in the window from which every
/// bonding map is a bijection. Evidence only — a truncation can never
/// prove sigma-stability of the underlying space.
struct StabilityReport {
  bool stable_within_window = false;
  int stable_from = 0;  // K, valid when stable
  std::string verdict;

  static StabilityReport of(const SigmaWindow& w);
};

/// Needs >= 2 levels; throws SpecError otherwise.
StabilityReport sigma_stability(const SigmaWindow& w);

/// Window as a concrete direct sequence of sets; elements are named by
/// the canonical component roots.
dirseq::ConcreteSequence to_direct_sequence(const SigmaWindow& w);

/// Classifies a concrete path (given by labels, starting at the
/// basepoint) at a window level: follows the path while it stays inside
/// the truncation, requires the last visible vertex to sit outside the
/// inner ball in a persistent component, and returns that component's
/// class index. On failure returns -1 and fills `error`.
int locate_class(const SigmaWindow& w, int level, const std::vector<space::Label>& path,
                 std::string* error);

/// Agreement between the persistent-component model and the literal
/// brute-force oracle on one truncation: equal class counts and a
/// bijective correspondence between oracle classes and persistent
/// components via path endpoints.
struct OracleAgreement {
  bool agree = false;
  std::size_t sigma_count = 0;
  int oracle_count = 0;
  std::size_t paths = 0;
  std::string detail;
};

OracleAgreement compare_with_oracle(const space::Space& s, int scale,
                                    const space::Truncation& trunc,
                                    const seqcore::OracleModel& guards);

}  // namespace csigma::sigma

#pragma once

#include <optional>
#include <vector>

#include "csigma/space.hpp"

namespace csigma::seqcore {

/// A finite point list within one presentation, first element the
/// basepoint. Stands in for the infinite sequences of the underlying
/// theory on a truncation.
using FinSeq = std::vector<space::PointId>;

/// True iff all consecutive distances are <= scale.
bool is_n_sequence(const space::Space& s, const FinSeq& seq, int scale);

/// True iff s is obtained from t by deleting terms (order-preserving
/// embedding); greedy check.
bool is_subsequence(const FinSeq& s, const FinSeq& t);

/// Finite reformulation of "goes to infinity": a path counts as escaping
/// when its final vertex lies beyond `shell_threshold` (callers use
/// R - W). This is a modeling choice; it matches the way tails of
/// escaping sequences behave beyond the scale horizon.
struct OracleModel {
  space::Space space;
  Rational outer_radius;
  Rational shell_threshold;
  std::optional<int> max_len;       // L, number of terms; default: vertex count
  int max_vertices = 14;            // refusal guard
  long long walk_budget = 2000000;  // refusal guard on enumerated walks
};

/// Chain-equivalence classes of the enumerated shell-reaching paths:
/// paths are related when one is a subsequence of the other, and classes
/// are the connected components of that relation. Enumeration covers all
/// scale-N walks from the basepoint with at most L terms and no
/// consecutive repeats (a walk with repeats reduces to its repeat-free
/// form by deletions, which are subsequence steps, so classes are
/// unaffected).
struct OracleClasses {
  std::vector<FinSeq> paths;       // lexicographic order
  std::vector<int> class_of;       // per path
  int class_count = 0;
  std::vector<std::vector<int>> related;  // the ~ graph on path indices

  /// A chain s = p_0 ~ p_1 ~ ... ~ p_k = t witnessing equivalence of two
  /// paths in the same class (indices into `paths`).
  std::vector<int> chain(int a, int b) const;
};

/// Throws OracleGuardError when the model exceeds its guards.
OracleClasses oracle_classes(const OracleModel& model, int scale);

}  // namespace csigma::seqcore

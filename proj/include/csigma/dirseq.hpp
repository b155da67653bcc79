#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csigma/errors.hpp"

namespace csigma::dirseq {

/// Set size in the two-valued extension {finite n, omega}. Everything in
/// scope is countable; no higher cardinals.
struct Cardinality {
  bool omega = false;
  std::int64_t value = 0;

  static Cardinality finite(std::int64_t n) { return Cardinality{false, n}; }
  static Cardinality inf() { return Cardinality{true, 0}; }

  std::string str() const { return omega ? "omega" : std::to_string(value); }

  friend bool operator==(const Cardinality& a, const Cardinality& b) {
    return a.omega == b.omega && (a.omega || a.value == b.value);
  }
  friend bool operator!=(const Cardinality& a, const Cardinality& b) { return !(a == b); }
  friend bool operator<(const Cardinality& a, const Cardinality& b) {
    if (a.omega) return false;
    if (b.omega) return true;
    return a.value < b.value;
  }
};

/// Direct sequence of finite sets on a finite index window
/// [first, first + levels.size()): named elements per level and a total
/// bonding function into the next level.
struct ConcreteSequence {
  int first = 1;
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<int>> bondings;  // bondings[k]: level first+k -> first+k+1

  int last() const { return first + static_cast<int>(levels.size()) - 1; }
  bool contains_index(int i) const { return i >= first && i <= last(); }
  const std::vector<std::string>& level(int i) const {
    return levels.at(static_cast<std::size_t>(i - first));
  }
  const std::vector<int>& bonding(int i) const {
    return bondings.at(static_cast<std::size_t>(i - first));
  }

  /// Totality and index bounds; throws SpecError.
  void validate() const;
};

/// Size formula from the fixed grammar: constant k | linear N | omega.
struct SizeFormula {
  enum class Kind { Constant, LinearN, Omega };
  Kind kind = Kind::Constant;
  std::int64_t constant = 0;

  Cardinality at(int n) const {
    switch (kind) {
      case Kind::Constant: return Cardinality::finite(constant);
      case Kind::LinearN: return Cardinality::finite(n);
      case Kind::Omega: return Cardinality::inf();
    }
    return Cardinality::finite(0);
  }
  std::string str() const;
};

enum class SymbolicBonding { Identity, InclusionPrefix };

/// Direct sequence given by a cardinality formula and a bonding shape,
/// for the sequences whose geometric truncations can never be exhibited
/// whole (identity bondings on an infinite set; prefix inclusions of
/// growing finite sets).
struct SymbolicSequence {
  SizeFormula size;
  SymbolicBonding bonding = SymbolicBonding::Identity;

  void validate() const;  // identity needs a constant formula
};

using DirectSequence = std::variant<ConcreteSequence, SymbolicSequence>;

/// A function between two levels of a sequence: explicit table when both
/// sides are finite, descriptor otherwise.
struct SetFunction {
  Cardinality domain;
  Cardinality codomain;
  std::string descriptor;                 // "identity" | "inclusion" | "table"
  std::optional<std::vector<int>> table;  // by element index
};

/// phi_{ij} = phi_{j-1} o ... o phi_i; phi_{ii} is the identity.
/// Throws SpecError for indices outside the window or i > j.
SetFunction compose_bonding(const DirectSequence& seq, int i, int j);

/// Morphism between direct sequences: component functions
/// f_i: X_i -> Y_{u(i)} on a window of the domain.
struct Morphism {
  int first = 1;                             // domain index of components.front()
  std::vector<int> index_map;                // u(i)
  std::vector<std::vector<int>> components;  // f_i, element index tables

  int last() const { return first + static_cast<int>(components.size()) - 1; }
  bool contains_index(int i) const { return i >= first && i <= last(); }
  int u(int i) const { return index_map.at(static_cast<std::size_t>(i - first)); }
  const std::vector<int>& component(int i) const {
    return components.at(static_cast<std::size_t>(i - first));
  }
};

/// One failing instance of the commutation law.
struct MorphismViolation {
  int i = 0;
  int j = 0;
  int element = 0;
  int via_f_first = 0;   // push f_i(x) forward, at the comparison level
  int via_phi_first = 0; // bond x forward then apply f_j
};

struct MorphismReport {
  bool ok = false;
  std::vector<MorphismViolation> violations;
  std::vector<std::string> structural_errors;  // ill-typed component tables etc.
};

/// Verifies psi_{u(i)u(j)} o f_i = f_j o phi_{ij} for all i < j in the
/// window (comparing at level max(u(i), u(j)) when u is not monotone).
/// Violations are report content, not errors.
MorphismReport check_morphism(const Morphism& m, const ConcreteSequence& A,
                              const ConcreteSequence& B);

/// Rewrites a morphism into an equivalent one with u(i) >= i and u
/// strictly increasing by post-composing with target bondings. Throws
/// SpecError when the target window is too short to push indices up.
Morphism normalize_morphism(const Morphism& m, const ConcreteSequence& A,
                            const ConcreteSequence& B);

struct EquivalenceReport {
  enum class Verdict { Pass, Fail, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  int checked_left = 0;            // instances of g_{u(i)} o f_i = phi_{i v(u(i))}
  int checked_right = 0;           // instances of f_{v(i)} o g_i = psi_{i u(v(i))}
  int out_of_window = 0;           // required instances that did not fit the window
  std::vector<std::string> failures;
  std::string note;

  bool pass() const { return verdict == Verdict::Pass; }
};

/// Verifies the two composite laws of an equivalence of direct sequences
/// on the window. `required_first..required_last` (defaults: the full
/// domain windows of f and g) bound the indices that must be decidable:
/// a required composite that runs off the window makes the verdict
/// "inconclusive: window too short", which is distinct from failure.
EquivalenceReport check_equivalence(const Morphism& f, const Morphism& g,
                                    const ConcreteSequence& A, const ConcreteSequence& B,
                                    std::optional<int> required_first = std::nullopt,
                                    std::optional<int> required_last = std::nullopt);

/// Direct limit: quotient of the disjoint union of the levels by
/// eventual-image agreement. For a concrete window, classes are computed
/// by forward propagation and indexed in order of their earliest
/// representative (level, then element). For symbolic sequences the
/// closed form applies: identity bondings give the constant set, prefix
/// inclusions give the union with cardinality sup of the sizes.
struct LimitSet {
  Cardinality cardinality;
  std::string descriptor;  // "concrete" | "constant-set" | "increasing-union"
  // Concrete data (empty for symbolic limits):
  std::vector<std::pair<int, int>> representatives;  // (level, element index)
  std::vector<std::vector<int>> class_of;            // per level, element -> class
};

LimitSet direct_limit(const DirectSequence& seq);

/// The map [x_i] -> [f_i(x_i)] on concrete limits. Well-definedness is
/// asserted by exhaustive check over the window; a morphism that fails
/// check_morphism may be rejected here with SpecError.
std::vector<int> induced_limit_map(const Morphism& m, const ConcreteSequence& A,
                                   const ConcreteSequence& B);

/// Cardinality obstruction to equivalence: if some level N of A has
/// stable image size c (the images of the forward bondings out of N
/// never drop below c) and every level of B is strictly smaller than c,
/// then no equivalence can exist, because the composite law would factor
/// a function of image size c through a level of B.
///
/// Both certificates need the symbolic form: a concrete window only
/// bounds A's stable images from above and leaves B's unseen levels
/// unbounded, so concrete inputs always come back inconclusive — the
/// obstruction never fabricates a negative from windowed data.
struct ObstructionResult {
  enum class Verdict { NotEquivalent, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> witness_level;
  Cardinality stable_image = Cardinality::finite(0);
  std::string explanation;

  bool fired() const { return verdict == Verdict::NotEquivalent; }
};

ObstructionResult cardinality_obstruction(const DirectSequence& A, const DirectSequence& B);

/// Spells out a symbolic sequence on a finite window. Throws SpecError
/// when a level is infinite.
ConcreteSequence materialize(const SymbolicSequence& s, int first, int last);

}  // namespace csigma::dirseq

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csigma/sigma.hpp"

namespace csigma::maps {

/// Declared control witness N -> M certifying bornology: d(x,y) <= N
/// implies d(f x, f y) <= M(N). Either an affine formula or an explicit
/// table; must be monotone with M(N) >= N, which is validated at every
/// evaluation. A table control is undefined beyond its largest key.
struct ControlFunction {
  std::optional<std::pair<std::int64_t, std::int64_t>> affine;  // M(N) = a*N + b
  std::map<int, int> table;

  int operator()(int n) const;
  static ControlFunction affine_fn(std::int64_t slope, std::int64_t offset);
  static ControlFunction table_fn(std::map<int, int> entries);
};

/// A point map between presentations carrying its bornology control and,
/// when paired with a partner map, the closeness constant of the
/// composite to the identity. The control and closeness are declared
/// data, verified rather than inferred.
struct ControlledMap {
  space::Space domain;
  space::Space codomain;
  std::string name;  // builtin tag or "table"
  std::function<space::Label(const space::Label&)> apply;
  ControlFunction control;
  std::optional<Rational> closeness;  // K for the composite with the partner
};

/// identity on labels; also the natural inclusion of a subspace whose
/// labels embed verbatim (Z into a real-line net, the arithmetic book
/// into the open book).
ControlledMap label_inclusion(space::Space domain, space::Space codomain,
                              ControlFunction control, std::string name = "inclusion");

/// Coordinate floor: a line or ray net onto its integer counterpart.
ControlledMap floor_map(space::Space domain, space::Space codomain);

/// Per-ray floor of an open book onto the arithmetic book: a point at
/// coordinate t on ray i goes to i*floor(t/i) on ray i.
ControlledMap wedge_floor(space::Space domain, space::Space codomain, int num_rays);

/// Explicit label table; undefined points raise SpecError when applied.
ControlledMap table_map(space::Space domain, space::Space codomain,
                        std::map<std::string, std::string> label_table, ControlFunction control);

struct ValidationReport {
  bool control_ok = false;
  std::vector<std::string> violations;  // control breaches, undefined points (with witnesses)
  bool properness_ok = false;
  std::string properness_note;
  std::size_t checked_pairs = 0;

  bool ok() const { return control_ok && properness_ok; }
};

/// Exhaustively checks the control inequality on all pairs within the
/// sample ball and a finite properness proxy (no deep point may map near
/// the codomain basepoint). The proxy is evidence, not a certificate:
/// properness is a statement about all radii.
ValidationReport validate_controlled(const ControlledMap& m, const Rational& sample_radius);

enum class Direction {
  Forward,  // class of (x_0, x_1, ...) -> class of (f x_0, f x_1, ...)
  Partner   // class of (y_0, y_1, ...) -> class of (x_0, g y_0, g y_1, ...)
};

/// The level maps sigma_N(domain) -> sigma_{M(N)}(codomain) obtained by
/// pushing class representatives through the point map, with
/// M(N) = max(control(N), N+1) and additionally > K in the partner
/// direction. Throws SpecError when an image path cannot be classified
/// (truncation mismatch), naming the offending representative.
struct InducedMorphism {
  dirseq::Morphism morphism;
  sigma::SigmaWindow domain_window;
  sigma::SigmaWindow codomain_window;
};

InducedMorphism induced_morphism(const ControlledMap& m, Direction dir, int first, int last,
                                 const space::Truncation& domain_trunc,
                                 const space::Truncation& codomain_trunc);

/// Basepoint change: both morphisms between sigma(X, x0) and
/// sigma(X, y0), built by attaching the other basepoint to the front of
/// each representative. Levels shift up to M = ceil d(x0, y0) and stay
/// put beyond it.
struct RebaseResult {
  dirseq::Morphism forward;   // sigma(X, x0) -> sigma(X, y0)
  dirseq::Morphism backward;  // sigma(X, y0) -> sigma(X, x0)
  sigma::SigmaWindow window_old;
  sigma::SigmaWindow window_new;
  dirseq::EquivalenceReport equivalence;
};

RebaseResult rebase(const space::Space& s, const space::Label& new_basepoint, int first,
                    int last, const space::Truncation& trunc);

/// A coarse equivalence candidate: forward and backward maps plus the
/// declared closeness constants of both composites to the identities.
struct CoarsePair {
  ControlledMap forward;   // f: X -> Y
  ControlledMap backward;  // g: Y -> X
  Rational closeness_gf;   // d(g(f x), x) <= K_gf
  Rational closeness_fg;   // d(f(g y), y) <= K_fg
};

/// Interleaving witness for one class: the supersequence
/// x0, gf(x0), x0, x1, gf(x1), x1, ... that covers both the original
/// representative and its image under the composite.
struct InterleavingWitness {
  int level = 0;
  int class_index = 0;
  bool valid_path = false;     // all steps within the comparison scale
  bool covers_both = false;    // both sequences embed order-preservingly
  bool classes_agree = false;  // endpoints land in the same class
  std::string detail;

  bool ok() const { return valid_path && covers_both && classes_agree; }
};

struct CoarseEquivalenceReport {
  ValidationReport forward_validation;
  ValidationReport backward_validation;
  dirseq::MorphismReport forward_morphism;
  dirseq::MorphismReport backward_morphism;
  dirseq::EquivalenceReport equivalence;
  std::vector<InterleavingWitness> witnesses;

  bool pass() const;
};

/// Builds both induced morphisms, checks the two composite laws on the
/// requested window, and constructs the interleaving supersequence
/// witness for every checked class.
CoarseEquivalenceReport verify_coarse_equivalence(const CoarsePair& pair, int first, int last,
                                                  const space::Truncation& domain_trunc,
                                                  const space::Truncation& codomain_trunc,
                                                  const Rational& validation_radius);

}  // namespace csigma::maps

#include "csigma/dirseq.hpp"

#include <algorithm>
#include <map>

namespace csigma::dirseq {

void ConcreteSequence::validate() const {
  if (levels.empty()) throw SpecError("concrete sequence needs at least one level");
  if (bondings.size() + 1 != levels.size())
    throw SpecError("concrete sequence needs exactly one bonding per adjacent level pair");
  for (std::size_t k = 0; k < bondings.size(); ++k) {
    if (bondings[k].size() != levels[k].size())
      throw SpecError("bonding out of level " + std::to_string(first + static_cast<int>(k)) +
                      " is not total");
    for (int img : bondings[k])
      if (img < 0 || img >= static_cast<int>(levels[k + 1].size()))
        throw SpecError("bonding out of level " + std::to_string(first + static_cast<int>(k)) +
                        " hits no element of the next level");
  }
}

std::string SizeFormula::str() const {
  switch (kind) {
    case Kind::Constant: return "constant " + std::to_string(constant);
    case Kind::LinearN: return "linear N";
    case Kind::Omega: return "omega";
  }
  return "?";
}

void SymbolicSequence::validate() const {
  if (bonding == SymbolicBonding::Identity && size.kind == SizeFormula::Kind::LinearN)
    throw SpecError("identity bondings need a constant size formula");
  if (size.kind == SizeFormula::Kind::Constant && size.constant < 0)
    throw SpecError("negative set size");
}

namespace {

std::vector<int> compose_tables(const std::vector<int>& first_map,
                                const std::vector<int>& then_map) {
  std::vector<int> out(first_map.size());
  for (std::size_t x = 0; x < first_map.size(); ++x)
    out[x] = then_map.at(static_cast<std::size_t>(first_map[x]));
  return out;
}

std::vector<int> identity_table(std::size_t n) {
  std::vector<int> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<int>(i);
  return t;
}

/// Table of phi_{ij} for a concrete sequence.
std::vector<int> bonding_table(const ConcreteSequence& seq, int i, int j) {
  std::vector<int> t = identity_table(seq.level(i).size());
  for (int k = i; k < j; ++k) t = compose_tables(t, seq.bonding(k));
  return t;
}

}  // namespace

SetFunction compose_bonding(const DirectSequence& seq, int i, int j) {
  if (i > j) throw SpecError("compose_bonding needs i <= j");
  if (const auto* c = std::get_if<ConcreteSequence>(&seq)) {
    if (!c->contains_index(i) || !c->contains_index(j))
      throw SpecError("bonding indices outside window [" + std::to_string(c->first) + ", " +
                      std::to_string(c->last()) + "]");
    SetFunction f;
    f.domain = Cardinality::finite(static_cast<std::int64_t>(c->level(i).size()));
    f.codomain = Cardinality::finite(static_cast<std::int64_t>(c->level(j).size()));
    f.descriptor = i == j ? "identity" : "table";
    f.table = bonding_table(*c, i, j);
    return f;
  }
  const auto& s = std::get<SymbolicSequence>(seq);
  s.validate();
  SetFunction f;
  f.domain = s.size.at(i);
  f.codomain = s.size.at(j);
  f.descriptor = s.bonding == SymbolicBonding::Identity || i == j ? "identity" : "inclusion";
  if (!f.domain.omega && !f.codomain.omega) {
    // Identity keeps indices; a prefix inclusion does too.
    f.table = identity_table(static_cast<std::size_t>(f.domain.value));
  }
  return f;
}

MorphismReport check_morphism(const Morphism& m, const ConcreteSequence& A,
                              const ConcreteSequence& B) {
  MorphismReport report;
  if (m.index_map.size() != m.components.size()) {
    report.structural_errors.push_back("index map and component list disagree in length");
    return report;
  }
  for (int i = m.first; i <= m.last(); ++i) {
    if (!A.contains_index(i)) {
      report.structural_errors.push_back("component at level " + std::to_string(i) +
                                         " outside the domain window");
      continue;
    }
    if (!B.contains_index(m.u(i))) {
      report.structural_errors.push_back("u(" + std::to_string(i) + ")=" +
                                         std::to_string(m.u(i)) +
                                         " outside the target window");
      continue;
    }
    const auto& f = m.component(i);
    if (f.size() != A.level(i).size()) {
      report.structural_errors.push_back("component at level " + std::to_string(i) +
                                         " is not total");
      continue;
    }
    for (int img : f)
      if (img < 0 || img >= static_cast<int>(B.level(m.u(i)).size()))
        report.structural_errors.push_back("component at level " + std::to_string(i) +
                                           " maps outside Y_" + std::to_string(m.u(i)));
  }
  if (!report.structural_errors.empty()) return report;

  for (int i = m.first; i <= m.last(); ++i) {
    for (int j = i + 1; j <= m.last(); ++j) {
      const int ui = m.u(i), uj = m.u(j);
      const int top = std::max(ui, uj);
      // Compare both routes at the higher of the two target levels, so a
      // not-yet-normalized index map is checked fairly.
      auto via_f = compose_tables(m.component(i), bonding_table(B, ui, top));
      auto via_phi =
          compose_tables(bonding_table(A, i, j), compose_tables(m.component(j), bonding_table(B, uj, top)));
      for (std::size_t x = 0; x < via_f.size(); ++x) {
        if (via_f[x] != via_phi[x])
          report.violations.push_back(MorphismViolation{i, j, static_cast<int>(x), via_f[x],
                                                        via_phi[x]});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Morphism normalize_morphism(const Morphism& m, const ConcreteSequence& A,
                            const ConcreteSequence& B) {
  (void)A;
  Morphism out = m;
  int floor_level = B.first - 1;
  for (int i = m.first; i <= m.last(); ++i) {
    const std::size_t k = static_cast<std::size_t>(i - m.first);
    int target = std::max({m.u(i), i, floor_level + 1});
    if (target > B.last())
      throw SpecError("window too short to push index u(" + std::to_string(i) + ")=" +
                      std::to_string(m.u(i)) + " up to " + std::to_string(target));
    out.components[k] = compose_tables(m.component(i), bonding_table(B, m.u(i), target));
    out.index_map[k] = target;
    floor_level = target;
  }
  return out;
}

namespace {

std::string law_failure(const char* law, int i, int element, int got, int want) {
  return std::string(law) + " law fails at level " + std::to_string(i) + ", element " +
         std::to_string(element) + ": composite gives " + std::to_string(got) +
         ", bonding gives " + std::to_string(want);
}

}  // namespace

EquivalenceReport check_equivalence(const Morphism& f, const Morphism& g,
                                    const ConcreteSequence& A, const ConcreteSequence& B,
                                    std::optional<int> required_first,
                                    std::optional<int> required_last) {
  EquivalenceReport report;
  auto fr = check_morphism(f, A, B);
  auto gr = check_morphism(g, B, A);
  if (!fr.ok || !gr.ok) {
    report.verdict = EquivalenceReport::Verdict::Fail;
    report.note = "morphism precondition failed";
    for (const auto& v : fr.violations)
      report.failures.push_back("f violates commutation at (" + std::to_string(v.i) + "," +
                                std::to_string(v.j) + ")");
    for (const auto& s : fr.structural_errors) report.failures.push_back("f: " + s);
    for (const auto& v : gr.violations)
      report.failures.push_back("g violates commutation at (" + std::to_string(v.i) + "," +
                                std::to_string(v.j) + ")");
    for (const auto& s : gr.structural_errors) report.failures.push_back("g: " + s);
    return report;
  }

  // Left law: g_{u(i)} o f_i = phi_{i, v(u(i))} for i in f's window.
  for (int i = f.first; i <= f.last(); ++i) {
    const bool required = i >= required_first.value_or(f.first) &&
                          i <= required_last.value_or(f.last());
    const int ui = f.u(i);
    if (!g.contains_index(ui)) {
      if (required) ++report.out_of_window;
      continue;
    }
    const int w = g.u(ui);  // v(u(i))
    if (!A.contains_index(w)) {
      if (required) ++report.out_of_window;
      continue;
    }
    if (w < i) {
      report.failures.push_back("v(u(" + std::to_string(i) + "))=" + std::to_string(w) +
                                " precedes " + std::to_string(i) +
                                "; composite cannot equal a forward bonding");
      continue;
    }
    auto composite = compose_tables(f.component(i), g.component(ui));
    auto bonded = bonding_table(A, i, w);
    ++report.checked_left;
    for (std::size_t x = 0; x < composite.size(); ++x)
      if (composite[x] != bonded[x])
        report.failures.push_back(law_failure("left", i, static_cast<int>(x), composite[x],
                                              bonded[x]));
  }

  // Right law: f_{v(i)} o g_i = psi_{i, u(v(i))} for i in g's window.
  for (int i = g.first; i <= g.last(); ++i) {
    const bool required = i >= required_first.value_or(g.first) &&
                          i <= required_last.value_or(g.last());
    const int vi = g.u(i);
    if (!f.contains_index(vi)) {
      if (required) ++report.out_of_window;
      continue;
    }
    const int w = f.u(vi);  // u(v(i))
    if (!B.contains_index(w)) {
      if (required) ++report.out_of_window;
      continue;
    }
    if (w < i) {
      report.failures.push_back("u(v(" + std::to_string(i) + "))=" + std::to_string(w) +
                                " precedes " + std::to_string(i) +
                                "; composite cannot equal a forward bonding");
      continue;
    }
    auto composite = compose_tables(g.component(i), f.component(vi));
    auto bonded = bonding_table(B, i, w);
    ++report.checked_right;
    for (std::size_t x = 0; x < composite.size(); ++x)
      if (composite[x] != bonded[x])
        report.failures.push_back(law_failure("right", i, static_cast<int>(x), composite[x],
                                              bonded[x]));
  }

  if (!report.failures.empty()) {
    report.verdict = EquivalenceReport::Verdict::Fail;
  } else if (report.out_of_window > 0) {
    report.verdict = EquivalenceReport::Verdict::Inconclusive;
    report.note = "inconclusive: window too short for " + std::to_string(report.out_of_window) +
                  " required composite(s)";
  } else {
    report.verdict = EquivalenceReport::Verdict::Pass;
  }
  return report;
}

LimitSet direct_limit(const DirectSequence& seq) {
  if (const auto* c = std::get_if<ConcreteSequence>(&seq)) {
    c->validate();
    LimitSet lim;
    lim.descriptor = "concrete";
    const int T = c->last();
    // Two window elements are identified iff their forward images agree
    // at some window level; images can only keep merging, so agreement
    // anywhere implies agreement at the top level.
    std::map<int, int> class_of_top_element;
    lim.class_of.resize(c->levels.size());
    for (int i = c->first; i <= T; ++i) {
      auto push = bonding_table(*c, i, T);
      auto& row = lim.class_of[static_cast<std::size_t>(i - c->first)];
      row.resize(c->level(i).size());
      for (std::size_t x = 0; x < push.size(); ++x) {
        auto [it, fresh] = class_of_top_element.try_emplace(
            push[x], static_cast<int>(lim.representatives.size()));
        if (fresh) lim.representatives.emplace_back(i, static_cast<int>(x));
        row[x] = it->second;
      }
    }
    lim.cardinality = Cardinality::finite(static_cast<std::int64_t>(lim.representatives.size()));
    return lim;
  }
  const auto& s = std::get<SymbolicSequence>(seq);
  s.validate();
  LimitSet lim;
  switch (s.bonding) {
    case SymbolicBonding::Identity:
      lim.descriptor = "constant-set";
      lim.cardinality = s.size.at(1);
      break;
    case SymbolicBonding::InclusionPrefix:
      lim.descriptor = "increasing-union";
      switch (s.size.kind) {
        case SizeFormula::Kind::Constant: lim.cardinality = Cardinality::finite(s.size.constant); break;
        case SizeFormula::Kind::LinearN: lim.cardinality = Cardinality::inf(); break;
        case SizeFormula::Kind::Omega: lim.cardinality = Cardinality::inf(); break;
      }
      break;
  }
  return lim;
}

std::vector<int> induced_limit_map(const Morphism& m, const ConcreteSequence& A,
                                   const ConcreteSequence& B) {
  if (m.first != A.first || m.last() != A.last())
    throw SpecError("induced limit map needs morphism components on the whole window");
  LimitSet limA = direct_limit(DirectSequence(A));
  LimitSet limB = direct_limit(DirectSequence(B));
  std::vector<int> map(static_cast<std::size_t>(limA.cardinality.value), -1);
  for (int i = A.first; i <= A.last(); ++i) {
    const int ui = m.u(i);
    if (!B.contains_index(ui)) throw SpecError("morphism runs outside the target window");
    for (std::size_t x = 0; x < A.level(i).size(); ++x) {
      int source_class = limA.class_of[static_cast<std::size_t>(i - A.first)][x];
      int image_class =
          limB.class_of[static_cast<std::size_t>(ui - B.first)]
                       [static_cast<std::size_t>(m.component(i)[x])];
      if (map[static_cast<std::size_t>(source_class)] == -1) {
        map[static_cast<std::size_t>(source_class)] = image_class;
      } else if (map[static_cast<std::size_t>(source_class)] != image_class) {
        throw SpecError("induced limit map is not well defined at level " + std::to_string(i) +
                        ", element " + std::to_string(x) +
                        "; the morphism does not commute with the bondings");
      }
    }
  }
  return map;
}

ObstructionResult cardinality_obstruction(const DirectSequence& A, const DirectSequence& B) {
  ObstructionResult result;
  // The verdict must never fabricate a negative from windowed data: a
  // concrete window only bounds the stable images of A from above and
  // says nothing about the unseen levels of B. Both sides need certified
  // formulas before the obstruction may fire.
  if (std::holds_alternative<ConcreteSequence>(A)) {
    std::get<ConcreteSequence>(A).validate();
    result.explanation =
        "inconclusive: a finite window only bounds stable image sizes from above";
    return result;
  }
  if (std::holds_alternative<ConcreteSequence>(B)) {
    std::get<ConcreteSequence>(B).validate();
    result.explanation =
        "inconclusive: a finite window cannot bound the unseen levels of the other sequence";
    return result;
  }
  const auto& a = std::get<SymbolicSequence>(A);
  const auto& b = std::get<SymbolicSequence>(B);
  a.validate();
  b.validate();

  // Stable image out of level N: identity keeps the whole set, a prefix
  // inclusion keeps X_N inside every later level; either way |X_N|.
  auto fire = [&](int level, Cardinality c) {
    result.verdict = ObstructionResult::Verdict::NotEquivalent;
    result.witness_level = level;
    result.stable_image = c;
    result.explanation = "the bondings out of level " + std::to_string(level) +
                         " keep an image of size " + c.str() +
                         ", but every level of the other sequence is smaller; an equivalence "
                         "would factor that image through one of those levels";
    return result;
  };
  const bool b_all_finite = b.size.kind != SizeFormula::Kind::Omega;
  switch (a.size.kind) {
    case SizeFormula::Kind::Omega:
      if (b_all_finite) return fire(1, Cardinality::inf());
      break;
    case SizeFormula::Kind::Constant:
      if (b.size.kind == SizeFormula::Kind::Constant && b.size.constant < a.size.constant)
        return fire(1, Cardinality::finite(a.size.constant));
      break;
    case SizeFormula::Kind::LinearN:
      // Image sizes grow without bound; a uniform finite ceiling on B is
      // beaten by a late enough level.
      if (b.size.kind == SizeFormula::Kind::Constant) {
        const int level = static_cast<int>(b.size.constant) + 1;
        return fire(level, Cardinality::finite(level));
      }
      break;
  }
  result.explanation = "no level's stable image certifiably exceeds every level of the other "
                       "sequence";
  return result;
}

ConcreteSequence materialize(const SymbolicSequence& s, int first, int last) {
  s.validate();
  if (first > last) throw SpecError("empty window");
  ConcreteSequence out;
  out.first = first;
  for (int i = first; i <= last; ++i) {
    Cardinality size = s.size.at(i);
    if (size.omega) throw SpecError("cannot spell out an infinite level");
    std::vector<std::string> level;
    level.reserve(static_cast<std::size_t>(size.value));
    for (std::int64_t k = 1; k <= size.value; ++k) level.push_back("e" + std::to_string(k));
    out.levels.push_back(std::move(level));
  }
  for (int i = first; i < last; ++i) {
    // Identity and prefix inclusion both keep element indices.
    out.bondings.push_back(identity_table(out.level(i).size()));
  }
  out.validate();
  return out;
}

}  // namespace csigma::dirseq

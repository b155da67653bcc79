#include "csigma/maps.hpp"

#include <algorithm>

namespace csigma::maps {

using space::Label;
using space::PointId;

int ControlFunction::operator()(int n) const {
  int m = 0;
  if (affine) {
    std::int64_t v = affine->first * n + affine->second;
    if (v > 1'000'000'000) throw SpecError("control function blows up at N=" + std::to_string(n));
    m = static_cast<int>(v);
  } else {
    auto it = table.find(n);
    if (it == table.end())
      throw SpecError("declared control table has no entry for N=" + std::to_string(n));
    m = it->second;
  }
  if (m < n)
    throw SpecError("control M(" + std::to_string(n) + ")=" + std::to_string(m) +
                    " is below N; not a bornology witness");
  return m;
}

ControlFunction ControlFunction::affine_fn(std::int64_t slope, std::int64_t offset) {
  ControlFunction f;
  f.affine = {slope, offset};
  return f;
}

ControlFunction ControlFunction::table_fn(std::map<int, int> entries) {
  ControlFunction f;
  f.table = std::move(entries);
  int prev = 0;
  for (auto [n, m] : f.table) {
    if (m < prev) throw SpecError("control table is not monotone");
    prev = m;
  }
  return f;
}

ControlledMap label_inclusion(space::Space domain, space::Space codomain,
                              ControlFunction control, std::string name) {
  ControlledMap m;
  m.domain = std::move(domain);
  m.codomain = std::move(codomain);
  m.name = std::move(name);
  m.apply = [](const Label& l) { return l; };
  m.control = std::move(control);
  return m;
}

ControlledMap floor_map(space::Space domain, space::Space codomain) {
  ControlledMap m;
  m.domain = std::move(domain);
  m.codomain = std::move(codomain);
  m.name = "floor";
  m.apply = [](const Label& l) {
    Label out = l;
    out.coord.at(0) = Rational(l.coord.at(0).floor());
    return out;
  };
  m.control = ControlFunction::affine_fn(1, 1);
  return m;
}

ControlledMap wedge_floor(space::Space domain, space::Space codomain, int num_rays) {
  ControlledMap m;
  m.domain = std::move(domain);
  m.codomain = std::move(codomain);
  m.name = "wedge_floor";
  m.apply = [](const Label& l) {
    if (l.part.empty()) return l;  // wedge point
    const int ray = l.part.at(0);
    std::int64_t steps = (l.coord.at(0) / Rational(ray)).floor();
    if (steps <= 0) return Label{};  // snaps onto the wedge point
    Label out = l;
    out.coord.at(0) = Rational(ray) * Rational(steps);
    return out;
  };
  // Whole-ray moves shift by at most the ray spacing; cross-ray sums only
  // shrink under the snap.
  m.control = ControlFunction::affine_fn(1, num_rays);
  return m;
}

ControlledMap table_map(space::Space domain, space::Space codomain,
                        std::map<std::string, std::string> label_table,
                        ControlFunction control) {
  // Resolve target label strings against the codomain enumeration on
  // demand; lookups are by canonical printed label.
  struct Resolver {
    space::Space codomain;
    std::map<std::string, std::string> table;
    mutable std::map<std::string, Label> resolved;
    mutable bool indexed = false;

    Label operator()(const Label& l) const {
      auto it = table.find(l.str());
      if (it == table.end())
        throw SpecError("map undefined at point " + l.str());
      if (!indexed) {
        // Index every codomain label mentioned as a target. Targets must
        // lie within the ball spanned by the table values; scan outward
        // until all are found or the ball stops growing.
        Rational radius(16);
        std::size_t found = 0;
        for (int rounds = 0; rounds < 24 && found < table.size(); ++rounds) {
          for (PointId id : codomain.enumerate_ball(radius)) {
            const Label& cl = codomain.label(id);
            resolved.emplace(cl.str(), cl);
          }
          found = 0;
          for (const auto& [from, to] : table)
            if (resolved.count(to)) ++found;
          radius = radius * Rational(2);
        }
        indexed = true;
      }
      auto rit = resolved.find(it->second);
      if (rit == resolved.end())
        throw SpecError("map sends " + l.str() + " to unknown point " + it->second);
      return rit->second;
    }
  };
  ControlledMap m;
  m.domain = std::move(domain);
  m.codomain = codomain;
  m.name = "table";
  m.apply = Resolver{std::move(codomain), std::move(label_table), {}, false};
  m.control = std::move(control);
  return m;
}

ValidationReport validate_controlled(const ControlledMap& m, const Rational& sample_radius) {
  ValidationReport report;
  const auto ids = m.domain.enumerate_ball(sample_radius);
  const Label y0 = m.codomain.basepoint_label();

  std::vector<Label> images;
  images.reserve(ids.size());
  for (PointId id : ids) images.push_back(m.apply(m.domain.label(id)));

  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      ++report.checked_pairs;
      Rational d = m.domain.distance(ids[i], ids[j]);
      int n = std::max<std::int64_t>(1, d.ceil());
      Rational bound(m.control(n));
      Rational image_d = m.codomain.distance(images[i], images[j]);
      if (image_d > bound) {
        report.violations.push_back(
            "control breach: d(" + m.domain.label(ids[i]).str() + "," +
            m.domain.label(ids[j]).str() + ")=" + d.str() + " but images are " + image_d.str() +
            " apart, over M(" + std::to_string(n) + ")=" + bound.str());
        if (report.violations.size() > 20) break;
      }
    }
    if (report.violations.size() > 20) break;
  }
  report.control_ok = report.violations.empty();

  // Properness proxy: points deeper than half the sample radius must not
  // land within the quarter ball around the codomain basepoint.
  const Rational probe = sample_radius / Rational(4);
  const Rational allowed = sample_radius / Rational(2);
  Rational worst(0);
  std::string worst_at;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (m.codomain.distance(y0, images[i]) <= probe) {
      const Rational& depth = m.domain.distance_to_basepoint(ids[i]);
      if (worst < depth) {
        worst = depth;
        worst_at = m.domain.label(ids[i]).str();
      }
    }
  }
  report.properness_ok = !(worst > allowed);
  report.properness_note =
      report.properness_ok
          ? "preimage of the ball of radius " + probe.str() + " stays within " + worst.str()
          : "point " + worst_at + " at depth " + worst.str() + " maps into the ball of radius " +
                probe.str() + "; preimages of bounded sets look unbounded";
  return report;
}

namespace {

int induced_target_level(const ControlledMap& m, Direction dir, int n) {
  int level = std::max(m.control(n), n + 1);
  if (dir == Direction::Partner) {
    if (!m.closeness)
      throw SpecError("partner direction needs a declared closeness constant");
    level = std::max(level, static_cast<int>(m.closeness->ceil()) + 1);
  }
  return level;
}

std::vector<Label> rep_labels(const sigma::SigmaWindow& w, const sigma::SigmaClass& cls) {
  std::vector<Label> labels;
  labels.reserve(cls.representative.size());
  for (PointId id : cls.representative) labels.push_back(w.space.label(id));
  return labels;
}

}  // namespace

InducedMorphism induced_morphism(const ControlledMap& m, Direction dir, int first, int last,
                                 const space::Truncation& domain_trunc,
                                 const space::Truncation& codomain_trunc) {
  if (first < 1 || last < first) throw SpecError("scale window must satisfy 1 <= first <= last");
  if (dir == Direction::Forward) {
    Label image_base = m.apply(m.domain.basepoint_label());
    if (!(image_base == m.codomain.basepoint_label()))
      throw SpecError("forward map must send the basepoint to the codomain basepoint, got " +
                      image_base.str());
  }

  InducedMorphism out;
  out.domain_window = sigma::ind_sigma(m.domain, first, last, domain_trunc);
  const int target_last = induced_target_level(m, dir, last);
  out.codomain_window = sigma::ind_sigma(m.codomain, first, target_last, codomain_trunc);

  out.morphism.first = first;
  for (int n = first; n <= last; ++n) {
    const int target = induced_target_level(m, dir, n);
    std::vector<int> component;
    const auto& lvl = out.domain_window.level(n);
    component.reserve(lvl.classes.size());
    for (const auto& cls : lvl.classes) {
      std::vector<Label> path;
      if (dir == Direction::Partner) path.push_back(m.codomain.basepoint_label());
      for (const Label& l : rep_labels(out.domain_window, cls)) path.push_back(m.apply(l));
      std::string error;
      int idx = sigma::locate_class(out.codomain_window, target, path, &error);
      if (idx < 0)
        throw SpecError("image of the scale-" + std::to_string(n) + " representative through " +
                        m.name + " cannot be classified at scale " + std::to_string(target) +
                        ": " + error);
      component.push_back(idx);
    }
    out.morphism.index_map.push_back(target);
    out.morphism.components.push_back(std::move(component));
  }
  return out;
}

RebaseResult rebase(const space::Space& s, const space::Label& new_basepoint, int first,
                    int last, const space::Truncation& trunc) {
  const Label old_basepoint = s.basepoint_label();
  const Rational dist = s.distance(old_basepoint, new_basepoint);
  const int shift = static_cast<int>(dist.ceil());  // M >= d(x0, y0)
  const int top = std::max(last, shift);

  space::Space rebased = s.with_basepoint(new_basepoint);
  if (!(dist < trunc.outer_radius))
    throw SpecError("new basepoint at distance " + dist.str() +
                    " is too deep for the truncation radius " + trunc.outer_radius.str());
  space::Truncation new_trunc = trunc;
  // The rebased ball must stay inside the original one, and its inner
  // ball must still clear the territory around the old basepoint.
  new_trunc.outer_radius = trunc.outer_radius - dist;
  new_trunc.inner_radius = trunc.inner_for(top) + dist;

  RebaseResult out;
  out.window_old = sigma::ind_sigma(s, first, top, trunc);
  out.window_new = sigma::ind_sigma(rebased, first, top, new_trunc);

  auto build = [&](const sigma::SigmaWindow& from, const sigma::SigmaWindow& to,
                   const Label& prefix) {
    dirseq::Morphism mor;
    mor.first = first;
    for (int n = first; n <= top; ++n) {
      const int target = std::max(n, shift);
      std::vector<int> component;
      for (const auto& cls : from.level(n).classes) {
        std::vector<Label> path{prefix};
        for (const Label& l : rep_labels(from, cls)) path.push_back(l);
        std::string error;
        int idx = sigma::locate_class(to, target, path, &error);
        if (idx < 0)
          throw SpecError("rebased representative at scale " + std::to_string(n) +
                          " cannot be classified at scale " + std::to_string(target) + ": " +
                          error);
        component.push_back(idx);
      }
      mor.index_map.push_back(target);
      mor.components.push_back(std::move(component));
    }
    return mor;
  };

  out.forward = build(out.window_old, out.window_new, new_basepoint);
  out.backward = build(out.window_new, out.window_old, old_basepoint);
  out.equivalence =
      dirseq::check_equivalence(out.forward, out.backward, sigma::to_direct_sequence(out.window_old),
                                sigma::to_direct_sequence(out.window_new), first, last);
  return out;
}

namespace {

bool label_subsequence(const std::vector<Label>& s, const std::vector<Label>& t) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < t.size() && i < s.size(); ++j)
    if (s[i] == t[j]) ++i;
  return i == s.size();
}

}  // namespace

bool CoarseEquivalenceReport::pass() const {
  if (!forward_validation.ok() || !backward_validation.ok()) return false;
  if (!forward_morphism.ok || !backward_morphism.ok) return false;
  if (!equivalence.pass()) return false;
  for (const auto& w : witnesses)
    if (!w.ok()) return false;
  return true;
}

CoarseEquivalenceReport verify_coarse_equivalence(const CoarsePair& pair, int first, int last,
                                                  const space::Truncation& domain_trunc,
                                                  const space::Truncation& codomain_trunc,
                                                  const Rational& validation_radius) {
  CoarseEquivalenceReport report;
  report.forward_validation = validate_controlled(pair.forward, validation_radius);
  report.backward_validation = validate_controlled(pair.backward, validation_radius);

  ControlledMap backward = pair.backward;
  backward.closeness = pair.closeness_gf;  // first partner step is d(x0, g(y0)) <= K_gf
  auto u = [&](int n) { return induced_target_level(pair.forward, Direction::Forward, n); };
  auto v = [&](int n) { return induced_target_level(backward, Direction::Partner, n); };

  // Window closure so both composite laws are decidable on [first..last]:
  // the domain side must reach v(u(last)), the codomain side u of that.
  const int a_end = v(u(last));
  const int b_end = u(a_end);
  int g_end = b_end;
  while (g_end > first && v(g_end) > a_end) --g_end;

  // Shared truncations: resolve the inner radius once so every window
  // over the same space sees identical components.
  space::Truncation dtrunc = domain_trunc;
  dtrunc.inner_radius = domain_trunc.inner_for(a_end);
  space::Truncation ctrunc = codomain_trunc;
  ctrunc.inner_radius = codomain_trunc.inner_for(b_end);

  InducedMorphism F =
      induced_morphism(pair.forward, Direction::Forward, first, a_end, dtrunc, ctrunc);
  InducedMorphism G = induced_morphism(backward, Direction::Partner, first, g_end, ctrunc, dtrunc);

  auto seq_a = sigma::to_direct_sequence(F.domain_window);
  auto seq_b = sigma::to_direct_sequence(F.codomain_window);
  report.forward_morphism = dirseq::check_morphism(F.morphism, seq_a, seq_b);
  report.backward_morphism = dirseq::check_morphism(G.morphism, seq_b, seq_a);
  report.equivalence =
      dirseq::check_equivalence(F.morphism, G.morphism, seq_a, seq_b, first, last);

  // Interleaving witness per checked class: the supersequence
  // x0, gf(x0), x0, x1, gf(x1), x1, ... covers the representative and its
  // composite image, tying the left law back to the sequence picture.
  for (int n = first; n <= last; ++n) {
    const int scale = v(u(n));
    const auto& lvl = F.domain_window.level(n);
    for (std::size_t k = 0; k < lvl.classes.size(); ++k) {
      InterleavingWitness wit;
      wit.level = n;
      wit.class_index = static_cast<int>(k);
      auto s_labels = rep_labels(F.domain_window, lvl.classes[k]);
      std::vector<Label> gf_labels;
      gf_labels.reserve(s_labels.size() + 1);
      gf_labels.push_back(F.domain_window.space.basepoint_label());
      for (const Label& l : s_labels) gf_labels.push_back(backward.apply(pair.forward.apply(l)));
      std::vector<Label> interleaved;
      interleaved.reserve(3 * s_labels.size());
      for (std::size_t i = 0; i < s_labels.size(); ++i) {
        interleaved.push_back(s_labels[i]);
        interleaved.push_back(gf_labels[i + 1]);
        interleaved.push_back(s_labels[i]);
      }
      const Rational bound(scale);
      wit.valid_path = true;
      for (std::size_t i = 0; i + 1 < interleaved.size(); ++i) {
        if (F.domain_window.space.distance(interleaved[i], interleaved[i + 1]) > bound) {
          wit.valid_path = false;
          wit.detail = "interleaving step " + std::to_string(i) + " exceeds scale " +
                       std::to_string(scale);
          break;
        }
      }
      wit.covers_both = label_subsequence(s_labels, interleaved) &&
                        label_subsequence(gf_labels, interleaved);
      std::string e1, e2;
      int c1 = sigma::locate_class(F.domain_window, scale, s_labels, &e1);
      int c2 = sigma::locate_class(F.domain_window, scale, gf_labels, &e2);
      wit.classes_agree = c1 >= 0 && c1 == c2;
      if (!wit.classes_agree && wit.detail.empty())
        wit.detail = "representative and composite image separate at scale " +
                     std::to_string(scale) + (e1.empty() ? "" : "; " + e1) +
                     (e2.empty() ? "" : "; " + e2);
      report.witnesses.push_back(std::move(wit));
    }
  }
  return report;
}

}  // namespace csigma::maps

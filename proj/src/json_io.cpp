#include "csigma/json_io.hpp"

#include <algorithm>

namespace csigma::io {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SpecError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

std::string rational_to_string(const Rational& r) { return r.str(); }

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(std::string("missing field '") + key + "' in " + j.dump());
  return *it;
}

}  // namespace

space::Space space_from_json(const json& spec) {
  if (!spec.is_object()) throw SpecError("space spec must be an object");
  const std::string kind = need(spec, "kind").get<std::string>();
  const json params = spec.value("params", json::object());
  if (kind == "point_cloud") {
    std::vector<std::string> names;
    for (const auto& p : need(params, "points")) names.push_back(p.get<std::string>());
    std::vector<std::vector<Rational>> matrix;
    for (const auto& row : need(params, "distances")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      matrix.push_back(std::move(r));
    }
    std::size_t base = 0;
    if (params.contains("basepoint")) {
      const auto& bp = params["basepoint"];
      if (bp.is_number_integer()) {
        base = bp.get<std::size_t>();
      } else {
        auto it = std::find(names.begin(), names.end(), bp.get<std::string>());
        if (it == names.end()) throw SpecError("basepoint '" + bp.get<std::string>() + "' not in points");
        base = static_cast<std::size_t>(it - names.begin());
      }
    }
    return space::point_cloud(std::move(names), std::move(matrix), base);
  }
  if (kind == "integer_ray") return space::integer_ray();
  if (kind == "discrete_ray") return space::discrete_ray(rational_from_json(need(params, "spacing")));
  if (kind == "ray_net") return space::ray_net(rational_from_json(need(params, "delta")));
  if (kind == "real_line") return space::real_line(rational_from_json(need(params, "delta")));
  if (kind == "integer_line") return space::integer_line();
  if (kind == "lattice") return space::lattice(need(params, "dim").get<int>());
  if (kind == "open_book") {
    Rational delta = params.contains("delta") ? rational_from_json(params["delta"]) : Rational(1, 2);
    return space::open_book(need(params, "num_rays").get<int>(), delta);
  }
  if (kind == "discrete_open_book")
    return space::discrete_open_book(need(params, "num_rays").get<int>());
  if (kind == "wedge") {
    std::vector<space::Space> parts;
    for (const auto& part : need(params, "parts")) parts.push_back(space_from_json(part));
    return space::metric_wedge(std::move(parts));
  }
  throw SpecError("unknown space kind '" + kind + "'");
}

dirseq::DirectSequence dirseq_from_json(const json& j) {
  const std::string type = need(j, "type").get<std::string>();
  if (type == "concrete") {
    dirseq::ConcreteSequence seq;
    seq.first = j.value("first", 1);
    for (const auto& lvl : need(j, "levels")) {
      std::vector<std::string> names;
      for (const auto& e : lvl) names.push_back(e.get<std::string>());
      seq.levels.push_back(std::move(names));
    }
    for (const auto& b : need(j, "bondings")) {
      std::vector<int> map;
      for (const auto& v : b) map.push_back(v.get<int>());
      seq.bondings.push_back(std::move(map));
    }
    seq.validate();
    return seq;
  }
  if (type == "symbolic") {
    dirseq::SymbolicSequence seq;
    const json& size = need(j, "size");
    const std::string size_kind = need(size, "kind").get<std::string>();
    if (size_kind == "constant") {
      seq.size.kind = dirseq::SizeFormula::Kind::Constant;
      seq.size.constant = need(size, "value").get<std::int64_t>();
    } else if (size_kind == "linear") {
      seq.size.kind = dirseq::SizeFormula::Kind::LinearN;
    } else if (size_kind == "omega") {
      seq.size.kind = dirseq::SizeFormula::Kind::Omega;
    } else {
      throw SpecError("unknown size formula '" + size_kind + "'");
    }
    const std::string bonding = need(j, "bonding").get<std::string>();
    if (bonding == "identity") {
      seq.bonding = dirseq::SymbolicBonding::Identity;
    } else if (bonding == "inclusion_prefix") {
      seq.bonding = dirseq::SymbolicBonding::InclusionPrefix;
    } else {
      throw SpecError("unknown symbolic bonding '" + bonding + "'");
    }
    seq.validate();
    return seq;
  }
  throw SpecError("unknown sequence type '" + type + "'");
}

json dirseq_to_json(const dirseq::DirectSequence& seq) {
  json j;
  if (const auto* c = std::get_if<dirseq::ConcreteSequence>(&seq)) {
    j["type"] = "concrete";
    j["first"] = c->first;
    j["levels"] = c->levels;
    j["bondings"] = c->bondings;
    return j;
  }
  const auto& s = std::get<dirseq::SymbolicSequence>(seq);
  j["type"] = "symbolic";
  switch (s.size.kind) {
    case dirseq::SizeFormula::Kind::Constant:
      j["size"] = {{"kind", "constant"}, {"value", s.size.constant}};
      break;
    case dirseq::SizeFormula::Kind::LinearN: j["size"] = {{"kind", "linear"}}; break;
    case dirseq::SizeFormula::Kind::Omega: j["size"] = {{"kind", "omega"}}; break;
  }
  j["bonding"] = s.bonding == dirseq::SymbolicBonding::Identity ? "identity" : "inclusion_prefix";
  return j;
}

dirseq::Morphism morphism_from_json(const json& j) {
  dirseq::Morphism m;
  m.first = j.value("first", 1);
  for (const auto& v : need(j, "index_map")) m.index_map.push_back(v.get<int>());
  for (const auto& comp : need(j, "components")) {
    std::vector<int> table;
    for (const auto& v : comp) table.push_back(v.get<int>());
    m.components.push_back(std::move(table));
  }
  if (m.index_map.size() != m.components.size())
    throw SpecError("morphism index_map and components must have equal length");
  return m;
}

namespace {

maps::ControlFunction control_from_json(const json& j) {
  if (j.contains("affine")) {
    const auto& a = j["affine"];
    return maps::ControlFunction::affine_fn(a.at(0).get<std::int64_t>(),
                                            a.at(1).get<std::int64_t>());
  }
  if (j.contains("table")) {
    std::map<int, int> entries;
    for (const auto& [k, v] : j["table"].items()) entries[std::stoi(k)] = v.get<int>();
    return maps::ControlFunction::table_fn(std::move(entries));
  }
  throw SpecError("control must be {\"affine\":[a,b]} or {\"table\":{...}}");
}

}  // namespace

maps::ControlledMap map_from_json(const json& j, space::Space domain, space::Space codomain) {
  maps::ControlFunction control = j.contains("control")
                                      ? control_from_json(j["control"])
                                      : maps::ControlFunction::affine_fn(1, 0);
  maps::ControlledMap m;
  const json& spec = need(j, "map");
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "floor") {
      m = maps::floor_map(std::move(domain), std::move(codomain));
      if (j.contains("control")) m.control = control;
    } else if (name == "inclusion" || name == "identity") {
      m = maps::label_inclusion(std::move(domain), std::move(codomain), control, name);
    } else {
      throw SpecError("unknown builtin map '" + name + "'");
    }
  } else if (spec.is_object() && spec.contains("builtin")) {
    const std::string name = spec["builtin"].get<std::string>();
    if (name == "wedge_floor") {
      m = maps::wedge_floor(std::move(domain), std::move(codomain),
                            need(spec, "num_rays").get<int>());
      if (j.contains("control")) m.control = control;
    } else {
      throw SpecError("unknown builtin map '" + name + "'");
    }
  } else if (spec.is_object() && spec.contains("table")) {
    std::map<std::string, std::string> table;
    for (const auto& [k, v] : spec["table"].items()) table[k] = v.get<std::string>();
    m = maps::table_map(std::move(domain), std::move(codomain), std::move(table), control);
  } else {
    throw SpecError("map must be a builtin name or {\"table\":{...}}");
  }
  if (j.contains("closeness_K")) m.closeness = rational_from_json(j["closeness_K"]);
  return m;
}

json sigma_report(const sigma::SigmaWindow& w) {
  json j;
  j["space"] = w.space.describe();
  j["window"] = {w.first, w.last};
  j["truncation"] = {{"outer_radius", w.outer_radius.str()},
                     {"inner_radius", w.inner_radius.str()}};
  json levels = json::array();
  for (const auto& lvl : w.levels) {
    json classes = json::array();
    for (std::size_t k = 0; k < lvl.classes.size(); ++k) {
      const auto& cls = lvl.classes[k];
      json rep = json::array();
      for (space::PointId id : cls.representative) rep.push_back(w.space.label(id).str());
      classes.push_back({{"id", k},
                         {"component", w.space.label(cls.component).str()},
                         {"representative", std::move(rep)}});
    }
    levels.push_back({{"scale", lvl.scale},
                      {"witness_margin", lvl.witness_margin.str()},
                      {"count", lvl.classes.size()},
                      {"classes", std::move(classes)}});
  }
  j["levels"] = std::move(levels);
  json bondings = json::array();
  for (int n = w.first; n < w.last; ++n)
    bondings.push_back({{"from", n}, {"to", n + 1}, {"map", w.bonding(n)}});
  j["bondings"] = std::move(bondings);
  if (w.levels.size() >= 2) j["stability"] = stability_json(sigma::sigma_stability(w));
  return j;
}

json stability_json(const sigma::StabilityReport& r) {
  json j;
  j["stable_within_window"] = r.stable_within_window;
  if (r.stable_within_window) j["stable_from"] = r.stable_from;
  j["verdict"] = r.verdict;
  j["window_relative"] = true;
  return j;
}

json limit_json(const dirseq::LimitSet& lim, const dirseq::DirectSequence& seq) {
  json j;
  j["cardinality"] = lim.cardinality.str();
  j["descriptor"] = lim.descriptor;
  if (const auto* c = std::get_if<dirseq::ConcreteSequence>(&seq)) {
    json classes = json::array();
    for (std::size_t k = 0; k < lim.representatives.size(); ++k) {
      auto [level, element] = lim.representatives[k];
      classes.push_back({{"id", k},
                         {"first_level", level},
                         {"representative", c->level(level).at(static_cast<std::size_t>(element))}});
    }
    j["classes"] = std::move(classes);
  }
  return j;
}

json obstruction_json(const dirseq::ObstructionResult& r) {
  json j;
  j["verdict"] = r.fired() ? "not_equivalent" : "inconclusive";
  if (r.witness_level) j["witness_level"] = *r.witness_level;
  if (r.fired()) j["stable_image"] = r.stable_image.str();
  j["explanation"] = r.explanation;
  return j;
}

json equivalence_json(const dirseq::EquivalenceReport& r) {
  json j;
  switch (r.verdict) {
    case dirseq::EquivalenceReport::Verdict::Pass: j["verdict"] = "pass"; break;
    case dirseq::EquivalenceReport::Verdict::Fail: j["verdict"] = "fail"; break;
    case dirseq::EquivalenceReport::Verdict::Inconclusive: j["verdict"] = "inconclusive"; break;
  }
  j["checked_left"] = r.checked_left;
  j["checked_right"] = r.checked_right;
  j["out_of_window"] = r.out_of_window;
  j["failures"] = r.failures;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json morphism_report_json(const dirseq::MorphismReport& r) {
  json j;
  j["ok"] = r.ok;
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back({{"i", viol.i}, {"j", viol.j}, {"element", viol.element}});
  j["violations"] = std::move(v);
  j["structural_errors"] = r.structural_errors;
  return j;
}

json validation_json(const maps::ValidationReport& r) {
  json j;
  j["control_ok"] = r.control_ok;
  j["violations"] = r.violations;
  j["properness_ok"] = r.properness_ok;
  j["properness_note"] = r.properness_note;
  j["checked_pairs"] = r.checked_pairs;
  return j;
}

json coarse_equivalence_json(const maps::CoarseEquivalenceReport& r) {
  json j;
  j["pass"] = r.pass();
  j["forward_validation"] = validation_json(r.forward_validation);
  j["backward_validation"] = validation_json(r.backward_validation);
  j["forward_morphism"] = morphism_report_json(r.forward_morphism);
  j["backward_morphism"] = morphism_report_json(r.backward_morphism);
  j["equivalence"] = equivalence_json(r.equivalence);
  json wits = json::array();
  std::size_t ok = 0;
  for (const auto& w : r.witnesses) {
    if (w.ok()) {
      ++ok;
      continue;
    }
    wits.push_back({{"level", w.level},
                    {"class", w.class_index},
                    {"valid_path", w.valid_path},
                    {"covers_both", w.covers_both},
                    {"classes_agree", w.classes_agree},
                    {"detail", w.detail}});
  }
  j["witnesses_checked"] = r.witnesses.size();
  j["witnesses_ok"] = ok;
  j["witness_failures"] = std::move(wits);
  return j;
}

json oracle_agreement_json(const sigma::OracleAgreement& r) {
  json j;
  j["agree"] = r.agree;
  j["sigma_classes"] = r.sigma_count;
  j["oracle_classes"] = r.oracle_count;
  j["shell_reaching_paths"] = r.paths;
  j["detail"] = r.detail;
  return j;
}

}  // namespace csigma::io

#include "csigma/cases.hpp"

#include <algorithm>

namespace csigma::cases {

using io::json;

namespace {

void expect(CaseResult& r, bool condition, const std::string& what) {
  if (!condition) r.failures.push_back(what);
}

/// D with 25 rays: level sizes 1..10, bondings are index inclusions (the
/// scale-N classes sit inside the scale-(N+1) classes ray by ray), not
/// stable within the window.
CaseResult case_discrete_open_book() {
  CaseResult r;
  r.name = "discrete_open_book";
  const int k = 25, n_min = 1, n_max = 10;
  auto space = space::discrete_open_book(k);
  space::Truncation trunc{Rational(200), std::nullopt, std::nullopt};
  auto window = sigma::ind_sigma(space, n_min, n_max, trunc);
  auto stability = sigma::sigma_stability(window);

  json sizes = json::array();
  bool inclusions = true;
  for (int n = n_min; n <= n_max; ++n) {
    sizes.push_back(window.level(n).size());
    expect(r, window.level(n).size() == static_cast<std::size_t>(n),
           "level " + std::to_string(n) + " has " + std::to_string(window.level(n).size()) +
               " classes, expected " + std::to_string(n));
  }
  for (int n = n_min; n < n_max; ++n) {
    const auto& map = window.bonding(n);
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] != static_cast<int>(i)) inclusions = false;
  }
  expect(r, inclusions, "bondings are not index inclusions");
  // Class i at level N lives on ray i+1: the representative ends on that ray.
  bool rays_match = true;
  for (int n = n_min; n <= n_max; ++n) {
    const auto& lvl = window.level(n);
    for (std::size_t i = 0; i < lvl.classes.size(); ++i) {
      const auto& root = window.space.label(lvl.classes[i].component);
      if (root.part.empty() || root.part[0] != static_cast<int>(i + 1)) rays_match = false;
    }
  }
  expect(r, rays_match, "classes do not correspond to rays 1..N");
  expect(r, !stability.stable_within_window, "window unexpectedly stable");

  r.report["params"] = {{"num_rays", k}, {"outer_radius", "200"}, {"window", {n_min, n_max}}};
  r.report["level_sizes"] = std::move(sizes);
  r.report["bondings_are_inclusions"] = inclusions;
  r.report["classes_follow_rays"] = rays_match;
  r.report["stability"] = io::stability_json(stability);
  r.pass = r.failures.empty();
  return r;
}

/// B with 10 rays as a half-step net: every level has 10 classes, all
/// bondings bijective, window-stable from the very first scale.
CaseResult case_open_book() {
  CaseResult r;
  r.name = "open_book";
  const int k = 10, n_min = 1, n_max = 8;
  auto space = space::open_book(k, Rational(1, 2));
  space::Truncation trunc{Rational(100), std::nullopt, std::nullopt};
  auto window = sigma::ind_sigma(space, n_min, n_max, trunc);
  auto stability = sigma::sigma_stability(window);

  json sizes = json::array();
  for (int n = n_min; n <= n_max; ++n) {
    sizes.push_back(window.level(n).size());
    expect(r, window.level(n).size() == static_cast<std::size_t>(k),
           "level " + std::to_string(n) + " has " + std::to_string(window.level(n).size()) +
               " classes, expected " + std::to_string(k));
  }
  bool bijective = true;
  for (int n = n_min; n < n_max; ++n) {
    const auto& map = window.bonding(n);
    std::vector<bool> hit(window.level(n + 1).size(), false);
    if (map.size() != hit.size()) bijective = false;
    for (int img : map) {
      if (hit[static_cast<std::size_t>(img)]) bijective = false;
      hit[static_cast<std::size_t>(img)] = true;
    }
  }
  expect(r, bijective, "bondings are not bijections");
  expect(r, stability.stable_within_window && stability.stable_from == n_min,
         "expected window-stability from K=1, got: " + stability.verdict);

  r.report["params"] = {{"num_rays", k}, {"delta", "1/2"}, {"outer_radius", "100"},
                        {"window", {n_min, n_max}}};
  r.report["level_sizes"] = std::move(sizes);
  r.report["bondings_bijective"] = bijective;
  r.report["stability"] = io::stability_json(stability);
  r.pass = r.failures.empty();
  return r;
}

/// The two books as symbolic sequences: the cardinality obstruction
/// separates them even though both direct limits are countably infinite
/// — the sequence sees what the limit alone cannot.
CaseResult case_symbolic_comparison() {
  CaseResult r;
  r.name = "symbolic_comparison";
  dirseq::SymbolicSequence book;
  book.size.kind = dirseq::SizeFormula::Kind::Omega;
  book.bonding = dirseq::SymbolicBonding::Identity;
  dirseq::SymbolicSequence discrete;
  discrete.size.kind = dirseq::SizeFormula::Kind::LinearN;
  discrete.bonding = dirseq::SymbolicBonding::InclusionPrefix;

  auto verdict = dirseq::cardinality_obstruction(book, discrete);
  auto limit_book = dirseq::direct_limit(dirseq::DirectSequence(book));
  auto limit_discrete = dirseq::direct_limit(dirseq::DirectSequence(discrete));

  expect(r, verdict.fired(), "obstruction did not fire");
  expect(r, limit_book.cardinality.omega, "book limit is not omega");
  expect(r, limit_discrete.cardinality.omega, "discrete book limit is not omega");
  // Sanity: the obstruction is one-sided; the reverse direction cannot fire.
  auto reverse = dirseq::cardinality_obstruction(discrete, book);
  expect(r, !reverse.fired(), "reverse obstruction fired unexpectedly");

  r.report["book"] = io::dirseq_to_json(book);
  r.report["discrete_book"] = io::dirseq_to_json(discrete);
  r.report["obstruction"] = io::obstruction_json(verdict);
  r.report["limit_cardinalities"] = {{"book", limit_book.cardinality.str()},
                                     {"discrete_book", limit_discrete.cardinality.str()}};
  r.pass = r.failures.empty();
  return r;
}

/// The integers against the half-step net of the line, with the
/// inclusion and the floor map: a coarse equivalence, verified through
/// the induced morphisms and both composite laws on scales 1..6.
CaseResult case_real_vs_int() {
  CaseResult r;
  r.name = "real_vs_int";
  auto ints = space::integer_line();
  auto reals = space::real_line(Rational(1, 2));
  maps::CoarsePair pair;
  pair.forward = maps::label_inclusion(ints, reals, maps::ControlFunction::affine_fn(1, 0));
  pair.backward = maps::floor_map(reals, ints);
  pair.closeness_gf = Rational(1);
  pair.closeness_fg = Rational(1);

  space::Truncation trunc{Rational(100), std::nullopt, std::nullopt};
  auto report = maps::verify_coarse_equivalence(pair, 1, 6, trunc, trunc, Rational(30));
  expect(r, report.pass(), "coarse equivalence did not verify");
  expect(r, report.equivalence.pass(), "composite laws failed");

  r.report["params"] = {{"delta", "1/2"}, {"window", {1, 6}}, {"outer_radius", "100"},
                        {"closeness_K", "1"}};
  r.report["result"] = io::coarse_equivalence_json(report);
  r.pass = r.failures.empty();
  return r;
}

/// Basepoint independence for the discrete book: moving the basepoint
/// out to (ray 3, coordinate 9) yields a morphism pair, built by
/// prepending the other basepoint, that verifies as an equivalence.
CaseResult case_rebase_demo() {
  CaseResult r;
  r.name = "rebase_demo";
  auto space = space::discrete_open_book(25);
  space::Label new_base{{3}, {Rational(9)}, ""};
  space::Truncation trunc{Rational(200), std::nullopt, std::nullopt};
  auto result = maps::rebase(space, new_base, 1, 12, trunc);

  expect(r, result.equivalence.pass(),
         "rebase equivalence did not pass: " + result.equivalence.note);
  json old_sizes = json::array(), new_sizes = json::array();
  for (const auto& lvl : result.window_old.levels) old_sizes.push_back(lvl.size());
  for (const auto& lvl : result.window_new.levels) new_sizes.push_back(lvl.size());

  r.report["params"] = {{"num_rays", 25}, {"new_basepoint", new_base.str()},
                        {"outer_radius", "200"}, {"window", {1, 12}}};
  r.report["level_sizes_from_wedge_point"] = std::move(old_sizes);
  r.report["level_sizes_from_new_basepoint"] = std::move(new_sizes);
  r.report["equivalence"] = io::equivalence_json(result.equivalence);
  r.pass = r.failures.empty();
  return r;
}

}  // namespace

std::vector<std::string> case_names() {
  return {"discrete_open_book", "open_book", "symbolic_comparison", "real_vs_int", "rebase_demo"};
}

CaseResult run_case(const std::string& name) {
  if (name == "discrete_open_book") return case_discrete_open_book();
  if (name == "open_book") return case_open_book();
  if (name == "symbolic_comparison") return case_symbolic_comparison();
  if (name == "real_vs_int") return case_real_vs_int();
  if (name == "rebase_demo") return case_rebase_demo();
  throw SpecError("unknown case '" + name + "'");
}

io::json run_all(const std::string& filter) {
  json out;
  json cases = json::array();
  std::size_t passed = 0, total = 0;
  for (const auto& name : case_names()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    CaseResult result = run_case(name);
    ++total;
    if (result.pass) ++passed;
    json entry;
    entry["name"] = result.name;
    entry["pass"] = result.pass;
    entry["failures"] = result.failures;
    entry["report"] = std::move(result.report);
    cases.push_back(std::move(entry));
  }
  out["cases"] = std::move(cases);
  out["summary"] = {{"total", total}, {"passed", passed}};
  return out;
}

}  // namespace csigma::cases

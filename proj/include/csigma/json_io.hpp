#pragma once

#include <json.hpp>

#include "csigma/dirseq.hpp"
#include "csigma/maps.hpp"
#include "csigma/sigma.hpp"
#include "csigma/space.hpp"

namespace csigma::io {

/// Insertion-ordered JSON everywhere: report bytes must not depend on
/// hashing. Rationals serialize as "p/q" strings.
using json = nlohmann::ordered_json;

Rational rational_from_json(const json& j);
std::string rational_to_string(const Rational& r);

/// Space spec: {"kind": "...", "params": {...}}. Kinds: point_cloud,
/// integer_ray, discrete_ray, ray_net, real_line, integer_line, lattice,
/// open_book, discrete_open_book, wedge. Throws SpecError.
space::Space space_from_json(const json& spec);

/// Direct sequence: {"type":"concrete","first":..,"levels":[[names]],
/// "bondings":[[indices]]} or {"type":"symbolic","size":{"kind":
/// "constant"|"linear"|"omega",...},"bonding":"identity"|
/// "inclusion_prefix"}.
dirseq::DirectSequence dirseq_from_json(const json& j);
json dirseq_to_json(const dirseq::DirectSequence& seq);

/// Morphism: {"first":..,"index_map":[..],"components":[[..]]}.
dirseq::Morphism morphism_from_json(const json& j);

/// Controlled map: {"map":"floor"|"inclusion"|"identity"|
/// {"builtin":"wedge_floor","num_rays":k}|{"table":{..}},
/// "control":{"affine":[a,b]}|{"table":{"1":2,..}},"closeness_K":"p/q"}.
maps::ControlledMap map_from_json(const json& j, space::Space domain, space::Space codomain);

json sigma_report(const sigma::SigmaWindow& w);
json stability_json(const sigma::StabilityReport& r);
json limit_json(const dirseq::LimitSet& lim, const dirseq::DirectSequence& seq);
json obstruction_json(const dirseq::ObstructionResult& r);
json equivalence_json(const dirseq::EquivalenceReport& r);
json morphism_report_json(const dirseq::MorphismReport& r);
json validation_json(const maps::ValidationReport& r);
json coarse_equivalence_json(const maps::CoarseEquivalenceReport& r);
json oracle_agreement_json(const sigma::OracleAgreement& r);

}  // namespace csigma::io

#pragma once

#include <string>
#include <vector>

#include "csigma/json_io.hpp"

namespace csigma::cases {

/// Built-in reference cases: the spaces whose scale-N end counts are
/// known in closed form, run end to end and diffed against the expected
/// values. These back the `verify-paper` command and the golden files.
struct CaseResult {
  std::string name;
  bool pass = false;
  io::json report;                    // deterministic, golden-comparable
  std::vector<std::string> failures;  // first diverging quantities
};

std::vector<std::string> case_names();

/// Throws SpecError for an unknown name.
CaseResult run_case(const std::string& name);

/// Runs every case whose name contains `filter` (all when empty).
/// Returns {"cases": [...], "summary": {"total": n, "passed": m}}.
io::json run_all(const std::string& filter = "");

}  // namespace csigma::cases

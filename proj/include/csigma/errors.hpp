#pragma once

#include <stdexcept>
#include <string>

namespace csigma {

/// Invalid input: malformed spec, non-metric distance matrix, bad
/// parameters. CLI exit code 2.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncation too thin to witness persistence (outer radius minus
/// witness margin does not clear the inner radius). CLI exit code 3.
struct ThinTruncationError : std::runtime_error {
  explicit ThinTruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force oracle refused to run: enumeration would explode.
/// Carries the counts seen so far. CLI exit code 4.
struct OracleGuardError : std::runtime_error {
  explicit OracleGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; always a bug, never user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace csigma

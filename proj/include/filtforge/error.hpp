#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "filtforge/validation.hpp"

namespace filtforge {

/// Malformed input: out-of-range indices, mismatched sizes, non-metric matrices.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The space cannot support the requested construction (e.g. zero diameter).
class DegenerateSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity the continuum forbids showed up at the sampled resolution.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, std::size_t point)
      : std::runtime_error(what), point_(point) {}
  std::size_t point() const noexcept { return point_; }

 private:
  std::size_t point_;
};

class UnsupportedTopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generated fixture failed its own geometric preconditions.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Synthesis refused because a hypothesis check failed; carries the report.
class RefusedError : public std::runtime_error {
 public:
  RefusedError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace filtforge

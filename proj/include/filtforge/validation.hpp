#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace filtforge {

enum class ViolationKind { nesting, stability_b, completeness, continuity, induction };

std::string_view to_string(ViolationKind kind);

/// One failed check. `lower`/`upper` are grid positions (a single coordinate
/// for 1-D filtrations); `points` are witness point ids.
struct Violation {
  ViolationKind kind = ViolationKind::nesting;
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
  std::optional<std::size_t> axis;
  std::vector<std::uint32_t> points;
  std::vector<double> measured;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  void append(ValidationReport other);
  std::size_t count(ViolationKind kind) const;
};

/// "(1,1)" style rendering of a grid position.
std::string format_position(const std::vector<std::size_t>& position);

}  // namespace filtforge

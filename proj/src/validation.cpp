#include "filtforge/validation.hpp"

#include <algorithm>

namespace filtforge {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::nesting: return "nesting";
    case ViolationKind::stability_b: return "stability_b";
    case ViolationKind::completeness: return "completeness";
    case ViolationKind::continuity: return "continuity";
    case ViolationKind::induction: return "induction";
  }
  return "unknown";
}

void ValidationReport::append(ValidationReport other) {
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [kind](const Violation& v) { return v.kind == kind; }));
}

std::string format_position(const std::vector<std::size_t>& position) {
  std::string out = "(";
  for (std::size_t k = 0; k < position.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(position[k]);
  }
  out += ')';
  return out;
}

}  // namespace filtforge

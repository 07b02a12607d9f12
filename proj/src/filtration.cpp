#include "filtforge/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "filtforge/error.hpp"

namespace filtforge {

IndexSet::IndexSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw StructuralError("index set needs at least two values");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) throw StructuralError("index values must be finite");
    if (k > 0 && !(values_[k - 1] < values_[k]))
      throw StructuralError("index values must be strictly increasing (position " +
                            std::to_string(k) + ")");
  }
}

namespace {

void check_sets(const SpacePtr& space, std::span<const Subset> sets) {
  if (!space) throw StructuralError("filtration has no space");
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k].universe() != space->size())
      throw StructuralError("set " + std::to_string(k) + " has universe " +
                            std::to_string(sets[k].universe()) + ", space has " +
                            std::to_string(space->size()) + " points");
}

Violation make_violation(ViolationKind kind, std::vector<std::size_t> lower,
                         std::vector<std::size_t> upper, const Subset& witnesses,
                         std::string detail) {
  Violation v;
  v.kind = kind;
  v.lower = std::move(lower);
  v.upper = std::move(upper);
  v.points = witnesses.ids();
  v.detail = std::move(detail);
  return v;
}

void check_endpoints(const Subset& bottom, const Subset& top, std::vector<std::size_t> bottom_pos,
                     std::vector<std::size_t> top_pos, ValidationReport& report) {
  if (!bottom.empty())
    report.violations.push_back(make_violation(ViolationKind::nesting, bottom_pos, bottom_pos,
                                               bottom, "lowest set is not empty"));
  if (!top.full())
    report.violations.push_back(make_violation(ViolationKind::nesting, top_pos, top_pos,
                                               top.complement(), "highest set is not the whole space"));
}

void check_pair_inclusion(const Subset& lower, const Subset& upper, std::vector<std::size_t> lo,
                          std::vector<std::size_t> hi, ValidationReport& report) {
  if (!lower.is_subset_of(upper))
    report.violations.push_back(make_violation(ViolationKind::nesting, std::move(lo), std::move(hi),
                                               lower - upper, "set not contained in a later set"));
}

}  // namespace

Filtration1D::Filtration1D(SpacePtr space, IndexSet index, std::vector<Subset> sets)
    : space_(std::move(space)), index_(std::move(index)), sets_(std::move(sets)) {
  if (sets_.size() != index_.size())
    throw StructuralError("filtration has " + std::to_string(sets_.size()) + " sets for " +
                          std::to_string(index_.size()) + " index values");
  check_sets(space_, sets_);
}

GridShape::GridShape(std::vector<std::size_t> extents) : extents_(std::move(extents)) {
  if (extents_.empty()) throw StructuralError("grid needs at least one axis");
  strides_.assign(extents_.size(), 1);
  cells_ = 1;
  for (std::size_t k = extents_.size(); k-- > 0;) {
    strides_[k] = cells_;
    cells_ *= extents_[k];
  }
}

std::size_t GridShape::flat(std::span<const std::size_t> position) const {
  if (position.size() != extents_.size())
    throw StructuralError("grid position has " + std::to_string(position.size()) +
                          " coordinates, expected " + std::to_string(extents_.size()));
  std::size_t out = 0;
  for (std::size_t k = 0; k < position.size(); ++k) {
    if (position[k] >= extents_[k]) throw StructuralError("grid position out of range");
    out += position[k] * strides_[k];
  }
  return out;
}

std::vector<std::size_t> GridShape::position(std::size_t flat) const {
  std::vector<std::size_t> out(extents_.size());
  for (std::size_t k = 0; k < extents_.size(); ++k) {
    out[k] = flat / strides_[k];
    flat %= strides_[k];
  }
  return out;
}

FiltrationND::FiltrationND(SpacePtr space, std::vector<IndexSet> axes, std::vector<Subset> sets)
    : space_(std::move(space)), axes_(std::move(axes)), sets_(std::move(sets)) {
  std::vector<std::size_t> extents;
  for (const auto& a : axes_) extents.push_back(a.size());
  shape_ = GridShape(std::move(extents));
  if (sets_.size() != shape_.cells())
    throw StructuralError("filtration has " + std::to_string(sets_.size()) + " sets for a grid of " +
                          std::to_string(shape_.cells()) + " cells");
  check_sets(space_, sets_);
}

ValidationReport check_nesting(const Filtration1D& f, const CheckOptions& options) {
  ValidationReport report;
  const std::size_t last = f.levels() - 1;
  check_endpoints(f.at(0), f.at(last), {0}, {last}, report);
  for (std::size_t i = 0; i < last; ++i) {
    const std::size_t stop = options.all_pairs ? last : i + 1;
    for (std::size_t j = i + 1; j <= stop; ++j) check_pair_inclusion(f.at(i), f.at(j), {i}, {j}, report);
  }
  return report;
}

ValidationReport check_nesting(const FiltrationND& f, const CheckOptions& options) {
  ValidationReport report;
  const auto& shape = f.shape();
  check_endpoints(f.at_flat(0), f.at_flat(shape.cells() - 1), shape.position(0),
                  shape.position(shape.cells() - 1), report);
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    const auto pos = shape.position(c);
    if (options.all_pairs) {
      for (std::size_t d = c + 1; d < shape.cells(); ++d) {
        const auto other = shape.position(d);
        bool below = true;
        for (std::size_t k = 0; k < pos.size() && below; ++k) below = pos[k] <= other[k];
        if (below) check_pair_inclusion(f.at_flat(c), f.at_flat(d), pos, other, report);
      }
      continue;
    }
    for (std::size_t axis = 0; axis < shape.dims(); ++axis) {
      if (pos[axis] + 1 >= shape.extent(axis)) continue;
      auto next = pos;
      ++next[axis];
      check_pair_inclusion(f.at_flat(c), f.at_flat(c + shape.stride(axis)), pos, next, report);
    }
  }
  return report;
}

ValidationReport check_stability_finite(const Filtration1D& f, const CheckOptions& options) {
  ValidationReport report;
  const std::size_t last = f.levels() - 1;
  std::vector<Subset> interiors;
  interiors.reserve(f.levels());
  for (const auto& s : f.sets()) interiors.push_back(interior(f.space(), s));
  for (std::size_t i = 0; i < last; ++i) {
    const std::size_t stop = options.all_pairs ? last : i + 1;
    for (std::size_t j = i + 1; j <= stop; ++j) {
      if (f.at(i).is_subset_of(interiors[j])) continue;
      report.violations.push_back(make_violation(ViolationKind::stability_b, {i}, {j},
                                                 f.at(i) - interiors[j],
                                                 "set not contained in the interior of a later set"));
    }
  }
  return report;
}

std::vector<ContinuityEntry> continuity_profile(const Filtration1D& f) {
  std::vector<ContinuityEntry> out;
  const auto& space = f.space();
  Subset prev_cc = closure_complement(space, f.at(0));
  for (std::size_t i = 0; i + 1 < f.levels(); ++i) {
    Subset next_cc = closure_complement(space, f.at(i + 1));
    ContinuityEntry e;
    e.index_gap = f.index()[i + 1] - f.index()[i];
    e.dh_sets = hausdorff(space, f.at(i), f.at(i + 1));
    e.dh_complements = hausdorff(space, prev_cc, next_cc);
    e.empty_side = e.dh_sets == kInfinity || e.dh_complements == kInfinity;
    out.push_back(e);
    prev_cc = std::move(next_cc);
  }
  return out;
}

Filtration1D axis_filtration(const FiltrationND& f, std::size_t axis) {
  if (axis >= f.dims()) throw StructuralError("axis " + std::to_string(axis) + " out of range");
  const auto& shape = f.shape();
  std::vector<std::size_t> pos(f.dims());
  for (std::size_t k = 0; k < f.dims(); ++k) pos[k] = shape.extent(k) - 1;
  std::vector<Subset> sets;
  sets.reserve(shape.extent(axis));
  for (std::size_t h = 0; h < shape.extent(axis); ++h) {
    pos[axis] = h;
    sets.push_back(f.at(pos));
  }
  return Filtration1D(f.space_ptr(), f.axis(axis), std::move(sets));
}

ValidationReport check_stability_nd(const FiltrationND& f, const CheckOptions& options) {
  ValidationReport report;
  for (std::size_t j = 0; j < f.dims(); ++j) {
    const auto slice = axis_filtration(f, j);
    auto part = check_nesting(slice, options);
    part.append(check_stability_finite(slice, options));
    for (auto& v : part.violations) v.axis = j;
    report.append(std::move(part));
  }
  return report;
}

ValidationReport check_completeness(const FiltrationND& f) {
  ValidationReport report;
  std::vector<Filtration1D> slices;
  for (std::size_t j = 0; j < f.dims(); ++j) slices.push_back(axis_filtration(f, j));
  const auto& shape = f.shape();
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    const auto pos = shape.position(c);
    Subset meet = slices[0].at(pos[0]);
    for (std::size_t j = 1; j < f.dims(); ++j) meet &= slices[j].at(pos[j]);
    const Subset& cell = f.at_flat(c);
    if (meet == cell) continue;
    // Nesting makes cell ⊆ meet; report both directions in case it does not hold.
    Subset diff = (meet - cell) | (cell - meet);
    report.violations.push_back(make_violation(ViolationKind::completeness, pos, pos, diff,
                                               "set differs from the intersection of its axis slices"));
  }
  return report;
}

FiltrationND product_filtration(std::span<const Filtration1D> factors) {
  if (factors.empty()) throw StructuralError("product needs at least one factor");
  const auto& space = factors.front().space_ptr();
  std::vector<IndexSet> axes;
  std::vector<std::size_t> extents;
  for (const auto& f : factors) {
    if (f.space_ptr() != space) throw StructuralError("product factors must share one space");
    axes.push_back(f.index());
    extents.push_back(f.levels());
  }
  const GridShape shape(extents);
  std::vector<Subset> sets;
  sets.reserve(shape.cells());
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    const auto pos = shape.position(c);
    Subset meet = factors[0].at(pos[0]);
    for (std::size_t j = 1; j < factors.size(); ++j) meet &= factors[j].at(pos[j]);
    sets.push_back(std::move(meet));
  }
  return FiltrationND(space, std::move(axes), std::move(sets));
}

}  // namespace filtforge

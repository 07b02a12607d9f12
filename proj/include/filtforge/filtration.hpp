#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "filtforge/metric_space.hpp"
#include "filtforge/subset.hpp"
#include "filtforge/validation.hpp"

namespace filtforge {

/// Finite, strictly increasing index set I ⊂ ℝ with at least two values.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t pos) const { return values_[pos]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  /// Smallest value above min().
  double second_smallest() const { return values_[1]; }
  /// Largest value below max().
  double second_largest() const { return values_[values_.size() - 2]; }
  std::size_t last() const noexcept { return values_.size() - 1; }
  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<double> values_;
};

/// Indexed family {K_i}, one subset per index value.
class Filtration1D {
 public:
  Filtration1D(SpacePtr space, IndexSet index, std::vector<Subset> sets);

  const SampledSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const IndexSet& index() const noexcept { return index_; }
  const Subset& at(std::size_t pos) const { return sets_[pos]; }
  std::span<const Subset> sets() const noexcept { return sets_; }
  std::size_t levels() const noexcept { return sets_.size(); }

  /// Proper means some index lies strictly between min and max.
  bool proper() const noexcept { return index_.size() > 2; }

 private:
  SpacePtr space_;
  IndexSet index_;
  std::vector<Subset> sets_;
};

/// Row-major shape of an index grid I₁ × … × Iₙ (last axis fastest).
class GridShape {
 public:
  GridShape() = default;
  explicit GridShape(std::vector<std::size_t> extents);

  std::size_t dims() const noexcept { return extents_.size(); }
  std::size_t extent(std::size_t axis) const { return extents_[axis]; }
  std::size_t cells() const noexcept { return cells_; }
  std::size_t flat(std::span<const std::size_t> position) const;
  std::vector<std::size_t> position(std::size_t flat) const;
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

 private:
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 0;
};

class FiltrationND {
 public:
  /// `sets` are in row-major grid order.
  FiltrationND(SpacePtr space, std::vector<IndexSet> axes, std::vector<Subset> sets);

  const SampledSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::size_t dims() const noexcept { return axes_.size(); }
  const IndexSet& axis(std::size_t j) const { return axes_[j]; }
  std::span<const IndexSet> axes() const noexcept { return axes_; }
  const GridShape& shape() const noexcept { return shape_; }
  const Subset& at(std::span<const std::size_t> position) const { return sets_[shape_.flat(position)]; }
  const Subset& at_flat(std::size_t flat) const { return sets_[flat]; }
  std::span<const Subset> sets() const noexcept { return sets_; }

 private:
  SpacePtr space_;
  std::vector<IndexSet> axes_;
  GridShape shape_;
  std::vector<Subset> sets_;
};

/// Consecutive pairs only, unless `all_pairs` (the --strict-pairs mode).
struct CheckOptions {
  bool all_pairs = false;
};

/// Inclusion along the index order plus the ∅ / K endpoint requirement.
/// For n-D filtrations only covering pairs of the grid order are compared.
ValidationReport check_nesting(const Filtration1D& f, const CheckOptions& options = {});
ValidationReport check_nesting(const FiltrationND& f, const CheckOptions& options = {});

/// K_i ⊆ int(K_j) for i < j.
ValidationReport check_stability_finite(const Filtration1D& f, const CheckOptions& options = {});

struct ContinuityEntry {
  double index_gap = 0.0;
  double dh_sets = 0.0;         ///< d_H(K_i, K_i')
  double dh_complements = 0.0;  ///< d_H(cl(K_iᶜ), cl(K_i'ᶜ))
  /// True when one side of either comparison is empty (value is +∞).
  bool empty_side = false;
};

/// Raw Hausdorff data for each consecutive index pair. No pass/fail verdict.
std::vector<ContinuityEntry> continuity_profile(const Filtration1D& f);

/// {K_h^j}: axis j varies, every other coordinate held at its maximum.
Filtration1D axis_filtration(const FiltrationND& f, std::size_t axis);

/// Nesting and finite stability of every axis filtration, tagged by axis.
ValidationReport check_stability_nd(const FiltrationND& f, const CheckOptions& options = {});

/// K_i = K¹_{i₁} ∩ … ∩ Kⁿ_{iₙ} at every grid position.
ValidationReport check_completeness(const FiltrationND& f);

/// Intersection-built n-D filtration from n 1-D filtrations over one space.
/// Complete by construction.
FiltrationND product_filtration(std::span<const Filtration1D> factors);

}  // namespace filtforge

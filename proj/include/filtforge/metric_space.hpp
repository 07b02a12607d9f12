#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "filtforge/parallel.hpp"
#include "filtforge/subset.hpp"

namespace filtforge {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Metric { euclidean, geodesic, explicit_matrix };

struct SpaceOptions {
  /// Triangle-inequality check on explicit matrices. Unset means "on below
  /// 2000 points".
  std::optional<bool> check_triangle;
  /// When set to true the ε-neighborhood graph must be connected.
  bool require_connected = false;
  Exec exec = Exec::parallel;
};

/// Finite metric space with an ε-neighborhood graph standing in for the
/// topology. Immutable after construction; share it through
/// `std::shared_ptr<const SampledSpace>`.
///
/// Euclidean spaces keep coordinates and evaluate distances on demand.
/// Explicit and geodesic spaces store the full distance matrix.
class SampledSpace {
 public:
  static std::shared_ptr<const SampledSpace> from_matrix(std::vector<double> dist,
                                                         std::size_t point_count,
                                                         double resolution,
                                                         const SpaceOptions& options = {});

  /// `metric` must be euclidean or geodesic. Geodesic distances are shortest
  /// paths over the ε-graph with Euclidean edge lengths.
  static std::shared_ptr<const SampledSpace> from_points(std::vector<std::vector<double>> points,
                                                         double resolution, Metric metric,
                                                         const SpaceOptions& options = {});

  SampledSpace(const SampledSpace&) = delete;
  SampledSpace& operator=(const SampledSpace&) = delete;

  std::size_t size() const noexcept { return point_count_; }
  double resolution() const noexcept { return resolution_; }
  Metric metric() const noexcept { return metric_; }

  double dist(std::size_t p, std::size_t q) const {
    if (!matrix_.empty()) return matrix_[p * point_count_ + q];
    return euclidean(p, q);
  }

  /// Largest pairwise distance; computed on first use.
  double diameter() const;

  std::span<const std::uint32_t> neighbors(std::size_t p) const {
    return {adjacency_.data() + offsets_[p], adjacency_.data() + offsets_[p + 1]};
  }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  bool connected() const noexcept { return connected_; }

  /// Coordinates, empty for explicit-matrix spaces.
  const std::vector<std::vector<double>>& points() const noexcept { return points_; }
  /// Distance matrix, empty for Euclidean spaces.
  const std::vector<double>& matrix() const noexcept { return matrix_; }

 private:
  SampledSpace() = default;
  double euclidean(std::size_t p, std::size_t q) const;
  void finish(const SpaceOptions& options);

  std::size_t point_count_ = 0;
  double resolution_ = 0.0;
  Metric metric_ = Metric::explicit_matrix;
  std::vector<std::vector<double>> points_;
  std::vector<double> matrix_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
  bool connected_ = false;

  mutable std::once_flag diameter_once_;
  mutable double diameter_ = 0.0;
};

using SpacePtr = std::shared_ptr<const SampledSpace>;

/// {P ∈ X : every neighbor of P is in X}.
Subset interior(const SampledSpace& space, const Subset& x);

/// cl(Xᶜ), computed as the complement of interior(X).
Subset closure_complement(const SampledSpace& space, const Subset& x);

/// X ∩ cl(Xᶜ): points of X with a neighbor outside X.
Subset boundary(const SampledSpace& space, const Subset& x);

/// min over q ∈ X of d(P, q); +∞ when X is empty.
double dist_point_set(const SampledSpace& space, std::size_t p, const Subset& x);

/// Hausdorff distance. 0 when both sets are empty, +∞ when exactly one is.
double hausdorff(const SampledSpace& space, const Subset& x, const Subset& y);

/// Distance from every point to the auxiliary point used by the synthesis
/// formula when β(P) is the top index: diameter / 2.
double star_distance(const SampledSpace& space);

}  // namespace filtforge

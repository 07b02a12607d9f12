#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version and a serial
// reference with identical arithmetic; tests require bit-equal results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "filtforge/metric_space.hpp"
#include "filtforge/subset.hpp"

namespace filtforge::kernels {

struct AlphaBetaPositions {
  std::vector<std::uint32_t> alpha;
  std::vector<std::uint32_t> beta;
};

/// sets[k] and interiors[k] per level; scans levels per point.
AlphaBetaPositions alpha_beta_serial(std::span<const Subset> sets, std::span<const Subset> interiors);
AlphaBetaPositions alpha_beta_omp(std::span<const Subset> sets, std::span<const Subset> interiors);

/// Inputs to the filtering-value formula for one level structure.
struct PhiInputs {
  const SampledSpace* space;
  std::span<const double> index;
  std::span<const Subset> sets;
  std::span<const Subset> closure_complements;
  std::span<const std::uint32_t> alpha;
  std::span<const std::uint32_t> beta;
  double star;
};

/// Writes one value per point; returns the first point whose generic case
/// degenerated (both distances zero), or SIZE_MAX.
std::size_t phi_serial(const PhiInputs& in, std::span<double> out);
std::size_t phi_omp(const PhiInputs& in, std::span<double> out);

/// The per-point formula shared by both kernels and phi_point.
/// Returns NaN for the degenerate generic case.
double phi_value(const PhiInputs& in, std::size_t p);

/// Neighbor lists of an explicit matrix: q ≠ p with dist ≤ ε.
std::vector<std::vector<std::uint32_t>> neighbors_matrix_serial(std::span<const double> dist,
                                                                std::size_t n, double eps);
std::vector<std::vector<std::uint32_t>> neighbors_matrix_omp(std::span<const double> dist,
                                                             std::size_t n, double eps);

/// Neighbor lists from coordinates via uniform grid bucketing (cell = ε).
std::vector<std::vector<std::uint32_t>> neighbors_points_serial(
    const std::vector<std::vector<double>>& points, double eps);
std::vector<std::vector<std::uint32_t>> neighbors_points_omp(
    const std::vector<std::vector<double>>& points, double eps);

/// All-pairs shortest paths by Dijkstra from every source over a weighted
/// adjacency list; unreachable pairs are +∞.
std::vector<double> apsp_serial(std::span<const std::size_t> offsets,
                                std::span<const std::uint32_t> adjacency,
                                std::span<const double> weights, std::size_t n);
std::vector<double> apsp_omp(std::span<const std::size_t> offsets,
                             std::span<const std::uint32_t> adjacency,
                             std::span<const double> weights, std::size_t n);

/// Largest amount by which d(p,r) exceeds d(p,q) + d(q,r); ≤ 0 for metrics.
double triangle_excess_serial(std::span<const double> dist, std::size_t n);
double triangle_excess_omp(std::span<const double> dist, std::size_t n);

double diameter_serial(const SampledSpace& space);
double diameter_omp(const SampledSpace& space);

/// Closed monotone-correspondence cost between cyclic sequences `a` and `b`,
/// minimised over the start offset in `b`. `b` is taken in the given order.
double cyclic_correspondence_serial(std::span<const double> a, std::span<const double> b);
double cyclic_correspondence_omp(std::span<const double> a, std::span<const double> b);

}  // namespace filtforge::kernels

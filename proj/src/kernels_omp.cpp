#include <omp.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "filtforge/kernels.hpp"
#include "kernels_detail.hpp"

namespace filtforge::kernels {

namespace {
using signed_index = std::int64_t;
}

AlphaBetaPositions alpha_beta_omp(std::span<const Subset> sets, std::span<const Subset> interiors) {
  const std::size_t n = sets.empty() ? 0 : sets.front().universe();
  AlphaBetaPositions out{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
#pragma omp parallel for schedule(static)
  for (signed_index p = 0; p < static_cast<signed_index>(n); ++p)
    detail::alpha_beta_at(sets, interiors, static_cast<std::size_t>(p), out.alpha[p], out.beta[p]);
  return out;
}

std::size_t phi_omp(const PhiInputs& in, std::span<double> out) {
  const auto n = static_cast<signed_index>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (signed_index p = 0; p < n; ++p) out[p] = phi_value(in, static_cast<std::size_t>(p));
  for (std::size_t p = 0; p < out.size(); ++p)
    if (std::isnan(out[p])) return p;
  return SIZE_MAX;
}

std::vector<std::vector<std::uint32_t>> neighbors_matrix_omp(std::span<const double> dist,
                                                             std::size_t n, double eps) {
  std::vector<std::vector<std::uint32_t>> out(n);
#pragma omp parallel for schedule(static)
  for (signed_index p = 0; p < static_cast<signed_index>(n); ++p)
    out[p] = detail::matrix_row_neighbors(dist, n, eps, static_cast<std::size_t>(p));
  return out;
}

std::vector<std::vector<std::uint32_t>> neighbors_points_omp(
    const std::vector<std::vector<double>>& points, double eps) {
  const detail::GridBuckets grid(points, eps);
  std::vector<std::vector<std::uint32_t>> out(points.size());
#pragma omp parallel for schedule(static)
  for (signed_index p = 0; p < static_cast<signed_index>(points.size()); ++p)
    out[p] = grid.neighbors(static_cast<std::size_t>(p));
  return out;
}

std::vector<double> apsp_omp(std::span<const std::size_t> offsets,
                             std::span<const std::uint32_t> adjacency,
                             std::span<const double> weights, std::size_t n) {
  std::vector<double> out(n * n);
#pragma omp parallel for schedule(dynamic, 4)
  for (signed_index s = 0; s < static_cast<signed_index>(n); ++s)
    detail::dijkstra_row(offsets, adjacency, weights, n, static_cast<std::size_t>(s),
                         out.data() + s * static_cast<signed_index>(n));
  return out;
}

double triangle_excess_omp(std::span<const double> dist, std::size_t n) {
  double worst = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst)
  for (signed_index p = 0; p < static_cast<signed_index>(n); ++p)
    worst = std::max(worst, detail::triangle_row(dist, n, static_cast<std::size_t>(p)));
  return worst;
}

double diameter_omp(const SampledSpace& space) {
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 64) reduction(max : worst)
  for (signed_index p = 0; p < static_cast<signed_index>(space.size()); ++p)
    worst = std::max(worst, detail::diameter_row(space, static_cast<std::size_t>(p)));
  return worst;
}

double cyclic_correspondence_omp(std::span<const double> a, std::span<const double> b) {
  double best = kInfinity;
#pragma omp parallel reduction(min : best)
  {
    std::vector<double> prev, cur;
#pragma omp for schedule(dynamic, 1)
    for (signed_index s = 0; s < static_cast<signed_index>(b.size()); ++s)
      best = std::min(best, detail::correspondence_at(a, b, static_cast<std::size_t>(s), prev, cur));
  }
  return best;
}

}  // namespace filtforge::kernels

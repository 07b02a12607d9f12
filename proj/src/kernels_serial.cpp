#include <cmath>
#include <limits>

#include "filtforge/kernels.hpp"
#include "kernels_detail.hpp"

namespace filtforge::kernels {

AlphaBetaPositions alpha_beta_serial(std::span<const Subset> sets, std::span<const Subset> interiors) {
  const std::size_t n = sets.empty() ? 0 : sets.front().universe();
  AlphaBetaPositions out{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
  for (std::size_t p = 0; p < n; ++p) detail::alpha_beta_at(sets, interiors, p, out.alpha[p], out.beta[p]);
  return out;
}

double phi_value(const PhiInputs& in, std::size_t p) {
  const std::size_t top = in.index.size() - 1;
  if (top == 1) return in.index[top];
  const std::size_t a = in.alpha[p];
  const std::size_t b = in.beta[p];
  if (a == 0) return in.index[b];
  if (a == b) return in.index[a];
  // Only reachable when hypotheses were skipped; verification reports it.
  if (a > b) return in.index[b];

  const double to_lower = dist_point_set(*in.space, p, in.sets[a]);
  // K_α empty: nothing pulls the value below β.
  if (to_lower == kInfinity) return in.index[b];

  double to_upper = in.star;
  if (b != top) {
    const double d = dist_point_set(*in.space, p, in.closure_complements[b]);
    if (d != kInfinity) to_upper = d;
  }
  const double sum = to_lower + to_upper;
  if (sum == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double lo = in.index[a];
  const double hi = in.index[b];
  const double value = (lo * to_upper + hi * to_lower) / sum;
  return std::clamp(value, std::nextafter(lo, hi), hi);
}

std::size_t phi_serial(const PhiInputs& in, std::span<double> out) {
  std::size_t first_bad = SIZE_MAX;
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = phi_value(in, p);
    if (std::isnan(out[p]) && first_bad == SIZE_MAX) first_bad = p;
  }
  return first_bad;
}

std::vector<std::vector<std::uint32_t>> neighbors_matrix_serial(std::span<const double> dist,
                                                                std::size_t n, double eps) {
  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::size_t p = 0; p < n; ++p) out[p] = detail::matrix_row_neighbors(dist, n, eps, p);
  return out;
}

std::vector<std::vector<std::uint32_t>> neighbors_points_serial(
    const std::vector<std::vector<double>>& points, double eps) {
  const detail::GridBuckets grid(points, eps);
  std::vector<std::vector<std::uint32_t>> out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) out[p] = grid.neighbors(p);
  return out;
}

std::vector<double> apsp_serial(std::span<const std::size_t> offsets,
                                std::span<const std::uint32_t> adjacency,
                                std::span<const double> weights, std::size_t n) {
  std::vector<double> out(n * n);
  for (std::size_t s = 0; s < n; ++s) detail::dijkstra_row(offsets, adjacency, weights, n, s, out.data() + s * n);
  return out;
}

double triangle_excess_serial(std::span<const double> dist, std::size_t n) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < n; ++p) worst = std::max(worst, detail::triangle_row(dist, n, p));
  return worst;
}

double diameter_serial(const SampledSpace& space) {
  double worst = 0.0;
  for (std::size_t p = 0; p < space.size(); ++p) worst = std::max(worst, detail::diameter_row(space, p));
  return worst;
}

double cyclic_correspondence_serial(std::span<const double> a, std::span<const double> b) {
  double best = kInfinity;
  std::vector<double> prev, cur;
  for (std::size_t s = 0; s < b.size(); ++s)
    best = std::min(best, detail::correspondence_at(a, b, s, prev, cur));
  return best;
}

}  // namespace filtforge::kernels

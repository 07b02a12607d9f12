#include "filtforge/metric_space.hpp"

#include <cmath>
#include <queue>
#include <string>

#include "filtforge/error.hpp"
#include "filtforge/kernels.hpp"

namespace filtforge {

namespace {

constexpr std::size_t kTriangleCheckLimit = 2000;

void check_resolution(double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution))
    throw StructuralError("resolution must be a positive finite number");
}

bool graph_connected(std::size_t n, const std::vector<std::size_t>& offsets,
                     const std::vector<std::uint32_t>& adjacency) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<std::uint32_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const auto p = frontier.front();
    frontier.pop();
    for (std::size_t k = offsets[p]; k < offsets[p + 1]; ++k) {
      const auto q = adjacency[k];
      if (!seen[q]) {
        seen[q] = 1;
        ++reached;
        frontier.push(q);
      }
    }
  }
  return reached == n;
}

}  // namespace

std::shared_ptr<const SampledSpace> SampledSpace::from_matrix(std::vector<double> dist,
                                                              std::size_t point_count,
                                                              double resolution,
                                                              const SpaceOptions& options) {
  if (point_count == 0) throw StructuralError("space must have at least one point");
  if (dist.size() != point_count * point_count)
    throw StructuralError("distance matrix has " + std::to_string(dist.size()) +
                          " entries, expected " + std::to_string(point_count * point_count));
  check_resolution(resolution);

  const std::size_t n = point_count;
  for (std::size_t p = 0; p < n; ++p) {
    if (dist[p * n + p] != 0.0)
      throw StructuralError("dist[" + std::to_string(p) + "][" + std::to_string(p) + "] is not 0");
    for (std::size_t q = p + 1; q < n; ++q) {
      const double d = dist[p * n + q];
      if (!std::isfinite(d) || d <= 0.0)
        throw StructuralError("dist[" + std::to_string(p) + "][" + std::to_string(q) +
                              "] must be positive and finite");
      if (d != dist[q * n + p])
        throw StructuralError("distance matrix is not symmetric at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
    }
  }

  const bool triangle = options.check_triangle.value_or(n < kTriangleCheckLimit);
  if (triangle) {
    const double excess = options.exec == Exec::parallel ? kernels::triangle_excess_omp(dist, n)
                                                         : kernels::triangle_excess_serial(dist, n);
    double scale = 1.0;
    for (double d : dist) scale = std::max(scale, d);
    if (excess > 1e-12 * scale)
      throw StructuralError("distance matrix violates the triangle inequality by " +
                            std::to_string(excess));
  }

  std::shared_ptr<SampledSpace> space(new SampledSpace());
  space->point_count_ = n;
  space->resolution_ = resolution;
  space->metric_ = Metric::explicit_matrix;
  space->matrix_ = std::move(dist);
  space->finish(options);
  return space;
}

std::shared_ptr<const SampledSpace> SampledSpace::from_points(std::vector<std::vector<double>> points,
                                                              double resolution, Metric metric,
                                                              const SpaceOptions& options) {
  if (points.empty()) throw StructuralError("space must have at least one point");
  if (metric == Metric::explicit_matrix)
    throw StructuralError("coordinates need a euclidean or geodesic metric");
  check_resolution(resolution);
  const std::size_t dim = points.front().size();
  if (dim == 0) throw StructuralError("points must have at least one coordinate");
  for (const auto& pt : points) {
    if (pt.size() != dim) throw StructuralError("points have mixed dimensions");
    for (double x : pt)
      if (!std::isfinite(x)) throw StructuralError("point coordinates must be finite");
  }

  std::shared_ptr<SampledSpace> space(new SampledSpace());
  space->point_count_ = points.size();
  space->resolution_ = resolution;
  space->metric_ = Metric::euclidean;
  space->points_ = std::move(points);
  space->finish(options);

  if (metric == Metric::geodesic) {
    if (!space->connected_)
      throw StructuralError("geodesic metric needs a connected ε-neighborhood graph");
    std::vector<double> weights(space->adjacency_.size());
    for (std::size_t p = 0; p < space->point_count_; ++p)
      for (std::size_t k = space->offsets_[p]; k < space->offsets_[p + 1]; ++k)
        weights[k] = space->euclidean(p, space->adjacency_[k]);
    space->matrix_ = options.exec == Exec::parallel
                         ? kernels::apsp_omp(space->offsets_, space->adjacency_, weights,
                                             space->point_count_)
                         : kernels::apsp_serial(space->offsets_, space->adjacency_, weights,
                                                space->point_count_);
    space->metric_ = Metric::geodesic;
  }
  return space;
}

void SampledSpace::finish(const SpaceOptions& options) {
  std::vector<std::vector<std::uint32_t>> lists;
  if (!matrix_.empty()) {
    lists = options.exec == Exec::parallel
                ? kernels::neighbors_matrix_omp(matrix_, point_count_, resolution_)
                : kernels::neighbors_matrix_serial(matrix_, point_count_, resolution_);
  } else {
    lists = options.exec == Exec::parallel ? kernels::neighbors_points_omp(points_, resolution_)
                                           : kernels::neighbors_points_serial(points_, resolution_);
  }
  offsets_.assign(point_count_ + 1, 0);
  for (std::size_t p = 0; p < point_count_; ++p) offsets_[p + 1] = offsets_[p] + lists[p].size();
  adjacency_.reserve(offsets_.back());
  for (const auto& l : lists) adjacency_.insert(adjacency_.end(), l.begin(), l.end());

  connected_ = graph_connected(point_count_, offsets_, adjacency_);
  if (options.require_connected && !connected_)
    throw StructuralError("space was declared connected but its ε-neighborhood graph is not");
}

double SampledSpace::euclidean(std::size_t p, std::size_t q) const {
  const auto& a = points_[p];
  const auto& b = points_[q];
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double SampledSpace::diameter() const {
  std::call_once(diameter_once_, [this] { diameter_ = kernels::diameter_omp(*this); });
  return diameter_;
}

Subset interior(const SampledSpace& space, const Subset& x) {
  if (x.universe() != space.size())
    throw StructuralError("subset universe does not match the space");
  Subset out = x;
  x.for_each([&](std::uint32_t p) {
    for (auto q : space.neighbors(p)) {
      if (!x.contains(q)) {
        out.erase(p);
        break;
      }
    }
  });
  return out;
}

Subset closure_complement(const SampledSpace& space, const Subset& x) {
  return interior(space, x).complement();
}

Subset boundary(const SampledSpace& space, const Subset& x) {
  return x & closure_complement(space, x);
}

double dist_point_set(const SampledSpace& space, std::size_t p, const Subset& x) {
  if (x.universe() != space.size())
    throw StructuralError("subset universe does not match the space");
  if (p >= space.size()) throw StructuralError("point " + std::to_string(p) + " out of range");
  double best = kInfinity;
  x.for_each([&](std::uint32_t q) { best = std::min(best, space.dist(p, q)); });
  return best;
}

namespace {
double directed_hausdorff(const SampledSpace& space, const Subset& from, const Subset& to) {
  double worst = 0.0;
  from.for_each([&](std::uint32_t p) { worst = std::max(worst, dist_point_set(space, p, to)); });
  return worst;
}
}  // namespace

double hausdorff(const SampledSpace& space, const Subset& x, const Subset& y) {
  const bool ex = x.empty();
  const bool ey = y.empty();
  if (ex && ey) return 0.0;
  if (ex || ey) return kInfinity;
  return std::max(directed_hausdorff(space, x, y), directed_hausdorff(space, y, x));
}

double star_distance(const SampledSpace& space) {
  const double diam = space.diameter();
  if (!(diam > 0.0))
    throw DegenerateSpaceError("space has zero diameter; no auxiliary point distance exists");
  return diam / 2.0;
}

}  // namespace filtforge

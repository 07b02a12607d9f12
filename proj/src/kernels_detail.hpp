#pragma once

// Per-element helpers shared by the serial and OpenMP kernels so that both
// run the same floating-point operations in the same order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

#include "filtforge/kernels.hpp"

namespace filtforge::kernels::detail {

inline void alpha_beta_at(std::span<const Subset> sets, std::span<const Subset> interiors,
                          std::size_t p, std::uint32_t& alpha, std::uint32_t& beta) {
  const auto levels = static_cast<std::uint32_t>(sets.size());
  alpha = 0;
  for (std::uint32_t k = levels; k-- > 0;) {
    if (!interiors[k].contains(p)) {
      alpha = k;
      break;
    }
  }
  beta = levels - 1;
  for (std::uint32_t k = 0; k < levels; ++k) {
    if (sets[k].contains(p)) {
      beta = k;
      break;
    }
  }
}

inline std::vector<std::uint32_t> matrix_row_neighbors(std::span<const double> dist, std::size_t n,
                                                       double eps, std::size_t p) {
  std::vector<std::uint32_t> row;
  for (std::size_t q = 0; q < n; ++q)
    if (q != p && dist[p * n + q] <= eps) row.push_back(static_cast<std::uint32_t>(q));
  return row;
}

struct CellHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : key) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

/// Uniform buckets with side slightly above ε so that neighbors always sit in
/// adjacent cells despite rounding in the division.
class GridBuckets {
 public:
  GridBuckets(const std::vector<std::vector<double>>& points, double eps)
      : points_(points), eps_(eps), cell_(eps * (1.0 + 1e-9)) {
    dim_ = points.empty() ? 0 : points.front().size();
    for (std::size_t p = 0; p < points.size(); ++p)
      buckets_[key_of(points[p])].push_back(static_cast<std::uint32_t>(p));
  }

  std::vector<std::uint32_t> neighbors(std::size_t p) const {
    std::vector<std::uint32_t> out;
    const auto base = key_of(points_[p]);
    std::vector<std::int64_t> key(dim_);
    std::vector<int> offset(dim_, -1);
    while (true) {
      for (std::size_t k = 0; k < dim_; ++k) key[k] = base[k] + offset[k];
      if (auto it = buckets_.find(key); it != buckets_.end()) {
        for (auto q : it->second)
          if (q != p && distance(p, q) <= eps_) out.push_back(q);
      }
      std::size_t k = 0;
      while (k < dim_ && offset[k] == 1) offset[k++] = -1;
      if (k == dim_) break;
      ++offset[k];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::int64_t> key_of(const std::vector<double>& x) const {
    std::vector<std::int64_t> key(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
      key[k] = static_cast<std::int64_t>(std::floor(x[k] / cell_));
    return key;
  }

  double distance(std::size_t p, std::size_t q) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double d = points_[p][k] - points_[q][k];
      sum += d * d;
    }
    return std::sqrt(sum);
  }

  const std::vector<std::vector<double>>& points_;
  double eps_;
  double cell_;
  std::size_t dim_ = 0;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::uint32_t>, CellHash> buckets_;
};

inline void dijkstra_row(std::span<const std::size_t> offsets, std::span<const std::uint32_t> adjacency,
                         std::span<const double> weights, std::size_t n, std::size_t source,
                         double* row) {
  std::fill(row, row + n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  row[source] = 0.0;
  heap.emplace(0.0, static_cast<std::uint32_t>(source));
  while (!heap.empty()) {
    const auto [d, p] = heap.top();
    heap.pop();
    if (d > row[p]) continue;
    for (std::size_t k = offsets[p]; k < offsets[p + 1]; ++k) {
      const double nd = d + weights[k];
      const auto q = adjacency[k];
      if (nd < row[q]) {
        row[q] = nd;
        heap.emplace(nd, q);
      }
    }
  }
}

inline double triangle_row(std::span<const double> dist, std::size_t n, std::size_t p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t q = 0; q < n; ++q) {
    const double pq = dist[p * n + q];
    for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, dist[p * n + r] - (pq + dist[q * n + r]));
  }
  return worst;
}

inline double diameter_row(const SampledSpace& space, std::size_t p) {
  double worst = 0.0;
  for (std::size_t q = p + 1; q < space.size(); ++q) worst = std::max(worst, space.dist(p, q));
  return worst;
}

/// Closed correspondence cost for a fixed start offset in b.
/// Path from (0,0) to (n,m) where index n wraps to a[0] and m to b[offset].
inline double correspondence_at(std::span<const double> a, std::span<const double> b,
                                std::size_t offset, std::vector<double>& prev,
                                std::vector<double>& cur) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  auto cost = [&](std::size_t i, std::size_t j) {
    return std::abs(a[i % n] - b[(offset + j) % m]);
  };
  prev.assign(m + 1, 0.0);
  cur.assign(m + 1, 0.0);
  prev[0] = cost(0, 0);
  for (std::size_t j = 1; j <= m; ++j) prev[j] = std::max(prev[j - 1], cost(0, j));
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = std::max(prev[0], cost(i, 0));
    for (std::size_t j = 1; j <= m; ++j) {
      const double best = std::min({prev[j], cur[j - 1], prev[j - 1]});
      cur[j] = std::max(best, cost(i, j));
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace filtforge::kernels::detail

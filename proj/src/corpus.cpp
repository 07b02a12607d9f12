#include "filtforge/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "filtforge/error.hpp"

namespace filtforge::corpus {

namespace {

constexpr double kTol = 1e-9;

/// ε slightly above the sample spacing so rounding never drops a neighbor.
double resolution_for(double spacing) { return spacing * (1.0 + kTol); }

std::size_t steps_in(double length, double step) {
  const double count = length / step;
  const auto rounded = static_cast<std::size_t>(std::llround(count));
  if (std::abs(count - static_cast<double>(rounded)) > 1e-6)
    throw FixtureError("step " + std::to_string(step) + " does not divide " + std::to_string(length));
  return rounded;
}

template <class Pred>
Subset select(const SampledSpace& space, Pred pred) {
  Subset out = Subset::none(space.size());
  for (std::size_t p = 0; p < space.size(); ++p)
    if (pred(space.points()[p])) out.insert(p);
  return out;
}

SpacePtr grid_space(std::size_t nx, std::size_t ny, double spacing) {
  std::vector<std::vector<double>> pts;
  pts.reserve((nx + 1) * (ny + 1));
  for (std::size_t i = 0; i <= nx; ++i)
    for (std::size_t j = 0; j <= ny; ++j)
      pts.push_back({static_cast<double>(i) * spacing, static_cast<double>(j) * spacing});
  return SampledSpace::from_points(std::move(pts), resolution_for(spacing), Metric::euclidean);
}

std::vector<Subset> sublevels(std::size_t n, const std::vector<double>& height,
                              const std::vector<double>& thresholds) {
  std::vector<Subset> out;
  for (double t : thresholds) {
    Subset s = Subset::none(n);
    for (std::size_t p = 0; p < n; ++p)
      if (height[p] <= t) s.insert(p);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw StructuralError("Rng::below needs a positive bound");
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

SpacePtr chain_space(std::size_t count, double step) {
  if (count == 0) throw FixtureError("chain needs at least one point");
  std::vector<std::vector<double>> pts(count);
  for (std::size_t k = 0; k < count; ++k) pts[k] = {static_cast<double>(k) * step};
  return SampledSpace::from_points(std::move(pts), resolution_for(step), Metric::euclidean);
}

SpacePtr circle_space(std::size_t count) {
  if (count < 3) throw FixtureError("circle needs at least three points");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(count);
  std::vector<double> dist(count * count);
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = 0; q < count; ++q) {
      const std::size_t k = p > q ? p - q : q - p;
      dist[p * count + q] = step * static_cast<double>(std::min(k, count - k));
    }
  return SampledSpace::from_matrix(std::move(dist), count, resolution_for(step));
}

SpacePtr random_space(std::uint64_t seed, std::size_t count, std::size_t dim) {
  if (count == 0 || dim == 0) throw FixtureError("random space needs points and dimensions");
  Rng rng(seed);
  std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
  for (auto& p : pts)
    for (auto& x : p) x = rng.uniform();

  auto d = [&](std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) s += (pts[p][k] - pts[q][k]) * (pts[p][k] - pts[q][k]);
    return std::sqrt(s);
  };
  // Prim's algorithm; the longest tree edge is the smallest ε that connects.
  std::vector<double> best(count, kInfinity);
  std::vector<char> in_tree(count, 0);
  best[0] = 0.0;
  double longest = 0.0;
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t u = count;
    for (std::size_t p = 0; p < count; ++p)
      if (!in_tree[p] && (u == count || best[p] < best[u])) u = p;
    in_tree[u] = 1;
    longest = std::max(longest, best[u]);
    for (std::size_t p = 0; p < count; ++p)
      if (!in_tree[p]) best[p] = std::min(best[p], d(u, p));
  }
  const double eps = count == 1 ? 1.0 : resolution_for(longest);
  return SampledSpace::from_points(std::move(pts), eps, Metric::euclidean);
}

Filtration1D exastab_a(double resolution, double index_step) {
  if (!(resolution > 0.0) || resolution >= 1.0) throw FixtureError("exastab-a needs 0 < ε < 1");
  if (!(index_step > 0.0) || index_step > 1.0) throw FixtureError("exastab-a needs 0 < h ≤ 1");
  const std::size_t samples = steps_in(2.0, resolution);
  const std::size_t steps = steps_in(1.0, index_step);
  auto space = chain_space(samples + 1, resolution);

  std::vector<double> index{-1.0};
  for (std::size_t k = 0; k <= steps; ++k)
    index.push_back(k == steps ? 1.0 : static_cast<double>(k) * index_step);

  std::vector<Subset> sets{Subset::none(space->size())};
  Subset origin = Subset::none(space->size());
  origin.insert(0);
  sets.push_back(origin);
  for (std::size_t k = 2; k < index.size(); ++k) {
    const double edge = index[k] + 1.0 + kTol;
    sets.push_back(select(*space, [&](const auto& x) { return x[0] <= edge; }));
  }
  return Filtration1D(space, IndexSet(std::move(index)), std::move(sets));
}

Filtration1D exastab_b(double resolution) {
  if (!(resolution > 0.0) || resolution >= 1.0) throw FixtureError("exastab-b needs 0 < ε < 1");
  const double radius = 3.0;
  const auto r = static_cast<std::int64_t>(std::floor(radius / resolution + kTol));
  std::vector<std::vector<double>> pts;
  for (std::int64_t i = -r; i <= r; ++i)
    for (std::int64_t j = -r; j <= r; ++j) {
      const double x = static_cast<double>(i) * resolution;
      const double y = static_cast<double>(j) * resolution;
      if (x * x + y * y <= radius * radius + kTol) pts.push_back({x, y});
    }
  auto space = SampledSpace::from_points(std::move(pts), resolution_for(resolution), Metric::euclidean);

  const Subset half = select(*space, [](const auto& x) { return x[1] <= kTol; });
  const Subset small = select(*space, [](const auto& x) {
    return x[0] * x[0] + (x[1] + 1.0) * (x[1] + 1.0) <= 1.0 + kTol;
  });

  // The tangency point must be sampled and see a neighbor above the line.
  const Subset escapes = half - interior(*space, half);
  bool resolved = false;
  small.for_each([&](std::uint32_t p) {
    const auto& x = space->points()[p];
    if (escapes.contains(p) && std::hypot(x[0] - exastab_b_tangency[0], x[1] - exastab_b_tangency[1]) <= resolution)
      resolved = true;
  });
  if (!resolved) throw FixtureError("tangency point is not resolved at ε = " + std::to_string(resolution));

  std::vector<Subset> sets{Subset::none(space->size()), small, half, Subset::all(space->size())};
  return Filtration1D(space, IndexSet({0.0, 1.0, 2.0, 3.0}), std::move(sets));
}

FiltrationND exacomplete(double spacing) {
  if (!(spacing > 0.0) || spacing > 0.25) throw FixtureError("exacomplete needs spacing ≤ 0.25");
  auto space = grid_space(steps_in(4.0, spacing), steps_in(2.0, spacing), spacing);
  const std::size_t n = space->size();
  const Subset left = select(*space, [](const auto& x) { return x[0] <= 2.5 + kTol; });
  const Subset right = select(*space, [](const auto& x) { return x[0] >= 1.5 - kTol; });
  const Subset patch = select(*space, [](const auto& x) {
    return x[0] >= 1.5 - kTol && x[0] <= 2.5 + kTol && x[1] <= 0.75 + kTol;
  });
  std::vector<Subset> sets(9, Subset::none(n));
  auto cell = [&](std::size_t a, std::size_t b) -> Subset& { return sets[a * 3 + b]; };
  cell(1, 1) = patch;
  cell(1, 2) = left;
  cell(2, 1) = right;
  cell(2, 2) = Subset::all(n);
  const IndexSet axis({0.0, 1.0, 2.0});
  return FiltrationND(space, {axis, axis}, std::move(sets));
}

namespace {

struct Unit {
  int depth;
  std::size_t left, right;  ///< side lengths in samples, peak to minimum
};

/// Height along one side at distance j (1 ≤ j < length) from the peak.
double side_height(int depth, std::size_t top, std::size_t length, std::size_t j) {
  if (j <= top) return 6.0 - static_cast<double>(j) / static_cast<double>(top);
  const double span = static_cast<double>(length - top);
  return 5.0 - (5.0 - depth) * (static_cast<double>(j - top) / span);
}

std::vector<double> circle_heights(const std::vector<Unit>& units, std::size_t top,
                                   std::vector<std::size_t>* peak_ids = nullptr,
                                   std::vector<std::size_t>* min_ids = nullptr) {
  std::vector<double> g;
  for (const auto& u : units) {
    if (peak_ids) peak_ids->push_back(g.size());
    g.push_back(6.0);
    for (std::size_t j = 1; j < u.left; ++j) g.push_back(side_height(u.depth, top, u.left, j));
    if (min_ids) min_ids->push_back(g.size());
    g.push_back(static_cast<double>(u.depth));
    for (std::size_t j = u.right; j-- > 1;) g.push_back(side_height(u.depth, top, u.right, j));
  }
  return g;
}

}  // namespace

CirclePair circle_pair(std::size_t samples) {
  if (samples < 64) throw FixtureError("circle pair needs at least 64 samples");
  // Reference layout at 256 samples: a plateau band of 6 samples per side,
  // then a descent whose length depends on the valley depth.
  const double scale = static_cast<double>(samples) / 256.0;
  const std::size_t top = std::max<std::size_t>(1, static_cast<std::size_t>(6.0 * scale));
  const std::size_t descent[6] = {0, 34, 28, 22, 14, 0};
  auto units_for = [&](const std::array<int, 5>& order) {
    std::vector<Unit> units;
    for (int d : order) {
      const std::size_t s =
          d == 5 ? 0 : std::max<std::size_t>(1, static_cast<std::size_t>(descent[d] * scale));
      units.push_back({d, top + s, top + s});
    }
    return units;
  };
  auto a_units = units_for({1, 2, 3, 4, 5});
  auto b_units = units_for({1, 3, 5, 2, 4});
  std::size_t used = 0;
  for (const auto& u : a_units) used += u.left + u.right;
  // Leftover samples lengthen the rising side of the deepest valley.
  a_units[0].right += samples - used;
  b_units[0].right += samples - used;

  std::vector<std::size_t> peaks, minima;
  auto height_a = circle_heights(a_units, top, &peaks, &minima);
  auto height_b = circle_heights(b_units, top);

  auto space = circle_space(samples);
  const std::vector<double> levels{0, 1, 2, 3, 4, 5, 6};
  CirclePair out{Filtration1D(space, IndexSet(levels), sublevels(samples, height_a, levels)),
                 Filtration1D(space, IndexSet(levels), sublevels(samples, height_b, levels)),
                 static_cast<std::uint32_t>(peaks[2]),
                 static_cast<std::uint32_t>(minima[2]),
                 static_cast<std::uint32_t>(peaks[3]),
                 static_cast<std::uint32_t>(minima[3]),
                 std::move(height_a),
                 std::move(height_b)};
  return out;
}

Filtration1D smooth_chain(double resolution) {
  if (!(resolution > 0.0) || resolution > 0.1) throw FixtureError("smooth chain needs ε ≤ 0.1");
  auto space = chain_space(steps_in(2.0, resolution) + 1, resolution);
  std::vector<double> height(space->size());
  for (std::size_t p = 0; p < height.size(); ++p) {
    const double x = space->points()[p][0];
    height[p] = x + std::sin(std::numbers::pi * x) / 4.0;
  }
  std::vector<double> levels{-0.25};
  for (int k = 1; k <= 8; ++k) levels.push_back(0.25 * k);
  auto sets = sublevels(space->size(), height, levels);
  sets.back() = Subset::all(space->size());
  return Filtration1D(space, IndexSet(std::move(levels)), std::move(sets));
}

RandomFiltration random_stable_filtration(std::uint64_t seed, const SpacePtr& space,
                                          std::size_t levels) {
  if (levels < 2) throw FixtureError("a filtration needs at least two levels");
  if (!space->connected()) throw FixtureError("random filtrations need a connected space");
  Rng rng(seed);
  const std::size_t n = space->size();

  std::vector<double> index{rng.uniform() * 2.0 - 1.0};
  for (std::size_t k = 1; k < levels; ++k) index.push_back(index.back() + 0.05 + rng.uniform());

  std::vector<Subset> sets{Subset::none(n)};
  if (levels > 2) {
    Subset seeds = Subset::none(n);
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t k = 0; k < count; ++k) seeds.insert(rng.below(n));
    sets.push_back(seeds);
  }
  while (sets.size() + 1 < levels) {
    Subset grown = sets.back();
    sets.back().for_each([&](std::uint32_t p) {
      for (auto q : space->neighbors(p)) grown.insert(q);
    });
    const std::size_t extra = rng.below(3);
    for (std::size_t k = 0; k < extra; ++k) grown.insert(rng.below(n));
    sets.push_back(std::move(grown));
  }
  sets.push_back(Subset::all(n));

  std::size_t distinct = 1;
  for (std::size_t k = 1; k < sets.size(); ++k)
    if (sets[k] != sets[k - 1]) ++distinct;
  return {Filtration1D(space, IndexSet(std::move(index)), std::move(sets)), distinct};
}

}  // namespace filtforge::corpus

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "filtforge/filtration.hpp"
#include "filtforge/metric_space.hpp"

namespace filtforge::corpus {

/// K = [0,2] sampled every ε; I = {−1} ∪ {0, h, 2h, …, 1};
/// K₋₁ = ∅, K₀ = {0}, K_i = [0, i+1] for i ∈ ]0,1].
Filtration1D exastab_a(double resolution, double index_step);

/// Disk of radius 3 sampled on a grid of spacing ε with 4-neighborhoods.
/// K₂ is the lower half-disk, K₁ a disk of radius 1 tangent to y = 0 at the
/// origin, I = {0,1,2,3}. The tangency point is `exastab_b_tangency`.
Filtration1D exastab_b(double resolution);
inline constexpr std::array<double, 2> exastab_b_tangency{0.0, 0.0};

/// 3×3 grid filtration of the rectangle [0,4]×[0,2]; stable but incomplete
/// at (1,1). `witness_point` is P̄ = (2, 1.5).
FiltrationND exacomplete(double spacing = 0.25);
inline constexpr std::array<double, 2> exacomplete_witness{2.0, 1.5};

/// Two sub-level filtrations of a sampled circle with identical persistence
/// diagrams. Each is built from five valley units (minima 1..5, peaks 6);
/// `a` visits the units in order 1,2,3,4,5 and `b` in order 1,3,5,2,4.
struct CirclePair {
  Filtration1D a;
  Filtration1D b;
  /// Point ids (in `a`) of the labelled critical points: G, H = peak and
  /// 4-minimum, E, F = peak and 3-minimum.
  std::uint32_t e, f, g, h;
  /// Height functions whose sub-levels at I = {0..6} give a and b.
  std::vector<double> height_a, height_b;
};
CirclePair circle_pair(std::size_t samples = 256);

/// Synthesized φ value at every peak of the circle pair at n = 256:
/// 5 + 3/35. The separation bound is min{|v−4|, |v−3|}/2 = 19/35.
inline constexpr double circle_peak_value = 5.0 + 3.0 / 35.0;
inline constexpr double circle_separation_bound = 19.0 / 35.0;

/// Chain on [0,2] with spacing ε, sub-levels of x + sin(πx)/4 at
/// I = {−0.25, 0.25, 0.5, …, 2}.
Filtration1D smooth_chain(double resolution);
/// Lipschitz constant of the height function behind smooth_chain.
inline constexpr double smooth_chain_lipschitz = 1.0 + 3.14159265358979323846 / 4.0;

/// Evenly spaced chain of `count` points with spacing `step`; ε sits just
/// above `step` so consecutive points are neighbors despite rounding.
SpacePtr chain_space(std::size_t count, double step = 1.0);

/// Cycle of `count` points with arc-length geodesic metric on a circle of
/// circumference 2π.
SpacePtr circle_space(std::size_t count);

/// Uniform points in [0,1]^dim; ε is the longest minimum-spanning-tree edge
/// so the ε-graph is connected.
SpacePtr random_space(std::uint64_t seed, std::size_t count, std::size_t dim = 2);

struct RandomFiltration {
  Filtration1D filtration;
  /// Number of distinct sets; fewer than requested when dilation fills the
  /// space early.
  std::size_t effective_levels;
};

/// Seeded stable filtration with `levels` indices: ∅, then growing sets each
/// containing the neighborhood dilation of the previous one, then K.
RandomFiltration random_stable_filtration(std::uint64_t seed, const SpacePtr& space,
                                          std::size_t levels);

/// mt19937_64 with hand-written mappings to reals and ranges, so seeded
/// output does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform();                  ///< [0,1)
  std::size_t below(std::size_t n);  ///< [0,n)

 private:
  std::mt19937_64 engine_;
};

}  // namespace filtforge::corpus

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "filtforge/metric_space.hpp"
#include "filtforge/parallel.hpp"
#include "filtforge/synthesis.hpp"

namespace filtforge {

struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;
  auto operator<=>(const PersistencePair&) const = default;
};

/// Finite pairs (birth < death) plus essential births. Kept sorted so that
/// equal multisets compare equal.
struct PersistenceDiagram {
  int degree = 0;
  std::vector<PersistencePair> pairs;
  std::vector<double> essential;

  void normalize();
  bool operator==(const PersistenceDiagram&) const = default;
};

/// max over points of the max-norm difference.
double linf_distance(const FilteringFunction& a, const FilteringFunction& b);

/// Cyclic visiting order of a space whose neighborhood graph is one cycle.
/// Throws UnsupportedTopologyError otherwise.
std::vector<std::uint32_t> cycle_order(const SampledSpace& space);

/// Minimum over monotone cyclic correspondences (both orientations, every
/// offset) of the largest matched |φ(P) − φ'(Q)|. Lower bound for the
/// natural pseudo-distance between the sampled functions.
double pseudo_distance_cycle(const SampledSpace& space, const FilteringFunction& a,
                             const FilteringFunction& b, Exec exec = Exec::parallel);

/// Degree-0 sub-level persistence, elder rule, ties processed by point id.
PersistenceDiagram sublevel_pd0(const SampledSpace& space, const FilteringFunction& phi);

/// The loop of a cycle space is born when its last point enters: max φ.
PersistenceDiagram essential_h1_cycle(const SampledSpace& space, const FilteringFunction& phi);

/// Exact bottleneck distance (max-norm ground cost, diagonal allowed for
/// finite pairs, essential births matched by sorted order).
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace filtforge

#include <doctest.h>

#include <cmath>
#include <cstring>

#include "filtforge/comparison.hpp"
#include "filtforge/corpus.hpp"
#include "filtforge/kernels.hpp"
#include "filtforge/synthesis.hpp"

using namespace filtforge;

namespace {
bool bit_equal(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}
}  // namespace

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto space = corpus::random_space(seed, 60 + 7 * seed, 2);
    const auto n = space->size();

    CHECK(kernels::neighbors_points_serial(space->points(), space->resolution()) ==
          kernels::neighbors_points_omp(space->points(), space->resolution()));

    std::vector<double> dist(n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) dist[p * n + q] = space->dist(p, q);
    CHECK(kernels::neighbors_matrix_serial(dist, n, space->resolution()) ==
          kernels::neighbors_matrix_omp(dist, n, space->resolution()));
    CHECK(kernels::triangle_excess_serial(dist, n) == kernels::triangle_excess_omp(dist, n));
    CHECK(kernels::diameter_serial(*space) == kernels::diameter_omp(*space));

    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> adjacency;
    std::vector<double> weights;
    for (std::size_t p = 0; p < n; ++p) {
      for (auto q : space->neighbors(p)) {
        adjacency.push_back(q);
        weights.push_back(space->dist(p, q));
      }
      offsets.push_back(adjacency.size());
    }
    CHECK(bit_equal(kernels::apsp_serial(offsets, adjacency, weights, n),
                    kernels::apsp_omp(offsets, adjacency, weights, n)));

    const auto f = corpus::random_stable_filtration(seed, space, 6).filtration;
    std::vector<Subset> interiors;
    for (const auto& s : f.sets()) interiors.push_back(interior(*space, s));
    const auto s1 = kernels::alpha_beta_serial(f.sets(), interiors);
    const auto s2 = kernels::alpha_beta_omp(f.sets(), interiors);
    CHECK(s1.alpha == s2.alpha);
    CHECK(s1.beta == s2.beta);

    const auto phi_s = induce_1d(f, Exec::serial);
    const auto phi_p = induce_1d(f, Exec::parallel);
    CHECK(bit_equal(phi_s.values(), phi_p.values()));
  }
}

TEST_CASE("cyclic correspondence kernels agree") {
  corpus::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> a(30 + trial), b(25 + 2 * trial);
    for (auto& x : a) x = rng.uniform();
    for (auto& x : b) x = rng.uniform();
    CHECK(kernels::cyclic_correspondence_serial(a, b) == kernels::cyclic_correspondence_omp(a, b));
  }
  const auto pair = corpus::circle_pair(64);
  const auto fa = induce_1d(pair.a);
  const auto fb = induce_1d(pair.b);
  CHECK(pseudo_distance_cycle(pair.a.space(), fa, fb, Exec::serial) ==
        pseudo_distance_cycle(pair.a.space(), fa, fb, Exec::parallel));
}

TEST_CASE("geodesic construction is independent of the execution mode") {
  std::vector<std::vector<double>> pts;
  for (int k = 0; k < 40; ++k) pts.push_back({std::cos(k * 0.1), std::sin(k * 0.1)});
  SpaceOptions serial;
  serial.exec = Exec::serial;
  const auto a = SampledSpace::from_points(pts, 0.11, Metric::geodesic, serial);
  const auto b = SampledSpace::from_points(pts, 0.11, Metric::geodesic);
  CHECK(bit_equal(a->matrix(), b->matrix()));
}

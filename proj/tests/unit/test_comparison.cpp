#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "filtforge/comparison.hpp"
#include "filtforge/corpus.hpp"
#include "filtforge/error.hpp"

using namespace filtforge;

namespace {

FilteringFunction random_function(corpus::Rng& rng, std::size_t n, int distinct) {
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(rng.below(static_cast<std::size_t>(distinct)));
  return FilteringFunction(1, v);
}

FilteringFunction rotate(const FilteringFunction& f, std::size_t shift, bool reverse) {
  const std::size_t n = f.point_count();
  std::vector<double> v(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t src = reverse ? (n + shift - p) % n : (p + shift) % n;
    v[p] = f(src);
  }
  return FilteringFunction(1, v);
}

PersistenceDiagram random_diagram(corpus::Rng& rng, std::size_t max_pairs) {
  PersistenceDiagram d;
  const std::size_t count = rng.below(max_pairs + 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double b = rng.uniform() * 4;
    d.pairs.push_back({b, b + 0.01 + rng.uniform() * 3});
  }
  d.essential.push_back(rng.uniform());
  d.normalize();
  return d;
}

}  // namespace

TEST_CASE("L-infinity distance") {
  const FilteringFunction a(1, {0, 1, 2});
  CHECK(linf_distance(a, a) == 0);
  CHECK(linf_distance(a, FilteringFunction(1, {0.5, 1.5, 2.5})) == 0.5);
  CHECK(linf_distance(FilteringFunction(2, {0, 0, 1, 1}), FilteringFunction(2, {0, 3, 1, 1})) == 3);
  CHECK_THROWS_AS(linf_distance(a, FilteringFunction(1, {0, 1})), StructuralError);
  // Six-point cycle, differences 0.1, 0.4, 0, 0.25, 0.3, 0.
  const FilteringFunction u(1, {1, 2, 3, 4, 5, 6});
  const FilteringFunction w(1, {1.1, 1.6, 3, 4.25, 4.7, 6});
  CHECK(linf_distance(u, w) == doctest::Approx(0.4));
}

TEST_CASE("cycle detection") {
  const auto circle = corpus::circle_space(12);
  const auto order = cycle_order(*circle);
  CHECK(order.size() == 12);
  CHECK(order[0] == 0);
  CHECK(order[1] == 1);
  CHECK_THROWS_AS(cycle_order(*corpus::chain_space(12)), UnsupportedTopologyError);
  const FilteringFunction f(1, std::vector<double>(12, 0.0));
  CHECK_THROWS_AS(pseudo_distance_cycle(*corpus::chain_space(12), f, f), UnsupportedTopologyError);
  CHECK_THROWS_AS(essential_h1_cycle(*corpus::chain_space(12), f), UnsupportedTopologyError);
}

TEST_CASE("pseudo-distance invariances and bounds") {
  corpus::Rng rng(5);
  const auto circle = corpus::circle_space(24);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_function(rng, 24, 7);
    CHECK(pseudo_distance_cycle(*circle, f, f) == 0.0);
    const std::size_t shift = rng.below(24);
    CHECK(pseudo_distance_cycle(*circle, f, rotate(f, shift, false)) == 0.0);
    CHECK(pseudo_distance_cycle(*circle, f, rotate(f, shift, true)) == 0.0);
    const auto g = random_function(rng, 24, 7);
    const double pseudo = pseudo_distance_cycle(*circle, f, g);
    CHECK(pseudo <= linf_distance(f, g));
    CHECK(pseudo >= bottleneck(sublevel_pd0(*circle, f), sublevel_pd0(*circle, g)));
    CHECK(pseudo == pseudo_distance_cycle(*circle, g, f));
  }
}

TEST_CASE("degree-0 persistence") {
  const auto chain = corpus::chain_space(7);
  const auto mono = sublevel_pd0(*chain, FilteringFunction(1, {0, 1, 2, 3, 4, 5, 6}));
  CHECK(mono.pairs.empty());
  CHECK(mono.essential == std::vector<double>{0});

  // W shape: minima 1 and 2, middle maximum 5.
  const auto w = sublevel_pd0(*chain, FilteringFunction(1, {3, 1, 4, 5, 2, 3, 6}));
  REQUIRE(w.pairs.size() == 1);
  CHECK(w.pairs[0] == PersistencePair{2, 5});
  CHECK(w.essential == std::vector<double>{1});
  CHECK(w == oracle::pd0(*chain, {3, 1, 4, 5, 2, 3, 6}));

  // Two components, each keeps its own essential class.
  const auto split = SampledSpace::from_points({{0.0}, {1.0}, {5.0}, {6.0}}, 1.0, Metric::euclidean);
  const auto d = sublevel_pd0(*split, FilteringFunction(1, {2, 0, 3, 1}));
  CHECK(d.essential == std::vector<double>{0, 1});
}

TEST_CASE("degree-0 persistence matches the rank-function oracle") {
  corpus::Rng rng(21);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto space = corpus::random_space(seed, 10 + seed % 30, 1 + seed % 3);
    const auto f = random_function(rng, space->size(), 2 + static_cast<int>(seed % 9));
    const std::vector<double> v(f.values().begin(), f.values().end());
    CHECK(sublevel_pd0(*space, f) == oracle::pd0(*space, v));
  }
}

TEST_CASE("essential degree-1 class on a cycle") {
  const auto circle = corpus::circle_space(10);
  const auto c = essential_h1_cycle(*circle, FilteringFunction(1, std::vector<double>(10, 2.5)));
  CHECK(c.degree == 1);
  CHECK(c.essential == std::vector<double>{2.5});
  CHECK(c.pairs.empty());
  std::vector<double> h(10);
  for (std::size_t k = 0; k < 10; ++k) h[k] = static_cast<double>(k % 6);
  CHECK(essential_h1_cycle(*circle, FilteringFunction(1, h)).essential == std::vector<double>{5});
}

TEST_CASE("bottleneck distance") {
  PersistenceDiagram one;
  one.pairs = {{0, 2}};
  PersistenceDiagram none;
  CHECK(bottleneck(one, one) == 0);
  CHECK(bottleneck(one, none) == 1);
  CHECK(bottleneck(none, one) == 1);
  PersistenceDiagram close;
  close.pairs = {{0.25, 2.5}};
  CHECK(bottleneck(one, close) == 0.5);

  PersistenceDiagram ess_a, ess_b;
  ess_a.essential = {0, 3};
  ess_b.essential = {1};
  CHECK(bottleneck(ess_a, ess_b) == kInfinity);
  ess_b.essential = {3.5, 0.25};
  CHECK(bottleneck(ess_a, ess_b) == 0.5);

  PersistenceDiagram deg1;
  deg1.degree = 1;
  CHECK_THROWS_AS(bottleneck(one, deg1), StructuralError);
}

TEST_CASE("bottleneck matches exhaustive matching") {
  corpus::Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_diagram(rng, 4);
    const auto b = random_diagram(rng, 3);
    CHECK(bottleneck(a, b) == oracle::bottleneck(a, b));
  }
}

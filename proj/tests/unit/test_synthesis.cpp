#include <doctest.h>

#include <cmath>

#include "filtforge/corpus.hpp"
#include "filtforge/error.hpp"
#include "filtforge/synthesis.hpp"

using namespace filtforge;

namespace {

Subset ids(std::size_t n, std::vector<std::uint32_t> v) { return Subset::of(n, v); }
Subset range(std::size_t n, std::uint32_t lo, std::uint32_t hi) {
  Subset s = Subset::none(n);
  for (auto p = lo; p <= hi; ++p) s.insert(p);
  return s;
}

Filtration1D chain_filtration() {
  const auto space = corpus::chain_space(11);
  return Filtration1D(space, IndexSet({0, 1, 2, 3}),
                      {Subset::none(11), range(11, 0, 2), range(11, 0, 8), Subset::all(11)});
}

}  // namespace

TEST_CASE("alpha and beta on the chain fixture") {
  const auto f = chain_filtration();
  const auto ab = alpha_beta(f);
  // Point 0 is inside int(K₁) = {0,1}: α = i_min, β = i₁.
  CHECK(ab.alpha(0) == 0);
  CHECK(ab.beta(0) == 1);
  // Boundary points of K₁ and K₂.
  CHECK(ab.alpha(2) == 1);
  CHECK(ab.beta(2) == 1);
  CHECK(ab.alpha(8) == 2);
  CHECK(ab.beta(8) == 2);
  CHECK(ab.alpha(5) == 1);
  CHECK(ab.beta(5) == 2);
  CHECK(ab.alpha(10) == 2);
  CHECK(ab.beta(10) == 3);

  for (std::size_t k = 0; k < f.levels(); ++k)
    boundary(f.space(), f.at(k)).for_each([&](std::uint32_t p) {
      CHECK(ab.alpha_pos[p] == k);
      CHECK(ab.beta_pos[p] == k);
    });
}

TEST_CASE("trivial filtration") {
  const auto space = corpus::chain_space(6);
  const Filtration1D f(space, IndexSet({-2, 7}), {Subset::none(6), Subset::all(6)});
  const auto ab = alpha_beta(f);
  for (std::size_t p = 0; p < 6; ++p) {
    CHECK(ab.alpha(p) == -2);
    CHECK(ab.beta(p) == 7);
    CHECK(phi_point(f, ab, p) == 7);
  }
  const auto phi = induce_1d(f);
  for (std::size_t p = 0; p < 6; ++p) CHECK(phi(p) == 7);
  CHECK(verify_induction(f, phi).passed());
}

TEST_CASE("phi cases") {
  const auto f = chain_filtration();
  const auto ab = alpha_beta(f);
  // α = β.
  CHECK(phi_point(f, ab, 2) == 1.0);
  // Equidistant generic point: d(5, K₁) = 3 = d(5, cl(K₂ᶜ)).
  CHECK(phi_point(f, ab, 5) == 1.5);
  // α = i_min.
  CHECK(phi_point(f, ab, 0) == 1.0);
  // β = i_max: d(10, K₂) = 2, d(P,*) = diam/2 = 5.
  CHECK(phi_point(f, ab, 10) == doctest::Approx((2.0 * 5 + 3.0 * 2) / 7));
  CHECK_THROWS_AS(phi_point(f, ab, 11), StructuralError);
}

TEST_CASE("degenerate generic case raises a resolution error") {
  // Unstable family: point 8 lies in K₁ and on the boundary of K₂.
  const auto space = corpus::chain_space(11);
  const Filtration1D f(space, IndexSet({0, 1, 2, 3}),
                       {Subset::none(11), range(11, 0, 8), range(11, 0, 8), Subset::all(11)});
  AlphaBeta ab{f.index(), std::vector<std::uint32_t>(11, 1), std::vector<std::uint32_t>(11, 2)};
  try {
    (void)phi_point(f, ab, 8);
    FAIL("expected ResolutionError");
  } catch (const ResolutionError& e) {
    CHECK(e.point() == 8);
  }
}

TEST_CASE("synthesis refuses unstable input") {
  CHECK_THROWS_AS(alpha_beta(corpus::exastab_b(0.1)), RefusedError);
  try {
    (void)induce_1d(corpus::exastab_b(0.1));
    FAIL("expected RefusedError");
  } catch (const RefusedError& e) {
    REQUIRE_FALSE(e.report().passed());
    CHECK(e.report().violations[0].kind == ViolationKind::stability_b);
  }
}

TEST_CASE("round trip on the chain fixture and the sandwich bound") {
  const auto f = chain_filtration();
  const auto phi = induce_1d(f);
  CHECK(verify_induction(f, phi).passed());
  const auto ab = alpha_beta(f);
  for (std::size_t p = 0; p < 11; ++p) {
    CHECK(ab.alpha(p) <= phi(p));
    CHECK(phi(p) <= ab.beta(p));
    if (ab.alpha_pos[p] > 0 && ab.alpha_pos[p] < ab.beta_pos[p]) CHECK(phi(p) > ab.alpha(p));
  }
}

TEST_CASE("round trip of sub-levels of a known function, not pointwise equal") {
  const auto space = corpus::chain_space(41, 0.05);
  std::vector<double> g;
  for (const auto& p : space->points()) g.push_back(p[0] * p[0]);
  const std::vector<double> levels{-1, 0.5, 1.0, 2.0, 4.0};
  std::vector<Subset> sets;
  for (double t : levels) {
    Subset s = Subset::none(41);
    for (std::size_t p = 0; p < 41; ++p)
      if (g[p] <= t) s.insert(p);
    sets.push_back(s);
  }
  const Filtration1D f(space, IndexSet(levels), sets);
  const auto phi = induce_1d(f);
  CHECK(verify_induction(f, phi).passed());
  bool differs = false;
  for (std::size_t p = 0; p < 41; ++p) differs |= phi(p) != g[p];
  CHECK(differs);
}

TEST_CASE("repeated empty and full sets") {
  const auto space = corpus::chain_space(9);
  // K₁ = ∅ repeats the bottom set; K₃ = K repeats the top one.
  const Filtration1D f(space, IndexSet({0, 1, 2, 3, 4}),
                       {Subset::none(9), Subset::none(9), range(9, 3, 5), Subset::all(9), Subset::all(9)});
  const auto phi = induce_1d(f);
  CHECK(verify_induction(f, phi).passed());
}

TEST_CASE("proper filtration on a one-point space is degenerate") {
  const auto space = SampledSpace::from_matrix({0.0}, 1, 1.0);
  const Filtration1D f(space, IndexSet({0, 1, 2}), {Subset::none(1), Subset::none(1), Subset::all(1)});
  CHECK_THROWS_AS(induce_1d(f), DegenerateSpaceError);
}

TEST_CASE("sub-level sets") {
  const auto f = chain_filtration();
  const auto phi = induce_1d(f);
  const double top = 3, bottom = 0, mid = 2;
  CHECK(sublevel_set(f.space(), phi, std::span<const double>(&top, 1)).full());
  CHECK(sublevel_set(f.space(), phi, std::span<const double>(&bottom, 1)).empty());
  CHECK(sublevel_set(f.space(), phi, std::span<const double>(&mid, 1)) == f.at(2));
  const std::vector<double> two{1, 1};
  CHECK_THROWS_AS(sublevel_set(f.space(), phi, two), StructuralError);
}

TEST_CASE("verify_induction witnesses") {
  const auto f = chain_filtration();
  const FilteringFunction constant(1, std::vector<double>(11, 3.0));
  const auto report = verify_induction(f, constant);
  CHECK(report.violations.size() == 2);
  CHECK(report.violations[0].lower == std::vector<std::size_t>{1});
  CHECK(report.violations[1].lower == std::vector<std::size_t>{2});

  const auto phi = induce_1d(f);
  auto values = std::vector<double>(phi.values().begin(), phi.values().end());
  values[4] = 2.5;
  const auto perturbed = verify_induction(f, FilteringFunction(1, values));
  REQUIRE(perturbed.violations.size() == 1);
  CHECK(perturbed.violations[0].points == std::vector<std::uint32_t>{4});
}

TEST_CASE("induce_nd") {
  try {
    (void)induce_nd(corpus::exacomplete());
    FAIL("expected RefusedError");
  } catch (const RefusedError& e) {
    REQUIRE(e.report().violations.size() == 1);
    CHECK(format_position(e.report().violations[0].lower) == "(1,1)");
  }

  const auto space = corpus::random_space(9, 50, 2);
  const std::vector<Filtration1D> factors{corpus::random_stable_filtration(3, space, 4).filtration,
                                          corpus::random_stable_filtration(4, space, 5).filtration};
  const auto prod = product_filtration(factors);
  const auto phi = induce_nd(prod);
  CHECK(phi.dim() == 2);
  CHECK(verify_induction(prod, phi).passed());
  for (std::size_t j = 0; j < 2; ++j) CHECK(phi.component(j) == induce_1d(factors[j]));

  const std::vector<Filtration1D> one{factors[0]};
  CHECK(induce_nd(product_filtration(one)) == induce_1d(factors[0]));
}

TEST_CASE("lemma properties on random stable filtrations") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto space = corpus::random_space(seed, 30, 2);
    const auto f = corpus::random_stable_filtration(seed, space, 3 + seed % 5).filtration;
    const auto ab = alpha_beta(f);
    const std::size_t n = space->size();
    for (std::size_t p = 0; p < n; ++p) {
      CHECK(ab.alpha_pos[p] <= ab.beta_pos[p]);
      if (f.proper()) CHECK_FALSE((ab.alpha_pos[p] == 0 && ab.beta_pos[p] == f.index().last()));
      for (std::size_t q = 0; q < n; ++q) {
        if (ab.alpha_pos[p] < ab.alpha_pos[q]) CHECK(ab.beta_pos[p] <= ab.alpha_pos[q]);
        if (ab.beta_pos[p] < ab.beta_pos[q]) CHECK(ab.beta_pos[p] <= ab.alpha_pos[q]);
      }
    }
  }
}

TEST_CASE("discrete modulus") {
  const auto chain = corpus::chain_space(5);
  CHECK(discrete_modulus(*chain, FilteringFunction(1, std::vector<double>(5, 2.0))) == 0.0);
  const auto pair = corpus::chain_space(2);
  CHECK(discrete_modulus(*pair, FilteringFunction(1, {0.0, 1.0})) == 1.0);
  CHECK_THROWS_AS(discrete_modulus(*pair, FilteringFunction(2, {0, 1, 2, 3})), StructuralError);

  const auto coarse = corpus::smooth_chain(0.1);
  const auto fine = corpus::smooth_chain(0.05);
  CHECK(discrete_modulus(fine.space(), induce_1d(fine)) <= discrete_modulus(coarse.space(), induce_1d(coarse)));
}

TEST_CASE("function values") {
  CHECK_THROWS_AS(FilteringFunction(0, {}), StructuralError);
  CHECK_THROWS_AS(FilteringFunction(2, {1, 2, 3}), StructuralError);
  const FilteringFunction f(2, {1, 2, 3, 4});
  CHECK(f.point_count() == 2);
  CHECK(f(1, 0) == 3);
  CHECK(f.component(1) == FilteringFunction(1, {2, 4}));
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "filtforge/filtration.hpp"
#include "filtforge/parallel.hpp"
#include "filtforge/validation.hpp"

namespace filtforge {

/// Per-point α(P) = max{i : P ∉ int(K_i)} and β(P) = min{i : P ∈ K_i},
/// stored as positions into the index set.
struct AlphaBeta {
  IndexSet index;
  std::vector<std::uint32_t> alpha_pos;
  std::vector<std::uint32_t> beta_pos;

  double alpha(std::size_t p) const { return index[alpha_pos[p]]; }
  double beta(std::size_t p) const { return index[beta_pos[p]]; }
};

/// Real (dim 1) or vector (dim n) values, one entry per point.
class FilteringFunction {
 public:
  FilteringFunction() = default;
  FilteringFunction(std::size_t dim, std::vector<double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t point_count() const noexcept { return dim_ == 0 ? 0 : values_.size() / dim_; }
  std::span<const double> at(std::size_t p) const { return {values_.data() + p * dim_, dim_}; }
  double operator()(std::size_t p, std::size_t k = 0) const { return values_[p * dim_ + k]; }
  std::span<const double> values() const noexcept { return values_; }

  /// Component k as a 1-D function.
  FilteringFunction component(std::size_t k) const;

  bool operator==(const FilteringFunction&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

/// Refuses (RefusedError) unless nesting and finite stability hold.
AlphaBeta alpha_beta(const Filtration1D& f, Exec exec = Exec::parallel);

/// The four-case filtering value at one point. Throws ResolutionError when
/// the generic case sees both distances equal to zero.
double phi_point(const Filtration1D& f, const AlphaBeta& ab, std::size_t p);

/// `skip` evaluates the formula without running the hypothesis checks. The result is then only trustworthy after
/// verify_induction.
enum class Hypotheses { enforce, skip };

/// Filtering function whose sub-level sets reproduce f exactly.
FilteringFunction induce_1d(const Filtration1D& f, Exec exec = Exec::parallel,
                            Hypotheses hypotheses = Hypotheses::enforce);

/// Component j is induce_1d(axis_filtration(f, j)). Refuses incomplete or
/// unstable filtrations.
FilteringFunction induce_nd(const FiltrationND& f, Exec exec = Exec::parallel,
                            Hypotheses hypotheses = Hypotheses::enforce);

/// {P : φ(P) ⪯ i}, zero tolerance.
Subset sublevel_set(const SampledSpace& space, const FilteringFunction& phi,
                    std::span<const double> index);

ValidationReport verify_induction(const Filtration1D& f, const FilteringFunction& phi);
ValidationReport verify_induction(const FiltrationND& f, const FilteringFunction& phi);

/// max over neighboring pairs of |φ(P) − φ(Q)| (1-D φ).
double discrete_modulus(const SampledSpace& space, const FilteringFunction& phi);

}  // namespace filtforge

#include "filtforge/synthesis.hpp"

#include <cmath>
#include <string>

#include "filtforge/error.hpp"
#include "filtforge/kernels.hpp"

namespace filtforge {

FilteringFunction::FilteringFunction(std::size_t dim, std::vector<double> values)
    : dim_(dim), values_(std::move(values)) {
  if (dim_ == 0) throw StructuralError("filtering function dimension must be positive");
  if (values_.size() % dim_ != 0)
    throw StructuralError("value count " + std::to_string(values_.size()) +
                          " is not a multiple of the dimension " + std::to_string(dim_));
}

FilteringFunction FilteringFunction::component(std::size_t k) const {
  if (k >= dim_) throw StructuralError("component " + std::to_string(k) + " out of range");
  std::vector<double> out(point_count());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = (*this)(p, k);
  return FilteringFunction(1, std::move(out));
}

namespace {

std::vector<Subset> interiors_of(const Filtration1D& f) {
  std::vector<Subset> out;
  out.reserve(f.levels());
  for (const auto& s : f.sets()) out.push_back(interior(f.space(), s));
  return out;
}

std::vector<Subset> complements_of(std::span<const Subset> interiors) {
  std::vector<Subset> out;
  out.reserve(interiors.size());
  for (const auto& s : interiors) out.push_back(s.complement());
  return out;
}

AlphaBeta alpha_beta_from(const Filtration1D& f, std::span<const Subset> interiors, Exec exec) {
  auto pos = exec == Exec::parallel ? kernels::alpha_beta_omp(f.sets(), interiors)
                                    : kernels::alpha_beta_serial(f.sets(), interiors);
  return AlphaBeta{f.index(), std::move(pos.alpha), std::move(pos.beta)};
}

void require_valid(const Filtration1D& f) {
  ValidationReport report = check_nesting(f);
  report.append(check_stability_finite(f));
  if (!report.passed()) {
    const auto& v = report.violations.front();
    throw RefusedError(std::string(to_string(v.kind)) + " violation between " +
                           format_position(v.lower) + " and " + format_position(v.upper),
                       std::move(report));
  }
}

kernels::PhiInputs phi_inputs(const Filtration1D& f, const AlphaBeta& ab,
                              std::span<const Subset> complements, double star) {
  return kernels::PhiInputs{&f.space(), f.index().values(), f.sets(), complements,
                            ab.alpha_pos,  ab.beta_pos,       star};
}

void check_alpha_beta(const Filtration1D& f, const AlphaBeta& ab) {
  if (ab.index != f.index() || ab.alpha_pos.size() != f.space().size() ||
      ab.beta_pos.size() != f.space().size())
    throw StructuralError("α/β table does not belong to this filtration");
}

}  // namespace

AlphaBeta alpha_beta(const Filtration1D& f, Exec exec) {
  require_valid(f);
  const auto interiors = interiors_of(f);
  return alpha_beta_from(f, interiors, exec);
}

double phi_point(const Filtration1D& f, const AlphaBeta& ab, std::size_t p) {
  check_alpha_beta(f, ab);
  if (p >= f.space().size()) throw StructuralError("point " + std::to_string(p) + " out of range");
  if (!f.proper()) return f.index().max();
  const auto complements = complements_of(interiors_of(f));
  const double value = kernels::phi_value(phi_inputs(f, ab, complements, star_distance(f.space())), p);
  if (std::isnan(value))
    throw ResolutionError("point " + std::to_string(p) +
                              " lies at distance 0 from both bounding sets; resolution too coarse",
                          p);
  return value;
}

FilteringFunction induce_1d(const Filtration1D& f, Exec exec, Hypotheses hypotheses) {
  if (hypotheses == Hypotheses::enforce) require_valid(f);
  const std::size_t n = f.space().size();
  if (!f.proper()) return FilteringFunction(1, std::vector<double>(n, f.index().max()));

  const auto interiors = interiors_of(f);
  const auto ab = alpha_beta_from(f, interiors, exec);
  const auto complements = complements_of(interiors);
  const auto in = phi_inputs(f, ab, complements, star_distance(f.space()));
  std::vector<double> values(n);
  const std::size_t bad = exec == Exec::parallel ? kernels::phi_omp(in, values)
                                                 : kernels::phi_serial(in, values);
  if (bad != SIZE_MAX)
    throw ResolutionError("point " + std::to_string(bad) +
                              " lies at distance 0 from both bounding sets; resolution too coarse",
                          bad);
  return FilteringFunction(1, std::move(values));
}

FilteringFunction induce_nd(const FiltrationND& f, Exec exec, Hypotheses hypotheses) {
  ValidationReport report;
  if (hypotheses == Hypotheses::enforce) {
    report = check_nesting(f);
    report.append(check_stability_nd(f));
    report.append(check_completeness(f));
  }
  if (!report.passed()) {
    const auto& v = report.violations.front();
    std::string what = std::string(to_string(v.kind)) + " violation at " + format_position(v.lower);
    if (v.axis) what += " on axis " + std::to_string(*v.axis);
    throw RefusedError(what, std::move(report));
  }

  const std::size_t n = f.space().size();
  const std::size_t dims = f.dims();
  std::vector<double> values(n * dims);
  for (std::size_t j = 0; j < dims; ++j) {
    const auto component = induce_1d(axis_filtration(f, j), exec, hypotheses);
    for (std::size_t p = 0; p < n; ++p) values[p * dims + j] = component(p);
  }
  return FilteringFunction(dims, std::move(values));
}

Subset sublevel_set(const SampledSpace& space, const FilteringFunction& phi,
                    std::span<const double> index) {
  if (phi.point_count() != space.size())
    throw StructuralError("function has " + std::to_string(phi.point_count()) +
                          " points, space has " + std::to_string(space.size()));
  if (index.size() != phi.dim())
    throw StructuralError("index has " + std::to_string(index.size()) +
                          " coordinates, function has dimension " + std::to_string(phi.dim()));
  Subset out = Subset::none(space.size());
  for (std::size_t p = 0; p < space.size(); ++p) {
    bool below = true;
    for (std::size_t k = 0; k < index.size() && below; ++k) below = phi(p, k) <= index[k];
    if (below) out.insert(p);
  }
  return out;
}

namespace {
void compare_cell(const Subset& expected, const Subset& actual, std::vector<std::size_t> pos,
                  ValidationReport& report) {
  if (expected == actual) return;
  Violation v;
  v.kind = ViolationKind::induction;
  v.lower = pos;
  v.upper = std::move(pos);
  v.points = ((expected - actual) | (actual - expected)).ids();
  v.detail = "sub-level set differs from the filtration set";
  report.violations.push_back(std::move(v));
}
}  // namespace

ValidationReport verify_induction(const Filtration1D& f, const FilteringFunction& phi) {
  ValidationReport report;
  for (std::size_t k = 0; k < f.levels(); ++k) {
    const double i = f.index()[k];
    compare_cell(f.at(k), sublevel_set(f.space(), phi, std::span<const double>(&i, 1)), {k}, report);
  }
  return report;
}

ValidationReport verify_induction(const FiltrationND& f, const FilteringFunction& phi) {
  ValidationReport report;
  const auto& shape = f.shape();
  std::vector<double> index(f.dims());
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    auto pos = shape.position(c);
    for (std::size_t j = 0; j < f.dims(); ++j) index[j] = f.axis(j)[pos[j]];
    compare_cell(f.at_flat(c), sublevel_set(f.space(), phi, index), std::move(pos), report);
  }
  return report;
}

double discrete_modulus(const SampledSpace& space, const FilteringFunction& phi) {
  if (phi.dim() != 1) throw StructuralError("discrete modulus needs a real-valued function");
  if (phi.point_count() != space.size()) throw StructuralError("function and space sizes differ");
  double worst = 0.0;
  for (std::size_t p = 0; p < space.size(); ++p)
    for (auto q : space.neighbors(p)) worst = std::max(worst, std::abs(phi(p) - phi(q)));
  return worst;
}

}  // namespace filtforge

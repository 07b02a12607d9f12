#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "filtforge/comparison.hpp"
#include "filtforge/filtration.hpp"
#include "filtforge/synthesis.hpp"
#include "filtforge/validation.hpp"

namespace filtforge::io {

using nlohmann::json;

/// A filtration file holds either a 1-D or an n-D family; n = 1 files load
/// as Filtration1D as well.
struct LoadedFiltration {
  FiltrationND nd;
  std::filesystem::path space_path;  ///< empty when the space was inline
};

json space_to_json(const SampledSpace& space);
SpacePtr space_from_json(const json& j);
SpacePtr load_space(const std::filesystem::path& path);
void save_space(const std::filesystem::path& path, const SampledSpace& space);

/// `space_ref` is either a path (stored as given) or null for inline.
json filtration_to_json(const FiltrationND& f, const json& space_ref);
json filtration_to_json(const Filtration1D& f, const json& space_ref);
LoadedFiltration load_filtration(const std::filesystem::path& path);
FiltrationND filtration_from_json(const json& j, const std::filesystem::path& base_dir);

Filtration1D as_1d(const FiltrationND& f);
FiltrationND as_nd(const Filtration1D& f);

json function_to_json(const FilteringFunction& phi);
FilteringFunction function_from_json(const json& j);
FilteringFunction load_function(const std::filesystem::path& path);
void save_function(const std::filesystem::path& path, const FilteringFunction& phi);

json diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const json& j);

json report_to_json(const ValidationReport& report);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace filtforge::io

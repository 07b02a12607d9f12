#include "filtforge/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "filtforge/error.hpp"

namespace filtforge::io {

namespace fs = std::filesystem;

namespace {

template <class T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + " field \"" + key + "\": " + e.what());
  }
}

bool present(const json& j, const char* key) { return j.contains(key) && !j.at(key).is_null(); }

std::vector<std::size_t> parse_key(const std::string& key, std::size_t dims) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')')
    throw ParseError("set key \"" + key + "\" is not of the form (i1,...,in)");
  std::vector<std::size_t> pos;
  std::stringstream ss(key.substr(1, key.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(part, &used);
    } catch (const std::exception&) {
      throw ParseError("set key \"" + key + "\" has a non-integer coordinate");
    }
    if (used != part.size() || part.empty() || part.front() == '-')
      throw ParseError("set key \"" + key + "\" has a non-integer coordinate");
    pos.push_back(static_cast<std::size_t>(v));
  }
  if (pos.size() != dims)
    throw ParseError("set key \"" + key + "\" has " + std::to_string(pos.size()) +
                     " coordinates, expected " + std::to_string(dims));
  return pos;
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::geodesic: return "geodesic";
    case Metric::explicit_matrix: return "explicit";
  }
  return "explicit";
}

}  // namespace

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

json space_to_json(const SampledSpace& space) {
  json j;
  j["metric"] = metric_name(space.metric());
  j["resolution"] = space.resolution();
  if (space.metric() == Metric::explicit_matrix) {
    const std::size_t n = space.size();
    json rows = json::array();
    for (std::size_t p = 0; p < n; ++p)
      rows.push_back(std::vector<double>(space.matrix().begin() + static_cast<std::ptrdiff_t>(p * n),
                                         space.matrix().begin() + static_cast<std::ptrdiff_t>((p + 1) * n)));
    j["dist"] = std::move(rows);
  } else {
    j["points"] = space.points();
  }
  if (space.connected()) j["connected"] = true;
  return j;
}

SpacePtr space_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("space must be a JSON object");
  const auto metric = field<std::string>(j, "metric", "space");
  const auto resolution = field<double>(j, "resolution", "space");
  const bool has_points = present(j, "points");
  const bool has_dist = present(j, "dist");
  if (has_points == has_dist) throw ParseError("space needs exactly one of \"points\" and \"dist\"");
  SpaceOptions options;
  if (j.contains("connected")) options.require_connected = field<bool>(j, "connected", "space");

  if (has_dist) {
    if (metric != "explicit") throw ParseError("a distance matrix needs metric \"explicit\"");
    const auto rows = field<std::vector<std::vector<double>>>(j, "dist", "space");
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
      if (r.size() != n) throw ParseError("distance matrix is not square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return SampledSpace::from_matrix(std::move(flat), n, resolution, options);
  }
  Metric m;
  if (metric == "euclidean")
    m = Metric::euclidean;
  else if (metric == "geodesic")
    m = Metric::geodesic;
  else
    throw ParseError("coordinates need metric \"euclidean\" or \"geodesic\", got \"" + metric + "\"");
  return SampledSpace::from_points(field<std::vector<std::vector<double>>>(j, "points", "space"),
                                   resolution, m, options);
}

SpacePtr load_space(const fs::path& path) { return space_from_json(read_json(path)); }

void save_space(const fs::path& path, const SampledSpace& space) { write_json(path, space_to_json(space)); }

json filtration_to_json(const FiltrationND& f, const json& space_ref) {
  json j;
  j["space"] = space_ref.is_null() ? space_to_json(f.space()) : space_ref;
  json axes = json::array();
  for (const auto& a : f.axes()) axes.push_back(std::vector<double>(a.values().begin(), a.values().end()));
  j["axes"] = std::move(axes);
  json sets = json::object();
  for (std::size_t c = 0; c < f.shape().cells(); ++c)
    sets[format_position(f.shape().position(c))] = f.at_flat(c).ids();
  j["sets"] = std::move(sets);
  return j;
}

json filtration_to_json(const Filtration1D& f, const json& space_ref) {
  return filtration_to_json(as_nd(f), space_ref);
}

FiltrationND filtration_from_json(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ParseError("filtration must be a JSON object");
  if (!j.contains("space")) throw ParseError("filtration is missing \"space\"");
  const auto& sj = j.at("space");
  SpacePtr space;
  if (sj.is_string())
    space = load_space(base_dir / sj.get<std::string>());
  else
    space = space_from_json(sj);

  std::vector<IndexSet> axes;
  for (auto& values : field<std::vector<std::vector<double>>>(j, "axes", "filtration"))
    axes.emplace_back(std::move(values));
  if (axes.empty()) throw ParseError("filtration needs at least one axis");

  std::vector<std::size_t> extents;
  for (const auto& a : axes) extents.push_back(a.size());
  const GridShape shape(extents);

  const auto raw = field<std::map<std::string, std::vector<std::uint32_t>>>(j, "sets", "filtration");
  std::vector<std::optional<Subset>> cells(shape.cells());
  for (const auto& [key, ids] : raw) {
    const auto pos = parse_key(key, axes.size());
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (pos[k] >= extents[k]) throw ParseError("set key " + key + " is outside the index grid");
    const std::size_t flat = shape.flat(pos);
    if (cells[flat]) throw ParseError("set key " + key + " appears twice");
    for (auto id : ids)
      if (id >= space->size())
        throw ParseError("set " + key + " names point " + std::to_string(id) + " but the space has " +
                         std::to_string(space->size()));
    cells[flat] = Subset::of(space->size(), ids);
  }
  std::vector<Subset> sets;
  sets.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c]) throw ParseError("grid cell " + format_position(shape.position(c)) + " has no set");
    sets.push_back(std::move(*cells[c]));
  }
  return FiltrationND(space, std::move(axes), std::move(sets));
}

LoadedFiltration load_filtration(const fs::path& path) {
  const json j = read_json(path);
  fs::path space_path;
  if (j.is_object() && j.contains("space") && j.at("space").is_string())
    space_path = path.parent_path() / j.at("space").get<std::string>();
  return {filtration_from_json(j, path.parent_path()), space_path};
}

Filtration1D as_1d(const FiltrationND& f) {
  if (f.dims() != 1) throw StructuralError("expected a 1-D filtration, got " + std::to_string(f.dims()) + " axes");
  return Filtration1D(f.space_ptr(), f.axis(0), std::vector<Subset>(f.sets().begin(), f.sets().end()));
}

FiltrationND as_nd(const Filtration1D& f) {
  return FiltrationND(f.space_ptr(), {f.index()}, std::vector<Subset>(f.sets().begin(), f.sets().end()));
}

json function_to_json(const FilteringFunction& phi) {
  json values = json::array();
  for (std::size_t p = 0; p < phi.point_count(); ++p) {
    const auto v = phi.at(p);
    values.push_back(std::vector<double>(v.begin(), v.end()));
  }
  return json{{"dim", phi.dim()}, {"values", std::move(values)}};
}

FilteringFunction function_from_json(const json& j) {
  const auto dim = field<std::size_t>(j, "dim", "function");
  const auto rows = field<std::vector<std::vector<double>>>(j, "values", "function");
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw ParseError("function value row has the wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  if (dim == 0) throw ParseError("function dimension must be positive");
  return FilteringFunction(dim, std::move(flat));
}

FilteringFunction load_function(const fs::path& path) { return function_from_json(read_json(path)); }

void save_function(const fs::path& path, const FilteringFunction& phi) { write_json(path, function_to_json(phi)); }

json diagram_to_json(const PersistenceDiagram& d) {
  json pairs = json::array();
  for (const auto& p : d.pairs) pairs.push_back({p.birth, p.death});
  return json{{"degree", d.degree}, {"pairs", std::move(pairs)}, {"essential", d.essential}};
}

PersistenceDiagram diagram_from_json(const json& j) {
  PersistenceDiagram d;
  d.degree = field<int>(j, "degree", "diagram");
  for (const auto& p : field<std::vector<std::array<double, 2>>>(j, "pairs", "diagram")) {
    if (!(p[0] < p[1])) throw ParseError("diagram pair needs birth < death");
    d.pairs.push_back({p[0], p[1]});
  }
  d.essential = field<std::vector<double>>(j, "essential", "diagram");
  d.normalize();
  return d;
}

json report_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json e{{"kind", std::string(to_string(v.kind))},
           {"lower", v.lower},
           {"upper", v.upper},
           {"points", v.points},
           {"detail", v.detail}};
    if (v.axis) e["axis"] = *v.axis;
    if (!v.measured.empty()) e["measured"] = v.measured;
    violations.push_back(std::move(e));
  }
  return json{{"passed", report.passed()}, {"violations", std::move(violations)}};
}

}  // namespace filtforge::io

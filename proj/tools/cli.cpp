#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "filtforge/comparison.hpp"
#include "filtforge/corpus.hpp"
#include "filtforge/error.hpp"
#include "filtforge/io.hpp"
#include "filtforge/parallel.hpp"
#include "filtforge/synthesis.hpp"

namespace filtforge::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

constexpr std::size_t kShownWitnesses = 8;

struct Options {
  bool json = false;
  bool strict_pairs = false;
  bool force = false;
  bool assert_separation = false;
  double threshold = 0.0;
  std::string filtration;
  std::string output;
  std::string fn_a, fn_b, space;
  std::string fixture;
  std::optional<double> resolution;
  std::optional<double> step;
  std::uint64_t seed = 0;
  std::size_t samples = 256;
  std::size_t points = 50;
  std::size_t dim = 2;
  std::size_t levels = 6;
};

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& v : report.violations) {
    out << "  " << to_string(v.kind);
    if (v.axis) out << " axis " << *v.axis;
    if (v.lower == v.upper)
      out << " at " << format_position(v.lower);
    else
      out << " " << format_position(v.lower) << " -> " << format_position(v.upper);
    out << ": " << v.points.size() << " witness point(s)";
    if (!v.points.empty()) {
      out << " [";
      for (std::size_t k = 0; k < v.points.size() && k < kShownWitnesses; ++k)
        out << (k ? " " : "") << v.points[k];
      if (v.points.size() > kShownWitnesses) out << " ...";
      out << "]";
    }
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
}

ValidationReport validate_filtration(const FiltrationND& f, const CheckOptions& checks) {
  if (f.dims() == 1) {
    const auto f1 = io::as_1d(f);
    ValidationReport report = check_nesting(f1, checks);
    report.append(check_stability_finite(f1, checks));
    return report;
  }
  ValidationReport report = check_nesting(f, checks);
  report.append(check_stability_nd(f, checks));
  report.append(check_completeness(f));
  return report;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto loaded = io::load_filtration(o.filtration);
  const auto report = validate_filtration(loaded.nd, CheckOptions{o.strict_pairs});
  if (o.json) {
    out << io::report_to_json(report).dump(1) << "\n";
  } else {
    out << "filtration: " << loaded.nd.dims() << "-D, " << loaded.nd.shape().cells() << " sets over "
        << loaded.nd.space().size() << " points\n";
    print_report(out, report);
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kExitPass : kExitFailure;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  const auto loaded = io::load_filtration(o.filtration);
  const auto& f = loaded.nd;
  json summary;
  ValidationReport validation;
  if (!o.force) {
    validation = validate_filtration(f, CheckOptions{o.strict_pairs});
    if (!validation.passed()) {
      const auto& v = validation.violations.front();
      const std::string reason = std::string(to_string(v.kind)) + " violation";
      if (o.json) {
        summary["validation"] = io::report_to_json(validation);
        summary["refused"] = reason;
        out << summary.dump(1) << "\n";
      } else {
        print_report(out, validation);
        out << "refused: " << reason << "\n";
      }
      return kExitFailure;
    }
  }

  const auto hypotheses = o.force ? Hypotheses::skip : Hypotheses::enforce;
  const FilteringFunction phi = f.dims() == 1 ? induce_1d(io::as_1d(f), Exec::parallel, hypotheses)
                                              : induce_nd(f, Exec::parallel, hypotheses);
  const auto induction = verify_induction(f, phi);
  if (!o.output.empty()) io::save_function(o.output, phi);

  if (o.json) {
    summary["validation"] = o.force ? json("skipped") : io::report_to_json(validation);
    summary["induction"] = io::report_to_json(induction);
    summary["output"] = o.output;
    out << summary.dump(1) << "\n";
  } else {
    out << "validation: " << (o.force ? "skipped (--force)" : "passed") << "\n";
    print_report(out, induction);
    out << "induction: " << (induction.passed() ? "exact" : "FAILED") << " over " << f.shape().cells()
        << " index cells\n";
    if (!o.output.empty()) out << "wrote " << o.output << "\n";
  }
  return induction.passed() ? kExitPass : kExitFailure;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto space = io::load_space(o.space);
  const auto a = io::load_function(o.fn_a);
  const auto b = io::load_function(o.fn_b);
  if (a.point_count() != space->size() || b.point_count() != space->size())
    throw StructuralError("functions and space have different point counts");

  json result;
  std::vector<std::string> notes;
  result["linf"] = linf_distance(a, b);
  std::optional<double> pseudo, deg0, deg1;
  if (a.dim() == 1 && b.dim() == 1) {
    deg0 = bottleneck(sublevel_pd0(*space, a), sublevel_pd0(*space, b));
    result["bottleneck_deg0"] = *deg0;
    try {
      pseudo = pseudo_distance_cycle(*space, a, b);
      deg1 = bottleneck(essential_h1_cycle(*space, a), essential_h1_cycle(*space, b));
      result["pseudo"] = *pseudo;
      result["bottleneck_deg1"] = *deg1;
    } catch (const UnsupportedTopologyError& e) {
      notes.push_back(std::string("unsupported topology: ") + e.what() +
                      "; pseudo and bottleneck_deg1 omitted");
    }
  } else {
    notes.push_back("vector-valued functions: only linf is reported");
  }
  if (!notes.empty()) result["notes"] = notes;

  bool ok = true;
  if (o.assert_separation) {
    const double worst = std::max(deg0.value_or(kInfinity), deg1.value_or(0.0));
    ok = deg0 && pseudo && worst == 0.0 && *pseudo > o.threshold;
    result["separation"] = ok;
  }

  if (o.json) {
    out << result.dump(1) << "\n";
  } else {
    out.precision(17);
    for (const char* key : {"linf", "pseudo", "bottleneck_deg0", "bottleneck_deg1"})
      if (result.contains(key)) out << key << ": " << result[key].get<double>() << "\n";
    for (const auto& n : notes) out << "note: " << n << "\n";
    if (o.assert_separation) out << "separation: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitPass : kExitFailure;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  const fs::path dir = o.output.empty() ? fs::path(".") : fs::path(o.output);
  fs::create_directories(dir);
  std::vector<fs::path> written;
  auto save_space = [&](const SampledSpace& s) {
    io::save_space(dir / "space.json", s);
    written.push_back(dir / "space.json");
  };
  auto save_filtration = [&](const auto& f, const std::string& name) {
    io::write_json(dir / name, io::filtration_to_json(f, json("space.json")));
    written.push_back(dir / name);
  };

  if (o.fixture == "exastab-a") {
    const auto f = corpus::exastab_a(o.resolution.value_or(0.05), o.step.value_or(0.1));
    save_space(f.space());
    save_filtration(f, "filtration.json");
  } else if (o.fixture == "exastab-b") {
    const auto f = corpus::exastab_b(o.resolution.value_or(0.1));
    save_space(f.space());
    save_filtration(f, "filtration.json");
  } else if (o.fixture == "exacomplete") {
    const auto f = corpus::exacomplete(o.resolution.value_or(0.25));
    save_space(f.space());
    save_filtration(f, "filtration.json");
  } else if (o.fixture == "circle-pair") {
    const auto pair = corpus::circle_pair(o.samples);
    save_space(pair.a.space());
    save_filtration(pair.a, "filtration_a.json");
    save_filtration(pair.b, "filtration_b.json");
  } else if (o.fixture == "smooth-chain") {
    const auto f = corpus::smooth_chain(o.resolution.value_or(0.05));
    save_space(f.space());
    save_filtration(f, "filtration.json");
  } else if (o.fixture == "random") {
    const auto space = corpus::random_space(o.seed, o.points, o.dim);
    const auto r = corpus::random_stable_filtration(o.seed, space, o.levels);
    save_space(*space);
    save_filtration(r.filtration, "filtration.json");
  }
  if (o.json) {
    json files = json::array();
    for (const auto& p : written) files.push_back(p.string());
    out << json{{"fixture", o.fixture}, {"files", files}}.dump(1) << "\n";
  } else {
    for (const auto& p : written) out << "wrote " << p.string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  Options o;
  CLI::App app{"Validate, synthesize and compare filtrations of sampled metric spaces", "filtforge"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check nesting, stability and completeness");
  validate->add_option("filtration", o.filtration, "Filtration file")->required();
  validate->add_flag("--json", o.json, "Emit the report as JSON");
  validate->add_flag("--strict-pairs", o.strict_pairs, "Check every ordered index pair");

  auto* synthesize = app.add_subcommand("synthesize", "Build a filtering function and verify it");
  synthesize->add_option("filtration", o.filtration, "Filtration file")->required();
  synthesize->add_option("-o,--output", o.output, "Function file to write");
  synthesize->add_flag("--json", o.json, "Emit the summary as JSON");
  synthesize->add_flag("--force", o.force, "Skip the hypothesis checks (verification still runs)");
  synthesize->add_flag("--strict-pairs", o.strict_pairs, "Check every ordered index pair");

  auto* compare = app.add_subcommand("compare", "Distances between two filtering functions");
  compare->add_option("function_a", o.fn_a, "First function file")->required();
  compare->add_option("function_b", o.fn_b, "Second function file")->required();
  compare->add_option("space", o.space, "Space file")->required();
  compare->add_flag("--json", o.json, "Emit the metrics as JSON");
  compare->add_flag("--assert-separation", o.assert_separation,
                    "Exit 1 unless every bottleneck distance is 0 and pseudo exceeds the threshold");
  compare->add_option("--threshold", o.threshold, "Separation threshold for pseudo");

  auto* corpus_cmd = app.add_subcommand("corpus", "Write a fixture to interchange files");
  corpus_cmd->add_option("name", o.fixture, "Fixture name")
      ->required()
      ->check(CLI::IsMember({"exastab-a", "exastab-b", "exacomplete", "circle-pair", "smooth-chain", "random"}));
  corpus_cmd->add_option("-o,--output", o.output, "Output directory");
  corpus_cmd->add_flag("--json", o.json, "List written files as JSON");
  corpus_cmd->add_option("--resolution", o.resolution, "Sample spacing ε");
  corpus_cmd->add_option("--step", o.step, "Index step (exastab-a)");
  corpus_cmd->add_option("--seed", o.seed, "Seed (random)");
  corpus_cmd->add_option("--samples", o.samples, "Circle samples (circle-pair)");
  corpus_cmd->add_option("--points", o.points, "Point count (random)");
  corpus_cmd->add_option("--dim", o.dim, "Ambient dimension (random)");
  corpus_cmd->add_option("--levels", o.levels, "Index count (random)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (synthesize->parsed()) return cmd_synthesize(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    return cmd_corpus(o, out);
  } catch (const RefusedError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ResolutionError& e) {
    err << "resolution error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const DegenerateSpaceError& e) {
    err << "degenerate space: " << e.what() << "\n";
    return kExitFailure;
  } catch (const UnsupportedTopologyError& e) {
    err << "unsupported topology: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FixtureError& e) {
    err << "fixture error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "file error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace filtforge::cli

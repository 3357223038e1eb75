// Command-line driver: file verification, exact chromatic numbers, critical
// subconfiguration extraction, randomized configuration search, neighbor
// bounds, periodic colorings, and format conversion.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccg/bounds.hpp"
#include "ccg/budget.hpp"
#include "ccg/chroma.hpp"
#include "ccg/contact_graph.hpp"
#include "ccg/formats.hpp"
#include "ccg/geometry.hpp"
#include "ccg/graph.hpp"
#include "ccg/periodic.hpp"
#include "ccg/search.hpp"

namespace {

using namespace ccg;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

i64 parse_int(std::string_view token, const char* what) {
  i64 value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw UsageError(std::string("invalid ") + what + ": '" +
                     std::string(token) + "'");
  }
  return value;
}

Vec3 parse_triple(const std::string& text, const char* what) {
  Vec3 v;
  std::size_t start = 0;
  for (int axis = 0; axis < 3; ++axis) {
    std::size_t comma = text.find(',', start);
    bool last = axis == 2;
    if (last != (comma == std::string::npos)) {
      throw UsageError(std::string(what) +
                       " must be three comma-separated integers, got '" +
                       text + "'");
    }
    std::size_t end = last ? text.size() : comma;
    v[axis] = parse_int(std::string_view(text).substr(start, end - start),
                        what);
    start = end + 1;
  }
  return v;
}

ExplodeSpec parse_explode(const std::string& text) {
  std::size_t colon = text.find(':');
  std::string axis_part = text.substr(0, colon);
  ExplodeSpec spec;
  if (axis_part == "x") {
    spec.axis = 0;
  } else if (axis_part == "y") {
    spec.axis = 1;
  } else if (axis_part == "z") {
    spec.axis = 2;
  } else {
    throw UsageError("explode axis must be x, y or z, got '" + text + "'");
  }
  if (colon != std::string::npos) {
    spec.gap = parse_int(std::string_view(text).substr(colon + 1),
                         "explode gap");
    if (spec.gap < 1) throw UsageError("explode gap must be >= 1");
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read file: " + path);
  return ss.str();
}

std::string freedom_name(Freedom f) {
  return "CC" + std::to_string(static_cast<int>(f));
}

std::string cuboid_str(const Cuboid& c) {
  std::ostringstream ss;
  ss << "[" << c.lo(0) << "," << c.hi(0) << "]x[" << c.lo(1) << ","
     << c.hi(1) << "]x[" << c.lo(2) << "," << c.hi(2) << "]";
  return ss.str();
}

// Shared flags for subcommands that read a configuration file.
struct InputOpts {
  std::string file;
  std::string dims_text;
  int freedom_level = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "configuration file (JSON or tuple list)")
        ->required();
    cmd->add_option("--dims", dims_text,
                    "side lengths a,b,c (required for tuple-list files)");
    cmd->add_option("--freedom", freedom_level,
                    "orientation freedom: 1 translates, 2 also swaps the "
                    "horizontal sides, 3 all permutations")
        ->check(CLI::Range(1, 3));
  }

  ConfigDocument load() const {
    std::optional<Vec3> dims;
    if (!dims_text.empty()) dims = parse_triple(dims_text, "dims");
    std::optional<Freedom> freedom;
    if (freedom_level != 0) freedom = freedom_from_int(freedom_level);
    return parse_document(read_file(file), dims, freedom);
  }
};

struct BudgetOpt {
  double seconds = -1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--time-limit", seconds,
                    "seconds per solver decision (0 = unlimited; default "
                    "from CCG_TIME_LIMIT or 60)");
  }

  Budget get() const { return seconds < 0 ? default_budget() : Budget{seconds}; }
};

void print_warnings(const ConfigDocument& doc) {
  for (const auto& w : doc.warnings) std::cout << "warning: " << w << "\n";
}

int run_verify(const InputOpts& in, bool strict) {
  ConfigDocument doc = in.load();
  print_warnings(doc);
  std::cout << "cuboids: " << doc.cuboids.size() << "  dims: "
            << to_string(doc.dims) << "  freedom: "
            << freedom_name(doc.freedom) << "\n";

  Configuration cfg = doc.to_configuration();
  ValidationReport report = validate_configuration(cfg);
  if (!report.ok()) {
    std::cout << "invalid: " << report.violation->message << "\n";
    return kExitFail;
  }
  std::cout << "configuration valid\n";

  auto coloring = doc.stored_coloring();
  if (!coloring) {
    bool any = false;
    for (const auto& c : doc.cuboids) any = any || c.color.has_value();
    std::cout << (any ? "coloring incomplete, not checked\n"
                      : "no stored coloring\n");
    if (any && strict) return kExitFail;
    return kExitOk;
  }

  Graph g = build_contact_graph_unchecked(cfg);
  if (auto bad = verify_coloring(g, *coloring)) {
    std::cout << "improper coloring: cuboids " << bad->first << " and "
              << bad->second << " touch and share color "
              << (*coloring)[static_cast<std::size_t>(bad->first)] << "\n";
    return kExitFail;
  }
  int used = color_count(*coloring);
  std::cout << "stored coloring proper, " << used << " colors\n";
  if (doc.declared_chi && used > *doc.declared_chi) {
    std::cout << (strict ? "error: " : "warning: ") << used
              << " colors exceed declared chromatic number "
              << *doc.declared_chi << "\n";
    if (strict) return kExitFail;
  }
  return kExitOk;
}

int run_chroma(const InputOpts& in, const BudgetOpt& budget, int assert_chi) {
  ConfigDocument doc = in.load();
  print_warnings(doc);
  Configuration cfg = doc.to_configuration();
  Graph g = build_contact_graph(cfg);
  std::cout << "vertices: " << g.n << "  edges: " << g.edge_count() << "\n";

  ChromaOutcome out = chromatic_number(g, budget.get());
  if (out.status == SolveStatus::timeout) {
    std::cout << "timeout: " << out.lower_bound << " <= chi <= "
              << out.upper_bound << "\n";
    return kExitFail;
  }
  std::cout << "chi = " << out.chi << "\n";
  if (assert_chi > 0 && out.chi != assert_chi) {
    std::cout << "assertion failed: expected chi = " << assert_chi << "\n";
    return kExitFail;
  }
  return kExitOk;
}

int run_critical(const InputOpts& in, const BudgetOpt& budget, int chi) {
  ConfigDocument doc = in.load();
  print_warnings(doc);
  Configuration cfg = doc.to_configuration();
  {
    ValidationReport report = validate_configuration(cfg);
    if (!report.ok()) {
      std::cout << "invalid: " << report.violation->message << "\n";
      return kExitFail;
    }
  }

  ReduceResult reduced = criticality_reduce(cfg, chi, budget.get());
  if (reduced.status == SolveStatus::timeout) {
    std::cout << "timeout during reduction (partial result discarded)\n";
    return kExitFail;
  }
  std::cerr << "critical at chi = " << chi << ": "
            << reduced.config.cuboids.size() << " of " << cfg.cuboids.size()
            << " cuboids kept\n";

  Graph g = build_contact_graph_unchecked(reduced.config);
  ChromaOutcome colored = chromatic_number(g, budget.get());
  std::optional<Coloring> witness;
  if (colored.status == SolveStatus::found) witness = colored.witness;
  std::cout << to_json(from_configuration(reduced.config, witness, chi));
  return kExitOk;
}

int run_search_cmd(const SearchParams& params, const std::string& out_dir) {
  SearchOutcome out = run_search(params);

  if (out_dir.empty()) {
    std::cout << out.trace;
  } else {
    std::filesystem::create_directories(out_dir);
    std::ofstream trace(out_dir + "/trace.txt", std::ios::binary);
    trace << out.trace;
    if (!trace) throw ParseError("cannot write " + out_dir + "/trace.txt");
  }

  if (out.found) {
    std::optional<Coloring> witness;
    Graph g = build_contact_graph_unchecked(out.configuration);
    ChromaOutcome colored = chromatic_number(g, params.chroma_budget);
    if (colored.status == SolveStatus::found) witness = colored.witness;
    std::string doc =
        to_json(from_configuration(out.configuration, witness, out.chi));
    if (!out_dir.empty()) {
      std::ofstream found(out_dir + "/found.json", std::ios::binary);
      found << doc;
      if (!found) throw ParseError("cannot write " + out_dir + "/found.json");
    } else {
      std::cout << doc;
    }
    std::cerr << "found: trial " << out.trial << ", "
              << out.configuration.cuboids.size()
              << " cuboids, chi = " << out.chi << "\n";
  } else {
    std::cerr << "not found after " << params.trials << " trial(s)"
              << (out.timed_out ? " (timed out)" : "") << "\n";
  }
  return out.found && !out.timed_out ? kExitOk : kExitFail;
}

int run_nbound(const Vec3& dims, Freedom freedom, bool per_center) {
  BoundResult result = n_bound(dims, freedom);
  if (per_center) {
    std::cout << "center\tcandidates\tindependent\n";
    for (const auto& ob : result.per_orientation) {
      std::cout << ob.center.x << "," << ob.center.y << "," << ob.center.z
                << "\t" << ob.candidate_count << "\t" << ob.value << "\n";
    }
  }
  std::cout << "a\tb\tc\tfreedom\tn\tchi_bound\n";
  std::cout << dims.x << "\t" << dims.y << "\t" << dims.z << "\t"
            << static_cast<int>(freedom) << "\t" << result.n_value << "\t"
            << result.n_value + 1 << "\n";
  return kExitOk;
}

int run_periodic_verify(const std::string& name,
                        const std::optional<Vec3>& dims) {
  PeriodicColoring pc = named_coloring(name, dims);
  std::cout << pc.name << ": dims " << to_string(pc.dims) << ", freedom "
            << freedom_name(pc.freedom) << ", period " << to_string(pc.period)
            << ", " << pc.k << " colors, " << pc.orients.size()
            << " orientation(s)\n";
  if (auto bad = verify_periodic(pc)) {
    std::cout << "improper: " << cuboid_str(bad->a) << " and "
              << cuboid_str(bad->b) << " touch and share color " << bad->color
              << "\n";
    return kExitFail;
  }
  std::cout << "proper\n";
  return kExitOk;
}

int run_perco(const Vec3& dims, Freedom freedom, const Vec3& period,
              int max_colors, const BudgetOpt& budget) {
  PercoResult result = perco(dims, freedom, period, max_colors, budget.get());
  std::cout << "torus vertices: " << result.vertices << "  edges: "
            << result.edge_count << "\n";
  if (result.infinite) {
    std::cout << "perco = infinity (a placement touches its own translate)\n";
    return max_colors > 0 ? kExitFail : kExitOk;
  }
  if (result.status == SolveStatus::timeout) {
    std::cout << "timeout: " << result.lower_bound << " <= perco <= "
              << result.upper_bound << "\n";
    return kExitFail;
  }
  std::cout << "perco = " << result.value << "\n";
  if (result.exceeded) {
    std::cout << "exceeds requested bound " << max_colors << "\n";
    return kExitFail;
  }
  return kExitOk;
}

int run_export(const InputOpts& in, const std::string& format_name,
               const std::string& explode_text) {
  ConfigDocument doc = in.load();
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
  std::optional<ExplodeSpec> explode;
  if (!explode_text.empty()) explode = parse_explode(explode_text);
  std::cout << export_document(doc, export_format_from_string(format_name),
                               explode);
  return kExitOk;
}

int run_clique(const InputOpts& in) {
  ConfigDocument doc = in.load();
  print_warnings(doc);
  Graph g = build_contact_graph(doc.to_configuration());
  std::vector<int> clique = max_clique(g);
  std::cout << "clique number: " << clique.size() << "\n";
  std::cout << "witness:";
  for (int v : clique) std::cout << " " << v;
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contact graphs of congruent cuboid configurations"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "validate a configuration file and its "
                                   "stored coloring");
  InputOpts verify_in;
  verify_in.attach(verify_cmd);
  bool strict = false;
  verify_cmd->add_flag("--strict", strict,
                       "fail on warnings that are normally tolerated");

  // chroma
  auto* chroma_cmd =
      app.add_subcommand("chroma", "exact chromatic number of a "
                                   "configuration's contact graph");
  InputOpts chroma_in;
  chroma_in.attach(chroma_cmd);
  BudgetOpt chroma_budget;
  chroma_budget.attach(chroma_cmd);
  int assert_chi = 0;
  chroma_cmd->add_option("--assert-chi", assert_chi,
                         "exit nonzero unless chi equals this value")
      ->check(CLI::PositiveNumber);

  // critical
  auto* critical_cmd = app.add_subcommand(
      "critical", "shrink a configuration to a chi-critical subconfiguration "
                  "(JSON on stdout)");
  InputOpts critical_in;
  critical_in.attach(critical_cmd);
  BudgetOpt critical_budget;
  critical_budget.attach(critical_cmd);
  int critical_chi = 0;
  critical_cmd->add_option("--chi", critical_chi,
                           "chromatic number of the input configuration")
      ->required()
      ->check(CLI::Range(2, 1'000'000));

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "randomized search for a configuration with a target "
                "chromatic number");
  std::string search_dims_text;
  search_cmd->add_option("--dims", search_dims_text, "side lengths a,b,c")
      ->required();
  int search_freedom = 1;
  search_cmd->add_option("--freedom", search_freedom, "orientation freedom")
      ->check(CLI::Range(1, 3));
  SearchParams params;
  search_cmd->add_option("--box", params.box,
                         "placement box side (default 4 * max side)");
  search_cmd->add_option("--target", params.chi0,
                         "target chromatic number (>= 2)")
      ->required();
  search_cmd->add_option("--n00", params.n00, "non-touching seed cuboids");
  search_cmd->add_option("--n0", params.n0, "cuboid cap per trial");
  search_cmd->add_option("--seed", params.seed, "base random seed");
  int algorithm = 2;
  search_cmd
      ->add_option("--algorithm", algorithm,
                   "1 = color-guided (recolors each step), 2 = "
                   "contact-guided (colors once at the end)")
      ->check(CLI::Range(1, 2));
  search_cmd->add_option("--trials", params.trials, "independent trials")
      ->check(CLI::PositiveNumber);
  std::string out_dir;
  search_cmd->add_option("--out", out_dir,
                         "directory for trace.txt and found.json (default: "
                         "trace and result on stdout)");
  BudgetOpt search_budget;
  search_budget.attach(search_cmd);

  // nbound
  auto* nbound_cmd = app.add_subcommand(
      "nbound", "neighbor bound: chi <= n + 1 for the whole class (TSV)");
  std::string nbound_dims_text;
  nbound_cmd->add_option("--dims", nbound_dims_text, "side lengths a,b,c")
      ->required();
  int nbound_freedom = 1;
  nbound_cmd->add_option("--freedom", nbound_freedom, "orientation freedom")
      ->check(CLI::Range(1, 3));
  bool per_center = false;
  nbound_cmd->add_flag("--per-center", per_center,
                       "also list each center orientation's value");

  // periodic
  auto* periodic_cmd =
      app.add_subcommand("periodic", "periodic colorings of all of space");
  periodic_cmd->require_subcommand(1);
  auto* pverify_cmd = periodic_cmd->add_subcommand(
      "verify", "check a named periodic coloring for properness");
  std::string pname;
  pverify_cmd->add_option("--name", pname, "coloring name (see 'list')")
      ->required();
  std::string pdims_text;
  pverify_cmd->add_option("--dims", pdims_text,
                          "side lengths a,b,c (formula colorings; stripe "
                          "fixtures read their free side from it)");
  auto* plist_cmd =
      periodic_cmd->add_subcommand("list", "list built-in coloring names");
  auto* perco_cmd = periodic_cmd->add_subcommand(
      "perco", "minimum palette size over colorings with a fixed period");
  std::string perco_dims_text;
  perco_cmd->add_option("--dims", perco_dims_text, "side lengths a,b,c")
      ->required();
  int perco_freedom = 1;
  perco_cmd->add_option("--freedom", perco_freedom, "orientation freedom")
      ->check(CLI::Range(1, 3));
  std::string period_text;
  perco_cmd->add_option("--period", period_text, "period X,Y,Z")->required();
  int max_colors = 0;
  perco_cmd->add_option("--max-colors", max_colors,
                        "exit nonzero when the value exceeds this bound");
  BudgetOpt perco_budget;
  perco_budget.attach(perco_cmd);

  // export
  auto* export_cmd = app.add_subcommand(
      "export", "convert a configuration file (result on stdout)");
  InputOpts export_in;
  export_in.attach(export_cmd);
  std::string format_name;
  export_cmd->add_option("--format", format_name, "json, maple or obj")
      ->required();
  std::string explode_text;
  export_cmd->add_option("--explode", explode_text,
                         "spread layers along an axis, e.g. z:4");

  // clique
  auto* clique_cmd = app.add_subcommand(
      "clique", "maximum clique of a configuration's contact graph");
  InputOpts clique_in;
  clique_in.attach(clique_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(verify_in, strict);
    if (*chroma_cmd) return run_chroma(chroma_in, chroma_budget, assert_chi);
    if (*critical_cmd)
      return run_critical(critical_in, critical_budget, critical_chi);
    if (*search_cmd) {
      params.dims = parse_triple(search_dims_text, "dims");
      params.freedom = freedom_from_int(search_freedom);
      params.algorithm = static_cast<SearchAlgorithm>(algorithm);
      params.chroma_budget = search_budget.get();
      return run_search_cmd(params, out_dir);
    }
    if (*nbound_cmd) {
      return run_nbound(parse_triple(nbound_dims_text, "dims"),
                        freedom_from_int(nbound_freedom), per_center);
    }
    if (*pverify_cmd) {
      std::optional<Vec3> dims;
      if (!pdims_text.empty()) dims = parse_triple(pdims_text, "dims");
      return run_periodic_verify(pname, dims);
    }
    if (*plist_cmd) {
      for (const auto& name : named_coloring_names()) std::cout << name << "\n";
      return kExitOk;
    }
    if (*perco_cmd) {
      return run_perco(parse_triple(perco_dims_text, "dims"),
                       freedom_from_int(perco_freedom),
                       parse_triple(period_text, "period"), max_colors,
                       perco_budget);
    }
    if (*export_cmd) return run_export(export_in, format_name, explode_text);
    if (*clique_cmd) return run_clique(clique_in);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cytk/census.hpp"
#include "cytk/report.hpp"
#include "cytk/surface.hpp"
#include "cytk/torusq.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kInvalidInput = 2;
constexpr int kTorusError = 3;

void emit(const cytk::Json& doc, bool json, std::string (*text)(const cytk::Json&)) {
  if (json)
    std::cout << cytk::dump(doc);
  else
    std::cout << text(doc);
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int run_analyze(const std::vector<std::string>& args, bool json) {
  if (args.size() != 6) {
    std::cerr << "error: expected a degree and five weights, got " << args.size() << " values\n";
    return kInvalidInput;
  }
  std::array<cytk::Integer, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stoll(args[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != args[i].size()) {
      std::cerr << "error: '" << args[i] << "' is not an integer\n";
      return kInvalidInput;
    }
  }
  try {
    const cytk::WeightSystem ws(v[0], {v[1], v[2], v[3], v[4], v[5]});
    emit(cytk::analyze_json(ws), json, cytk::analyze_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid weights: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}

struct CensusArgs {
  std::string input;
  std::string csv;
  bool json = false;
  std::size_t jobs = 1;
  std::string rows = "all";
};

int run_census(const CensusArgs& a) {
  cytk::CensusOptions options;
  options.jobs = a.jobs;
  if (a.rows == "not-smooth")
    options.rows = cytk::RowFilter::NotSmoothCodim2;
  else if (a.rows == "not-smooth-no-edge")
    options.rows = cytk::RowFilter::NotSmoothNoEdge;

  std::string input = a.input;
  if (input.empty()) {
    if (const char* env = std::getenv("CYTK_DATABASE")) input = env;
  }

  cytk::CensusResult result;
  if (input.empty() || input == "-") {
    result = cytk::run_census(std::cin, options);
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot read " << input << "\n";
      return kIoError;
    }
    result = cytk::run_census(in, options);
    if (in.bad()) {
      std::cerr << "error: read failure on " << input << "\n";
      return kIoError;
    }
  }

  const cytk::Json doc = cytk::census_json(result);
  if (!a.csv.empty() && !write_file(a.csv, cytk::verdicts_csv(result))) return kIoError;
  emit(doc, a.json, cytk::census_text);
  return kOk;
}

int run_surface(const std::string& text, bool json) {
  try {
    emit(cytk::surface_json(cytk::DuValMultiset::parse(text)), json, cytk::surface_text);
  } catch (const cytk::MultisetSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}

struct TorusArgs {
  std::string builtin;
  std::string file;
  bool list = false;
  std::size_t cap = cytk::kDefaultGroupCap;
  bool json = false;
};

int run_torus(const TorusArgs& a) {
  if (a.list) {
    emit(cytk::builtins_json(), a.json, cytk::builtins_text);
    return kOk;
  }
  try {
    std::string label;
    std::vector<cytk::AffineTorusMap> generators;
    const cytk::DuValMultiset* expected = nullptr;
    if (!a.builtin.empty()) {
      const cytk::BuiltinAction* b = cytk::find_builtin(a.builtin);
      if (!b) {
        std::cerr << "error: unknown built-in action '" << a.builtin << "' (see --list-builtins)\n";
        return kTorusError;
      }
      label = b->name;
      generators = b->generators;
      expected = &cytk::classitor_entries().at(static_cast<std::size_t>(b->entry - 1)).multiset;
    } else {
      std::ifstream in(a.file);
      if (!in) {
        std::cerr << "error: cannot read " << a.file << "\n";
        return kTorusError;
      }
      std::tie(label, generators) = cytk::read_action(in);
    }
    const cytk::TorusAction action = cytk::close_group(generators, label, a.cap);
    const cytk::QuotientReport report = cytk::quotient_singularities(action);
    emit(cytk::torus_json(action, report, expected), a.json, cytk::torus_text);
  } catch (const cytk::TorusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTorusError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularities of Calabi-Yau hypersurfaces and quotients of abelian surfaces"};
  app.require_subcommand(1);

  std::vector<std::string> analyze_args;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Singular locus of a general degree-d hypersurface in P(w0..w4)");
  analyze->add_option("values", analyze_args, "degree followed by five weights")->required();
  analyze->add_flag("--json", analyze_json, "print a JSON document");

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Evaluate a list of weight systems");
  census->add_option("input", census_args.input, "database file, '-' for standard input (default: $CYTK_DATABASE)");
  census->add_option("--csv", census_args.csv, "write the verdict table as CSV");
  census->add_flag("--json", census_args.json, "print a JSON document");
  census->add_option("--jobs", census_args.jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  census->add_option("--rows", census_args.rows, "rows kept in the verdict table")
      ->check(CLI::IsMember({"all", "not-smooth", "not-smooth-no-edge"}));

  std::string surface_text;
  bool surface_json = false;
  auto* surface = app.add_subcommand("surface", "Orbifold c2 and classification of a du Val configuration");
  surface->add_option("multiset", surface_text, "e.g. 16A1, 2A3+11A1, E6+D4+4A2+A1")->required();
  surface->add_flag("--json", surface_json, "print a JSON document");

  bool enumerate_json = false;
  auto* enumerate = app.add_subcommand("enumerate-zero-c2", "All du Val configurations with orbifold c2 = 0");
  enumerate->add_flag("--json", enumerate_json, "print a JSON document");

  TorusArgs torus_args;
  auto* torus = app.add_subcommand("torus-quotient", "Singularities of a quotient of an abelian surface");
  auto* builtin = torus->add_option("--builtin", torus_args.builtin, "name of a built-in action");
  auto* file = torus->add_option("--file", torus_args.file, "JSON action file");
  auto* list = torus->add_flag("--list-builtins", torus_args.list, "list the built-in actions");
  builtin->excludes(file)->excludes(list);
  file->excludes(list);
  torus->add_option("--cap", torus_args.cap, "largest group order accepted by the closure")
      ->check(CLI::PositiveNumber);
  torus->add_flag("--json", torus_args.json, "print a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  if (analyze->parsed()) return run_analyze(analyze_args, analyze_json);
  if (census->parsed()) return run_census(census_args);
  if (surface->parsed()) return run_surface(surface_text, surface_json);
  if (enumerate->parsed()) {
    emit(cytk::enumerate_json(cytk::enumerate_zero_c2()), enumerate_json, cytk::enumerate_text);
    return kOk;
  }
  if (torus->parsed()) {
    if (torus_args.builtin.empty() && torus_args.file.empty() && !torus_args.list) {
      std::cerr << "error: torus-quotient needs --builtin NAME, --file PATH or --list-builtins\n";
      return kInvalidInput;
    }
    return run_torus(torus_args);
  }
  return kInvalidInput;
}

#include "dualenum/enumerate.hpp"
#include "dualenum/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

// Exit codes: 0 completed, 1 usage or parse error, 2 resource limit
// reached (partial output), 3 internal invariant violation.
enum ExitCode { kOk = 0, kUsage = 1, kLimit = 2, kInvariant = 3 };

int run(int argc, char **argv) {
  CLI::App app{"Projected model enumeration with dual model shrinking"};
  app.get_formatter()->column_width(34);

  std::string input_path = "-";
  std::string mode_name = "irredundant";
  std::string project_path;
  uint64_t max_models = 0;
  uint64_t max_conflicts = 0;
  bool check = false;
  bool debug_invariants = false;
  bool stats = false;
  bool quiet = false;

  app.add_option("input", input_path, "DIMACS CNF file ('-' for stdin)");
  app.add_option("--mode", mode_name, "enumeration mode")
      ->check(CLI::IsMember({"irredundant", "redundant"}))
      ->capture_default_str();
  app.add_option("--project", project_path,
                 "file with 'p show <vars> 0' lines overriding in-file projection");
  app.add_option("--max-models", max_models, "stop after this many cubes");
  app.add_option("--max-conflicts", max_conflicts, "stop after this many conflicts");
  app.add_flag("--check", check, "validate the result against the brute-force oracle");
  app.add_flag("--debug-invariants", debug_invariants,
               "check calculus invariants at every rule boundary");
  app.add_flag("--stats", stats, "print search counters");
  app.add_flag("--quiet", quiet, "suppress v-lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  dualenum::ProblemInstance instance;
  try {
    if (input_path == "-") {
      instance = dualenum::parse_dimacs(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return kUsage;
      }
      instance = dualenum::parse_dimacs(in);
    }
    if (!project_path.empty()) {
      std::ifstream in(project_path);
      if (!in) {
        std::cerr << "error: cannot open '" << project_path << "'\n";
        return kUsage;
      }
      instance.relevant_vars =
          dualenum::parse_projection(in, instance.declared_var_count);
    }
  } catch (const dualenum::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  dualenum::EnumOptions options;
  options.mode =
      mode_name == "redundant" ? dualenum::Mode::Redundant : dualenum::Mode::Irredundant;
  if (max_models > 0)
    options.limits.max_models = max_models;
  if (max_conflicts > 0)
    options.limits.max_conflicts = max_conflicts;
  options.check_invariants = debug_invariants;
  if (!quiet)
    options.on_model = [](const dualenum::Cube &m) {
      dualenum::write_cube(m, std::cout);
      std::cout.flush();
    };

  dualenum::EnumResult result;
  try {
    result = dualenum::enumerate(instance, std::move(options));
  } catch (const dualenum::InvariantViolation &e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kInvariant;
  }

  if (check) {
    std::vector<dualenum::Var> all_vars, x;
    for (dualenum::Var v = 1; v <= instance.declared_var_count; ++v)
      all_vars.push_back(v);
    x.assign(instance.relevant_vars.begin(), instance.relevant_vars.end());
    bool complete = result.cause == dualenum::TerminationCause::Exhausted ||
                    result.cause == dualenum::TerminationCause::EmptyBlock;
    try {
      if (complete &&
          !dualenum::oracle::covers_equal(result.models, instance.formula, all_vars, x)) {
        std::cerr << "check failed: cover differs from the projected model set\n";
        return kInvariant;
      }
      if (options.mode == dualenum::Mode::Irredundant &&
          !dualenum::oracle::is_dsop(result.models)) {
        std::cerr << "check failed: cubes are not pairwise contradicting\n";
        return kInvariant;
      }
      std::cout << "c check ok\n";
    } catch (const dualenum::oracle::CapExceeded &e) {
      std::cout << "c check skipped: " << e.what() << '\n';
    }
  }

  if (stats)
    dualenum::write_summary(result.models, instance.relevant_vars.size(), result.stats,
                            std::cout);
  else
    std::cout << "s cubes " << result.models.size() << '\n';

  switch (result.cause) {
  case dualenum::TerminationCause::ModelLimit:
  case dualenum::TerminationCause::ConflictLimit:
    return kLimit;
  default:
    return kOk;
  }
}

} // namespace

int main(int argc, char **argv) { return run(argc, argv); }

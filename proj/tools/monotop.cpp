// monotop: classify, homology, euler, invariants, collapse and report for
// square-free monomial ideals and graphs.
//
// Exit codes: 0 ok, 1 consistency failure, 2 usage or parse error,
// 3 budget exceeded.

#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "monotop/errors.hpp"
#include "monotop/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInconsistent = 1, kUsage = 2, kBudget = 3 };

using Command = std::function<monotop::CommandResult(const monotop::Input&,
                                                     const monotop::ReportOptions&)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cores, resolutions and homotopy types of square-free monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t budget = monotop::kDefaultMaxFaces;
  std::uint64_t seed = 0;
  bool json = false;
  bool timing = false;
  std::string ideal_kind = "edge";
  app.add_option("--budget", budget, "Face and search-state budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed echoed in the report");
  app.add_flag("--json", json, "Print the JSON report");
  app.add_flag("--timing", timing, "Include wall time in the JSON (not deterministic)");
  app.add_option("--ideal", ideal_kind, "Ideal of a .graph input")
      ->check(CLI::IsMember({"edge", "star"}));

  std::string path;
  bool all_resolutions = false;
  const std::map<std::string, std::pair<std::string, Command>> commands = {
      {"classify", {"Greedy resolution, verdict and depth", monotop::run_classify}},
      {"homology", {"Reduced integer homology of R(I)", monotop::run_homology}},
      {"euler", {"Reduced Euler characteristic by covers and by faces", monotop::run_euler}},
      {"invariants", {"Exact graph invariants (.graph only)", monotop::run_invariants}},
      {"collapse", {"Emit and verify a collapse witness", monotop::run_collapse}},
      {"report", {"Everything", monotop::run_report}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("path", path, ".ideal or .graph file")->required();
    if (name == "classify") {
      sub->add_flag("--all-resolutions", all_resolutions, "Enumerate every maximal resolution");
    }
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  monotop::ReportOptions options;
  options.max_faces = budget;
  options.max_resolution_states = budget;
  options.all_resolutions = all_resolutions;
  options.timing = timing;
  options.seed = seed;

  try {
    const auto kind = ideal_kind == "star" ? monotop::GraphIdeal::Star : monotop::GraphIdeal::Edge;
    const monotop::Input input = monotop::load_input(path, kind);
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      const monotop::CommandResult result = commands.at(name).second(input, options);
      if (json) {
        std::cout << result.json.dump(2) << "\n";
      } else {
        std::cout << result.text;
      }
      return result.consistent ? kOk : kInconsistent;
    }
  } catch (const monotop::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const monotop::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const monotop::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const monotop::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kUsage;
}

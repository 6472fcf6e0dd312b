// Command-line front-end: solve generalized decision trees, translate a
// uniform-temperature tree into a per-node-temperature one, check the
// limit-case operators against the classic oracles, and sweep the
// sampling-approximation bound.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdt/classic.hpp"
#include "gdt/errors.hpp"
#include "gdt/free_energy.hpp"
#include "gdt/generate.hpp"
#include "gdt/io.hpp"
#include "gdt/rng.hpp"
#include "gdt/sampling.hpp"
#include "gdt/solver.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0xF3EE;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gdt::ParseError("cannot open '" + out_path + "' for writing");
  out << text;
}

void diagnostic(const std::string& kind, const std::string& message) {
  nlohmann::json j{{"kind", kind}, {"error", message}};
  std::cerr << j.dump() << "\n";
}

int cmd_solve(const std::string& tree_path, const std::string& format, const std::string& out_path) {
  gdt::DecisionTree tree = gdt::load_tree(tree_path);
  gdt::SolveResult result = gdt::solve(tree);
  if (result.max_exponent > 1e4) {
    nlohmann::json j{{"kind", "warning"},
                     {"message", "exponents reached " + gdt::format_double(result.max_exponent) +
                                     " before shifting; values may lose precision"}};
    std::cerr << j.dump() << "\n";
  }
  if (format == "csv") {
    emit(gdt::solve_result_to_csv(tree, result), out_path);
  } else {
    emit(gdt::solve_result_to_json(tree, result).dump(2) + "\n", out_path);
  }
  return 0;
}

int cmd_transform(const std::string& tree_path, double alpha, const std::string& betas_path,
                  const std::string& out_path) {
  gdt::DecisionTree tree = gdt::load_tree(tree_path);
  // The flag fixes the uniform source temperature; whatever temperatures the
  // file carried are replaced before the translation.
  for (gdt::Node& node : tree.nodes) node.beta = gdt::InverseTemperature::finite(alpha);
  std::vector<gdt::InverseTemperature> betas = gdt::betas_from_json(tree, gdt::load_json(betas_path));
  gdt::TrajectoryUtilities utilities = gdt::utilities_from_rewards(tree);
  gdt::DecisionTree transformed = gdt::transform_tree(tree, utilities, betas);
  emit(gdt::tree_to_json(transformed).dump(2) + "\n", out_path);
  return 0;
}

int cmd_limits_check(std::uint64_t seed, int num_trees, const std::string& out_path) {
  if (num_trees < 1) throw gdt::ValidationError("number of trees must be positive");

  struct Rule {
    const char* name;
    gdt::gen::KindPattern pattern;
    double (*oracle)(const gdt::TypedTree&);
  };
  const Rule rules[] = {
      {"expectimax", gdt::gen::KindPattern::MaxChance, gdt::classic::expectimax},
      {"minimax", gdt::gen::KindPattern::MaxMin, gdt::classic::minimax},
      {"expectiminimax", gdt::gen::KindPattern::MaxChanceMinCycle, gdt::classic::expectiminimax},
      {"expectiminimax-random", gdt::gen::KindPattern::RandomMix, gdt::classic::expectiminimax},
  };

  std::ostringstream report;
  char line[160];
  std::snprintf(line, sizeof(line), "seed=%" PRIu64 " trees=%d\n", seed, num_trees);
  report << line;

  bool all_ok = true;
  for (const Rule& rule : rules) {
    double worst = 0.0;
    for (int i = 0; i < num_trees; ++i) {
      const std::uint64_t tree_seed =
          gdt::mix64(seed ^ gdt::mix64(static_cast<std::uint64_t>(i) * 4 +
                                       static_cast<std::uint64_t>(&rule - rules)));
      gdt::TypedTree typed = gdt::gen::random_typed_tree(tree_seed, {}, rule.pattern);
      const double oracle_value = rule.oracle(typed);
      const double solver_value =
          gdt::solve(gdt::to_decision_tree(typed)).value[typed.root];
      worst = std::max(worst, std::abs(oracle_value - solver_value));
    }
    const bool ok = worst < 1e-12;
    all_ok = all_ok && ok;
    std::snprintf(line, sizeof(line), "%-24s max|diff|=%.3e  %s\n", rule.name, worst,
                  ok ? "PASS" : "FAIL");
    report << line;
  }
  report << (all_ok ? "overall: PASS\n" : "overall: FAIL\n");
  emit(report.str(), out_path);
  return all_ok ? 0 : 2;
}

int cmd_sample_bound(const std::string& model_path, int alpha_max, std::int64_t trials,
                     std::uint64_t seed, const std::string& out_path) {
  if (alpha_max < 1) throw gdt::ValidationError("alpha-max must be a positive integer");
  if (trials < 0) throw gdt::ValidationError("trials must be >= 0");
  gdt::SampleModel model = gdt::load_model(model_path);

  std::vector<int> alphas(static_cast<std::size_t>(alpha_max));
  for (int a = 1; a <= alpha_max; ++a) alphas[static_cast<std::size_t>(a - 1)] = a;
  std::vector<gdt::BoundReport> reports = gdt::check_bound(model, alphas);

  std::ostringstream out;
  out << gdt::bound_report_csv_header()
      << ",delta_max,stated_bound_max,bound_satisfied_max,vacuous,mc_tv\n";
  for (const gdt::BoundReport& report : reports) {
    out << gdt::bound_report_csv_row(report) << ',' << gdt::format_double(report.delta_max) << ','
        << gdt::format_double(report.stated_bound_max) << ','
        << (report.bound_satisfied_max ? "true" : "false") << ','
        << (report.vacuous ? "true" : "false") << ',';
    if (trials > 0) {
      gdt::Distribution empirical = gdt::monte_carlo_max(model, report.alpha, trials, seed);
      out << gdt::format_double(gdt::total_variation(empirical, report.m_alpha));
    }
    out << '\n';
  }
  emit(out.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized decision tree solver"};
  app.require_subcommand(1);

  std::string tree_path;
  std::string model_path;
  std::string betas_path;
  std::string out_path;
  std::string format = "json";
  double alpha = 1.0;
  int num_trees = 200;
  int alpha_max = 64;
  std::int64_t trials = 0;
  std::uint64_t seed = kDefaultSeed;

  CLI::App* solve = app.add_subcommand("solve", "Solve a tree and print values and policies");
  solve->add_option("tree", tree_path, "Tree JSON file")->required();
  solve->add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--out", out_path, "Write output to a file instead of stdout");

  CLI::App* transform =
      app.add_subcommand("transform", "Rewrite a uniform-temperature tree to per-node temperatures");
  transform->add_option("tree", tree_path, "Tree JSON file")->required();
  transform->add_option("--alpha", alpha, "Uniform source inverse temperature")->required();
  transform->add_option("--betas", betas_path, "JSON file of per-node target temperatures")
      ->required();
  transform->add_option("--out", out_path, "Write output to a file instead of stdout");

  CLI::App* limits =
      app.add_subcommand("limits-check", "Compare limit-case solving against the classic oracles");
  limits->add_option("--seed", seed, "Generator seed");
  limits->add_option("--trees", num_trees, "Number of random trees per rule");
  limits->add_option("--out", out_path, "Write output to a file instead of stdout");

  CLI::App* bound =
      app.add_subcommand("sample-bound", "Sweep the Boltzmann vs max-of-samples bound");
  bound->add_option("model", model_path, "Sample model JSON file")->required();
  bound->add_option("--alpha-max", alpha_max, "Sweep alpha from 1 to this value");
  bound->add_option("--trials", trials, "Monte Carlo trials per alpha (0 = analytic only)");
  bound->add_option("--seed", seed, "Monte Carlo seed");
  bound->add_option("--out", out_path, "Write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(tree_path, format, out_path);
    if (transform->parsed()) return cmd_transform(tree_path, alpha, betas_path, out_path);
    if (limits->parsed()) return cmd_limits_check(seed, num_trees, out_path);
    return cmd_sample_bound(model_path, alpha_max, trials, seed, out_path);
  } catch (const gdt::ParseError& e) {
    diagnostic("parse", e.what());
    return 1;
  } catch (const gdt::ValidationError& e) {
    diagnostic("validation", e.what());
    return 2;
  } catch (const std::exception& e) {
    diagnostic("internal", e.what());
    return 2;
  }
}

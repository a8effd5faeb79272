#include <iostream>

#include <CLI11.hpp>

#include "medianlab/cli.hpp"

int main(int argc, char** argv) {
  medianlab::cli::RunConfig config;
  CLI::App app{"Finite median algebras: walls, cubes, factors, measures, walks"};
  app.require_subcommand(1);
  app.add_option("--format", config.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", config.seed, "master seed");
  app.add_option("--out", config.out, "write the report here instead of stdout");
  app.add_option("--precision", config.precision, "digits for float statistics");

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", config.inputs, "algebra JSON file")->required()->check(CLI::ExistingFile);
    return sub;
  };
  file_command("check", "validate the median axioms");
  file_command("walls", "list walls and their transversality");
  file_command("cubes", "list subcubes")->add_flag("--maximal", config.maximal, "maximal cubes only");
  file_command("decompose", "split off the maximal cubical factor");
  CLI::App* balanced = file_command("balanced", "iterate the self-median operator");
  balanced->add_option("--starts", config.starts, "random starting measures");
  balanced->add_option("--iters", config.iters, "iterations per start");
  balanced->add_option("--tol", config.tol, "TV tolerance to a cubical measure");
  file_command("stationary", "vertices of the stationary polytope")
      ->add_option("--action", config.action_path, "action JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  file_command("minimal", "minimality of the action")
      ->add_option("--action", config.action_path, "action JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* simulate = app.add_subcommand("simulate", "random walk on F2 x Z/2");
  simulate->add_option("--depth", config.depth, "cylinder depth");
  simulate->add_option("--steps", config.steps, "steps per trajectory");
  simulate->add_option("--traj", config.trajectories, "number of trajectories");
  simulate->add_option("--mu", config.mu, "step law, e.g. a+=1/8,a-=1/8,...");
  app.add_subcommand("oracle", "brute-force recheck of the hypercube corpus")
      ->add_option("--dim", config.dim, "cube dimension (at most 4)");

  // Shared flags are accepted after the subcommand too.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  config.command = app.get_subcommands().front()->get_name();

  const medianlab::cli::DispatchResult result = medianlab::cli::dispatch(config);
  if (!result.error.empty()) std::cerr << "medianlab " << config.command << ": " << result.error << "\n";
  if (config.out.empty()) std::cout << result.output;
  return result.exit_code;
}

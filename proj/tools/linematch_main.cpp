// linematch: minimum-cost many-to-many matching of points on a line under
// per-point demands (and optional capacities), with an exact oracle,
// differential fuzzing and a scaling benchmark.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linematch/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"minimum-cost many-to-many matching on the line"};
  app.require_subcommand(1);

  std::string input, output, result;
  std::optional<std::string> mode;
  long long count = 100;
  std::uint64_t seed = 0;
  int max_n = 8;
  std::string simple_mode = "ommd";
  std::vector<int> sizes;
  int reps = 3;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--input", input, "instance JSON file")->required();
  solve->add_option("--output", output, "result JSON file")->required();
  solve->add_option("--mode", mode, "ommd or ommdc (default: inferred from capacities)");

  auto* verify = app.add_subcommand("verify", "check a result file against its instance");
  verify->add_option("--input", input, "instance JSON file")->required();
  verify->add_option("--output", result, "result JSON file to verify")->required();
  verify->add_option("--mode", mode, "ommd or ommdc (default: the result's mode)");

  auto* oracle = app.add_subcommand("oracle", "solve via the exact circulation oracle");
  oracle->add_option("--input", input, "instance JSON file")->required();
  oracle->add_option("--output", output, "result JSON file")->required();
  oracle->add_option("--mode", mode, "ommd or ommdc (default: inferred from capacities)");

  auto* fuzz = app.add_subcommand("fuzz", "random solver-vs-oracle comparison");
  fuzz->add_option("--count", count, "number of random instances");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--max-n", max_n, "largest instance size");
  fuzz->add_option("--mode", simple_mode, "ommd or ommdc");

  auto* bench = app.add_subcommand("bench", "scaling benchmark");
  bench->add_option("--sizes", sizes, "instance sizes, ascending")->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per size");
  bench->add_option("--mode", simple_mode, "ommd or ommdc");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  using namespace linematch::cli;
  if (solve->parsed()) return cmd_solve(input, output, mode, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(input, result, mode, std::cout, std::cerr);
  if (oracle->parsed()) return cmd_oracle(input, output, mode, std::cout, std::cerr);
  if (fuzz->parsed()) return cmd_fuzz(count, seed, max_n, simple_mode, std::cout, std::cerr);
  if (bench->parsed()) return cmd_bench(sizes, reps, simple_mode, std::cout, std::cerr);
  return 1;
}

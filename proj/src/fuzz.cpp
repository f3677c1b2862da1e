#include "linematch/fuzz.hpp"

#include <optional>

#include "linematch/generator.hpp"
#include "linematch/io.hpp"
#include "linematch/oracle.hpp"
#include "linematch/solver.hpp"

namespace linematch {

namespace {

struct Attempt {
  std::optional<Matching> matching;
  std::optional<ErrorKind> error;
};

template <class Fn>
Attempt attempt(Fn&& fn) {
  Attempt a;
  try {
    a.matching = fn();
  } catch (const Error& e) {
    a.error = e.kind();
  }
  return a;
}

}  // namespace

FuzzOutcome run_differential_fuzz(const FuzzParams& params) {
  FuzzOutcome outcome;
  SplitMix64 rng(params.seed);
  for (long long k = 0; k < params.count; ++k) {
    Instance inst = random_small_instance(rng, params.max_n, params.mode);
    ++outcome.executed;

    Attempt solver = attempt([&] {
      return params.mode == MatchMode::demand_only ? solve_ommd(inst) : solve_ommdc(inst);
    });
    Attempt oracle = attempt([&] { return oracle_solve(inst, params.mode); });

    std::string problem;
    if (solver.error || oracle.error) {
      if (!solver.error)
        problem = "solver succeeded but oracle reported " + std::string(to_string(*oracle.error));
      else if (!oracle.error)
        problem = "oracle succeeded but solver reported " + std::string(to_string(*solver.error));
      else if (*solver.error != *oracle.error)
        problem = std::string("solver reported ") + to_string(*solver.error) +
                  " but oracle reported " + to_string(*oracle.error);
      else
        ++outcome.infeasible;
    } else {
      if (solver.matching->total_cost != oracle.matching->total_cost)
        problem = "solver cost " + std::to_string(solver.matching->total_cost) +
                  " != oracle cost " + std::to_string(oracle.matching->total_cost);
      else if (!validate_matching(inst, *solver.matching, params.mode).feasible)
        problem = "solver produced an infeasible matching";
    }

    if (problem.empty()) {
      ++outcome.matched;
      continue;
    }

    FuzzMismatch mm;
    mm.index = k;
    mm.detail = problem;
    mm.instance_text = instance_to_text(inst);
    if (params.dump_failures) {
      mm.dump_path = params.dump_dir + "/fuzz-mismatch-" + std::to_string(params.seed) + "-" +
                     std::to_string(k) + ".json";
      try {
        write_text_file(mm.dump_path, mm.instance_text);
      } catch (const Error&) {
        mm.dump_path.clear();
      }
    }
    outcome.mismatches.push_back(std::move(mm));
  }
  return outcome;
}

}  // namespace linematch

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run via ctest or directly:
//   ./acceptance --data <golden fixture dir>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "linematch/bench.hpp"
#include "linematch/cli.hpp"
#include "linematch/fuzz.hpp"
#include "linematch/generator.hpp"
#include "linematch/io.hpp"
#include "linematch/oracle.hpp"
#include "linematch/solver.hpp"
#include "support.hpp"

using namespace linematch;
using namespace testsupport;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

struct EquivalenceTally {
  long long executed = 0;
  long long matched = 0;
  long long infeasible = 0;
  long long cost_mismatches = 0;
  long long verdict_mismatches = 0;
  long long structural = 0;
  long long extra_pairs = 0;  // outputs using more pairs than the demand bound
  std::string first_problem;
};

EquivalenceTally run_equivalence(MatchMode mode, long long count, std::uint64_t seed) {
  EquivalenceTally tally;
  SplitMix64 rng(seed);
  for (long long k = 0; k < count; ++k) {
    Instance inst = random_small_instance(rng, 10, mode);
    ++tally.executed;
    std::optional<Matching> got, want;
    std::optional<ErrorKind> got_err, want_err;
    try {
      got = mode == MatchMode::demand_only ? solve_ommd(inst) : solve_ommdc(inst);
    } catch (const Error& e) {
      got_err = e.kind();
    }
    try {
      want = oracle_solve(inst, mode);
    } catch (const Error& e) {
      want_err = e.kind();
    }
    std::string problem;
    if (got_err.has_value() != want_err.has_value() ||
        (got_err && *got_err != *want_err)) {
      ++tally.verdict_mismatches;
      problem = "feasibility verdicts differ";
    } else if (got_err) {
      ++tally.infeasible;
    } else if (got->total_cost != want->total_cost) {
      ++tally.cost_mismatches;
      problem = "solver cost " + std::to_string(got->total_cost) + " vs oracle " +
                std::to_string(want->total_cost);
    } else {
      auto violations = structural_violations(inst, *got, mode);
      if (!violations.empty()) {
        ++tally.structural;
        problem = violations.front();
      } else {
        ++tally.matched;
        if (static_cast<long long>(got->pairs.size()) > min_pair_count(inst))
          ++tally.extra_pairs;
      }
    }
    if (!problem.empty() && tally.first_problem.empty())
      tally.first_problem = "instance " + std::to_string(k) + ": " + problem;
  }
  return tally;
}

void criterion_1_and_2() {
  auto t0 = std::chrono::steady_clock::now();
  EquivalenceTally ommd = run_equivalence(MatchMode::demand_only, 10000, 0xACCE9701ULL);
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  {
    std::ostringstream os;
    os << "OMMD oracle equivalence: " << ommd.matched << "/" << ommd.executed
       << " matched exactly, " << ommd.cost_mismatches << " cost mismatches in " << std::fixed
       << std::setprecision(1) << secs << "s";
    if (!ommd.first_problem.empty()) os << " (" << ommd.first_problem << ")";
    os << "; minimum-pair statistic: " << (ommd.matched - ommd.extra_pairs) << "/" << ommd.matched
       << " at the demand bound";
    report(1, ommd.matched == ommd.executed, os.str());
  }

  EquivalenceTally ommdc = run_equivalence(MatchMode::demand_and_capacity, 10000, 0xACCE9702ULL);
  {
    std::ostringstream os;
    os << "OMMDC oracle equivalence: " << ommdc.matched << " matched, " << ommdc.infeasible
       << " infeasible on both sides, " << ommdc.cost_mismatches << " cost and "
       << ommdc.verdict_mismatches << " verdict mismatches";
    if (!ommdc.first_problem.empty()) os << " (" << ommdc.first_problem << ")";
    report(2, ommdc.matched + ommdc.infeasible == ommdc.executed, os.str());
  }

  {
    long long structural = ommd.structural + ommdc.structural;
    std::ostringstream os;
    os << "structural invariants on every solver output: " << structural
       << " violations (demands, capacities, duplicate pairs, crossing and span "
          "completions, pair-count bound)";
    report(4, structural == 0, os.str());
  }
}

void criterion_3() {
  SplitMix64 rng(0xACCE9703ULL);
  long long matched = 0, executed = 0;
  std::string first;
  for (int k = 0; k < 1000; ++k) {
    MatchMode mode = k % 2 == 0 ? MatchMode::demand_only : MatchMode::demand_and_capacity;
    Instance inst = random_enumerable_instance(rng, mode);
    ++executed;
    std::optional<Matching> brute, flow;
    try {
      brute = exhaustive_solve(inst, mode);
    } catch (const Error&) {
    }
    try {
      flow = oracle_solve(inst, mode);
    } catch (const Error&) {
    }
    if (brute.has_value() != flow.has_value()) {
      if (first.empty()) first = "feasibility verdicts differ at " + std::to_string(k);
      continue;
    }
    if (brute && brute->total_cost != flow->total_cost) {
      if (first.empty())
        first = "costs differ at " + std::to_string(k) + ": " +
                std::to_string(brute->total_cost) + " vs " + std::to_string(flow->total_cost);
      continue;
    }
    ++matched;
  }
  std::ostringstream os;
  os << "oracle self-consistency: " << matched << "/" << executed
     << " exhaustive-vs-circulation agreements";
  if (!first.empty()) os << " (" << first << ")";
  report(3, matched == executed, os.str());
}

void criterion_5() {
  const std::vector<int> sizes = {2000, 4000, 8000};
  bool pass = true;
  std::ostringstream os;
  for (MatchMode mode : {MatchMode::demand_only, MatchMode::demand_and_capacity}) {
    std::vector<BenchRow> rows = run_scaling_bench(sizes, 3, mode, 0x42);
    os << to_string(mode) << ":";
    for (const auto& row : rows) {
      os << " n=" << row.size << " " << std::fixed << std::setprecision(1)
         << row.median_ns / 1e6 << "ms";
      if (row.has_ratio) {
        os << " (x" << std::setprecision(2) << row.ratio << ")";
        if (row.ratio > 4.6) pass = false;
      }
      if (row.size == 8000 && row.median_ns >= 10'000'000'000LL) pass = false;
    }
    os << "  ";
  }
  report(5, pass, "quadratic scaling, ratios <= 4.6 and n=8000 under 10s: " + os.str());
}

void criterion_6(const std::string& data_dir) {
  bool pass = true;
  std::ostringstream os;
  int fixtures = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
    if (entry.path().extension() != ".json") continue;
    ++fixtures;
    nlohmann::json js = nlohmann::json::parse(slurp(entry.path().string()));
    LoadedInstance loaded = parse_instance_text(js.at("instance").dump());
    const Instance& inst = std::get<Instance>(loaded.value);
    MatchMode mode = js.at("mode").get<std::string>() == "ommdc"
                         ? MatchMode::demand_and_capacity
                         : MatchMode::demand_only;
    long long expected = js.at("expected_cost").get<long long>();
    std::vector<std::pair<int, int>> expected_pairs;
    for (const auto& pr : js.at("expected_pairs"))
      expected_pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());

    Matching brute = exhaustive_solve(inst, mode);
    Matching solved = mode == MatchMode::demand_only ? solve_ommd(inst) : solve_ommdc(inst);
    if (brute.total_cost != expected || brute.pairs != expected_pairs ||
        solved.total_cost != expected) {
      pass = false;
      os << entry.path().filename().string() << " disagrees; ";
    }
  }
  if (fixtures == 0) pass = false;
  report(6, pass,
         "worked examples: " + std::to_string(fixtures) +
             " golden fixtures re-derived by enumeration and matched by the solver" +
             (os.str().empty() ? "" : "; " + os.str()));
}

void criterion_7() {
  TempDir dir;
  std::ostringstream out, err;
  std::string in = dir.path("inst.json");
  write_text_file(in, instance_to_text(make_instance({1, 5, 8, 14}, {1, 2, 1, 1},
                                                     {2, 3, 9, 11}, {1, 1, 2, 1})));
  std::string r1 = dir.path("r1.json"), r2 = dir.path("r2.json");
  bool pass = cli::cmd_solve(in, r1, std::nullopt, out, err) == 0 &&
              cli::cmd_solve(in, r2, std::nullopt, out, err) == 0 && slurp(r1) == slurp(r2);

  FuzzParams params;
  params.count = 300;
  params.seed = 7;
  params.max_n = 10;
  params.mode = MatchMode::demand_and_capacity;
  params.dump_failures = false;
  FuzzOutcome a = run_differential_fuzz(params);
  FuzzOutcome b = run_differential_fuzz(params);
  bool fuzz_same = a.ok() == b.ok() && a.matched == b.matched && a.infeasible == b.infeasible;
  report(7, pass && fuzz_same,
         std::string("determinism: byte-identical result files ") + (pass ? "yes" : "NO") +
             ", repeated fuzz outcome identical " + (fuzz_same ? "yes" : "NO"));
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = "tests/golden";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--data") == 0) data_dir = argv[i + 1];

  criterion_1_and_2();
  criterion_3();
  criterion_5();
  criterion_6(data_dir);
  criterion_7();

  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}

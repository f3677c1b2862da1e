#include "linematch/cli.hpp"

#include <cstdio>

#include "linematch/bench.hpp"
#include "linematch/error.hpp"
#include "linematch/fuzz.hpp"
#include "linematch/io.hpp"
#include "linematch/oracle.hpp"
#include "linematch/solver.hpp"

namespace linematch::cli {

namespace {

int exit_code_for(const Error& e) { return is_infeasible(e.kind()) ? 2 : 1; }

std::optional<MatchMode> parse_mode(const std::string& text) {
  if (text == "ommd") return MatchMode::demand_only;
  if (text == "ommdc") return MatchMode::demand_and_capacity;
  return std::nullopt;
}

// Mode from the flag when given, otherwise inferred from capacity presence.
MatchMode resolve_mode(const LoadedInstance& inst, const std::optional<std::string>& flag) {
  if (flag) {
    auto m = parse_mode(*flag);
    if (!m) fail(ErrorKind::ParseError, "unknown mode '" + *flag + "' (expected ommd or ommdc)");
    return *m;
  }
  return inst.capacitated() ? MatchMode::demand_and_capacity : MatchMode::demand_only;
}

template <class Solver>
int solve_to_file(const std::string& input, const std::string& output,
                  const std::optional<std::string>& mode_flag, const std::string& solver_name,
                  Solver&& solver, std::ostream& out, std::ostream& err) {
  try {
    LoadedInstance inst = load_instance_file(input);
    MatchMode mode = resolve_mode(inst, mode_flag);
    ResultDoc doc;
    if (inst.real_mode()) {
      RealMatching m = solver(std::get<RealInstance>(inst.value), mode);
      doc = make_result(inst, m, mode, solver_name);
    } else {
      Matching m = solver(std::get<Instance>(inst.value), mode);
      doc = make_result(inst, m, mode, solver_name);
    }
    write_text_file(output, result_to_text(doc));
    out << solver_name << ": cost " << doc.cost_text << ", " << doc.pairs.size()
        << " pairs -> " << output << "\n";
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace

int cmd_solve(const std::string& input, const std::string& output,
              const std::optional<std::string>& mode, std::ostream& out, std::ostream& err) {
  return solve_to_file(
      input, output, mode, "sweep",
      [](const auto& inst, MatchMode m) {
        return m == MatchMode::demand_only ? solve_ommd(inst) : solve_ommdc(inst);
      },
      out, err);
}

int cmd_oracle(const std::string& input, const std::string& output,
               const std::optional<std::string>& mode, std::ostream& out, std::ostream& err) {
  return solve_to_file(
      input, output, mode, "oracle",
      [](const auto& inst, MatchMode m) { return oracle_solve(inst, m); }, out, err);
}

namespace {

template <class Coord>
int verify_against(const BasicInstance<Coord>& inst, const ResultDoc& doc, MatchMode mode,
                   std::ostream& out, std::ostream& err) {
  BasicMatching<Coord> m;
  m.pairs = doc.pairs;
  for (const auto& [si, ti] : m.pairs) {
    if (si < 0 || si >= inst.s_size() || ti < 0 || ti >= inst.t_size()) {
      err << "pair (" << si << "," << ti << ") is out of range\n";
      return 1;
    }
  }
  ValidationReport report = validate_matching(inst, m, mode);
  if (!report.feasible) {
    for (const auto& v : report.violations)
      err << to_string(v.kind) << " at " << side_letter(v.side) << "[" << v.index
          << "]: " << v.detail << "\n";
    return 2;
  }
  std::string recomputed = format_cost(matching_cost(inst, m));
  if (recomputed != doc.cost_text) {
    err << "recorded cost " << doc.cost_text << " but recomputation gives " << recomputed << "\n";
    return 2;
  }
  out << "ok: cost " << recomputed << ", " << m.pairs.size() << " pairs\n";
  return 0;
}

}  // namespace

int cmd_verify(const std::string& instance_path, const std::string& result_path,
               const std::optional<std::string>& mode, std::ostream& out, std::ostream& err) {
  try {
    LoadedInstance inst = load_instance_file(instance_path);
    ResultDoc doc = load_result_file(result_path);
    std::optional<std::string> mode_flag = mode ? mode : std::optional<std::string>(doc.mode);
    MatchMode m = resolve_mode(inst, mode_flag);
    std::string digest = instance_digest(inst);
    if (!doc.digest.empty() && doc.digest != digest) {
      err << "result was produced for a different instance (digest " << doc.digest << " vs "
          << digest << ")\n";
      return 2;
    }
    if (inst.real_mode())
      return verify_against(std::get<RealInstance>(inst.value), doc, m, out, err);
    return verify_against(std::get<Instance>(inst.value), doc, m, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_fuzz(long long count, std::uint64_t seed, int max_n, const std::string& mode,
             std::ostream& out, std::ostream& err) {
  auto parsed = parse_mode(mode);
  if (!parsed) {
    err << "unknown mode '" << mode << "' (expected ommd or ommdc)\n";
    return 1;
  }
  int guard = oracle_size_guard();
  if (max_n < 2 || max_n > guard || max_n > 100) {
    err << "max_n must lie in [2, " << std::min(guard, 100)
        << "] (oracle size guard; override with LINEMATCH_ORACLE_GUARD)\n";
    return 1;
  }
  if (count < 0) {
    err << "count must be nonnegative\n";
    return 1;
  }
  FuzzParams params;
  params.count = count;
  params.seed = seed;
  params.max_n = max_n;
  params.mode = *parsed;
  FuzzOutcome outcome = run_differential_fuzz(params);
  out << mode << " fuzz: " << outcome.matched << "/" << outcome.executed << " matched, "
      << outcome.infeasible << " infeasible on both sides (seed " << seed << ")\n";
  if (outcome.ok()) return 0;
  for (const auto& mm : outcome.mismatches) {
    err << "mismatch at index " << mm.index << ": " << mm.detail << "\n";
    if (!mm.dump_path.empty()) err << "  instance dumped to " << mm.dump_path << "\n";
  }
  err << "reproduce with --seed " << seed << " --count " << count << " --max-n " << max_n
      << " --mode " << mode << "\n";
  return 3;
}

int cmd_bench(const std::vector<int>& sizes, int reps, const std::string& mode, std::ostream& out,
              std::ostream& err) {
  auto parsed = parse_mode(mode);
  if (!parsed) {
    err << "unknown mode '" << mode << "' (expected ommd or ommdc)\n";
    return 1;
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 2) {
      err << "sizes must be >= 2\n";
      return 1;
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      err << "sizes must be strictly ascending\n";
      return 1;
    }
  }
  std::vector<BenchRow> rows = run_scaling_bench(sizes, std::max(1, reps), *parsed, 0x42);
  out << "size,median_ns,ratio\n";
  char buf[128];
  for (const auto& row : rows) {
    if (row.has_ratio)
      std::snprintf(buf, sizeof(buf), "%d,%lld,%.3f", row.size,
                    static_cast<long long>(row.median_ns), row.ratio);
    else
      std::snprintf(buf, sizeof(buf), "%d,%lld,", row.size,
                    static_cast<long long>(row.median_ns));
    out << buf << "\n";
  }
  return 0;
}

}  // namespace linematch::cli

#pragma once

// CLI command implementations, kept as library functions so the exit-code
// contracts are unit-testable. Exit codes: 0 ok, 1 usage/parse/validation,
// 2 infeasible or mismatch, 3 fuzz counterexample.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace linematch::cli {

int cmd_solve(const std::string& input, const std::string& output,
              const std::optional<std::string>& mode, std::ostream& out, std::ostream& err);

int cmd_oracle(const std::string& input, const std::string& output,
               const std::optional<std::string>& mode, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& instance_path, const std::string& result_path,
               const std::optional<std::string>& mode, std::ostream& out, std::ostream& err);

int cmd_fuzz(long long count, std::uint64_t seed, int max_n, const std::string& mode,
             std::ostream& out, std::ostream& err);

int cmd_bench(const std::vector<int>& sizes, int reps, const std::string& mode, std::ostream& out,
              std::ostream& err);

}  // namespace linematch::cli

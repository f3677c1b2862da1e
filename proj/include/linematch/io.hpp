#pragma once

// JSON file formats.
//
// Instance files:  {"s": [...], "t": [...], "alpha": [...], "beta": [...],
//                   "cap_s": [...]?, "cap_t": [...]?}
// Result files:    {"cost": <integer or decimal string>, "pairs": [[s,t],...],
//                   "mode": "ommd"|"ommdc", "solver": "...",
//                   "instance_digest": "..."}
//
// Integer instances stay integers end to end so costs verify bit-exactly;
// files with fractional coordinates load through the real-valued pipeline and
// serialize their cost as a decimal string.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/matching.hpp"

namespace linematch {

struct LoadedInstance {
  std::variant<Instance, RealInstance> value;

  bool real_mode() const { return std::holds_alternative<RealInstance>(value); }
  bool capacitated() const {
    return std::visit([](const auto& inst) { return inst.capacitated(); }, value);
  }
};

// Parse + validate_instance. Throws Error (ParseError for malformed files,
// the validation kinds otherwise).
LoadedInstance load_instance_file(const std::string& path);
LoadedInstance parse_instance_text(const std::string& text);

std::string instance_to_text(const Instance& inst);
std::string instance_to_text(const RealInstance& inst);
std::string instance_digest(const LoadedInstance& inst);
std::string instance_digest(const Instance& inst);

struct ResultDoc {
  std::string mode;    // "ommd" | "ommdc"
  std::string solver;  // producer identifier
  std::string digest;
  std::string cost_text;  // canonical serialization of the cost value
  bool real_mode = false;
  std::vector<std::pair<int, int>> pairs;
};

std::string format_cost(long long cost);
std::string format_cost(double cost);

ResultDoc make_result(const LoadedInstance& inst, const Matching& m, MatchMode mode,
                      const std::string& solver);
ResultDoc make_result(const LoadedInstance& inst, const RealMatching& m, MatchMode mode,
                      const std::string& solver);

std::string result_to_text(const ResultDoc& doc);
ResultDoc parse_result_text(const std::string& text);
ResultDoc load_result_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace linematch

#include "linematch/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace linematch {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json js = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (js.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
  return js;
}

std::vector<int> int_array(const json& js, const char* key, bool required) {
  if (!js.contains(key)) {
    if (required) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return {};
  }
  const json& arr = js.at(key);
  if (!arr.is_array()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be an array");
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      fail(ErrorKind::ParseError, std::string("'") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

bool coords_are_integral(const json& arr) {
  for (const auto& v : arr)
    if (!v.is_number_integer()) return false;
  return true;
}

template <class Coord>
std::vector<Coord> coord_array(const json& js, const char* key) {
  if (!js.contains(key)) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  const json& arr = js.at(key);
  if (!arr.is_array()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be an array");
  std::vector<Coord> out;
  for (const auto& v : arr) {
    if (!v.is_number())
      fail(ErrorKind::ParseError, std::string("'") + key + "' must hold numbers");
    out.push_back(v.get<Coord>());
  }
  return out;
}

template <class Coord>
BasicInstance<Coord> instance_from_json(const json& js) {
  BasicInstance<Coord> inst;
  inst.s_coords = coord_array<Coord>(js, "s");
  inst.t_coords = coord_array<Coord>(js, "t");
  inst.s_demands = int_array(js, "alpha", true);
  inst.t_demands = int_array(js, "beta", true);
  if (js.contains("cap_s")) inst.s_caps = int_array(js, "cap_s", true);
  if (js.contains("cap_t")) inst.t_caps = int_array(js, "cap_t", true);
  return validate_instance(std::move(inst));
}

template <class Coord>
json instance_json(const BasicInstance<Coord>& inst) {
  json js;
  js["s"] = inst.s_coords;
  js["t"] = inst.t_coords;
  js["alpha"] = inst.s_demands;
  js["beta"] = inst.t_demands;
  if (inst.s_caps) js["cap_s"] = *inst.s_caps;
  if (inst.t_caps) js["cap_t"] = *inst.t_caps;
  return js;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

LoadedInstance parse_instance_text(const std::string& text) {
  json js = parse_json(text);
  if (!js.is_object()) fail(ErrorKind::ParseError, "instance file must be a JSON object");
  bool integral = js.contains("s") && js.contains("t") && js.at("s").is_array() &&
                  js.at("t").is_array() && coords_are_integral(js.at("s")) &&
                  coords_are_integral(js.at("t"));
  if (integral) return LoadedInstance{instance_from_json<long long>(js)};
  return LoadedInstance{instance_from_json<double>(js)};
}

LoadedInstance load_instance_file(const std::string& path) {
  return parse_instance_text(read_text_file(path));
}

std::string instance_to_text(const Instance& inst) { return instance_json(inst).dump(2) + "\n"; }
std::string instance_to_text(const RealInstance& inst) {
  return instance_json(inst).dump(2) + "\n";
}

std::string instance_digest(const Instance& inst) {
  return hex64(fnv1a64(instance_json(inst).dump()));
}

std::string instance_digest(const LoadedInstance& inst) {
  return std::visit([](const auto& v) { return hex64(fnv1a64(instance_json(v).dump())); },
                    inst.value);
}

std::string format_cost(long long cost) { return std::to_string(cost); }

std::string format_cost(double cost) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), cost);
  return std::string(buf, res.ptr);
}

namespace {

template <class Coord>
ResultDoc make_result_impl(const LoadedInstance& inst, const BasicMatching<Coord>& m,
                           MatchMode mode, const std::string& solver, bool real_mode) {
  ResultDoc doc;
  doc.mode = to_string(mode);
  doc.solver = solver;
  doc.digest = instance_digest(inst);
  doc.cost_text = format_cost(m.total_cost);
  doc.real_mode = real_mode;
  doc.pairs = m.pairs;
  return doc;
}

}  // namespace

ResultDoc make_result(const LoadedInstance& inst, const Matching& m, MatchMode mode,
                      const std::string& solver) {
  return make_result_impl(inst, m, mode, solver, false);
}

ResultDoc make_result(const LoadedInstance& inst, const RealMatching& m, MatchMode mode,
                      const std::string& solver) {
  return make_result_impl(inst, m, mode, solver, true);
}

std::string result_to_text(const ResultDoc& doc) {
  json js;
  if (doc.real_mode) {
    js["cost"] = doc.cost_text;
  } else {
    long long v = 0;
    auto res = std::from_chars(doc.cost_text.data(), doc.cost_text.data() + doc.cost_text.size(), v);
    if (res.ec != std::errc{}) fail(ErrorKind::ParseError, "bad cost value");
    js["cost"] = v;
  }
  js["pairs"] = json::array();
  for (const auto& [si, ti] : doc.pairs) js["pairs"].push_back(json::array({si, ti}));
  js["mode"] = doc.mode;
  js["solver"] = doc.solver;
  js["instance_digest"] = doc.digest;
  return js.dump(2) + "\n";
}

ResultDoc parse_result_text(const std::string& text) {
  json js = parse_json(text);
  if (!js.is_object()) fail(ErrorKind::ParseError, "result file must be a JSON object");
  ResultDoc doc;
  if (!js.contains("cost")) fail(ErrorKind::ParseError, "missing field 'cost'");
  const json& cost = js.at("cost");
  if (cost.is_number_integer()) {
    doc.real_mode = false;
    doc.cost_text = format_cost(cost.get<long long>());
  } else if (cost.is_string()) {
    doc.real_mode = true;
    doc.cost_text = cost.get<std::string>();
  } else {
    fail(ErrorKind::ParseError, "'cost' must be an integer or a decimal string");
  }
  if (!js.contains("pairs") || !js.at("pairs").is_array())
    fail(ErrorKind::ParseError, "missing 'pairs' array");
  for (const auto& pr : js.at("pairs")) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
        !pr[1].is_number_integer())
      fail(ErrorKind::ParseError, "each pair must be [s_index, t_index]");
    doc.pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
  }
  doc.mode = js.value("mode", std::string("ommd"));
  doc.solver = js.value("solver", std::string());
  doc.digest = js.value("instance_digest", std::string());
  return doc;
}

ResultDoc load_result_file(const std::string& path) {
  return parse_result_text(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorKind::ParseError, "failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace linematch

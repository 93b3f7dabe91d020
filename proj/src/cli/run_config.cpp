#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "json.hpp"
#include "spinon/cli.hpp"
#include "spinon/errors.hpp"
#include "spinon/spin_algebra.hpp"

namespace spinon::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Command, const char*>, 9> kCommands{{
    {Command::spectrum, "spectrum"},
    {Command::potential, "potential"},
    {Command::correspond, "correspond"},
    {Command::susceptibility, "susceptibility"},
    {Command::dicke, "dicke"},
    {Command::oscillators, "oscillators"},
    {Command::dynamics, "dynamics"},
    {Command::closed_eq, "closed-eq"},
    {Command::wk, "wk"},
}};

// Optional real-valued fields, keyed by flag spelling.
std::map<std::string, std::optional<double> RunConfig::*> real_fields() {
  return {{"s", &RunConfig::s},
          {"b", &RunConfig::b},
          {"alpha", &RunConfig::alpha},
          {"beta", &RunConfig::beta},
          {"omega", &RunConfig::omega},
          {"big-omega", &RunConfig::big_omega},
          {"epsilon", &RunConfig::epsilon},
          {"g", &RunConfig::g},
          {"d", &RunConfig::d},
          {"temperature", &RunConfig::temperature},
          {"theta", &RunConfig::theta},
          {"phi", &RunConfig::phi},
          {"t-max", &RunConfig::t_max},
          {"h", &RunConfig::h},
          {"b-min", &RunConfig::b_min},
          {"b-max", &RunConfig::b_max},
          {"db", &RunConfig::db},
          {"x-max", &RunConfig::x_max}};
}

std::map<std::string, std::optional<int> RunConfig::*> integer_fields() {
  return {{"grid-points", &RunConfig::grid_points},
          {"nu", &RunConfig::nu},
          {"nphi", &RunConfig::nphi},
          {"sector-max", &RunConfig::sector_max},
          {"steps", &RunConfig::steps}};
}

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

void require_spin(const std::optional<double>& s, const char* name) {
  if (s) (void)SpinQuantum::from_value(*s);
  (void)name;
}

void require_positive(const std::optional<double>& v, const std::string& name) {
  if (v) require(*v > 0.0 && std::isfinite(*v), name + " must be positive");
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [command, text] : kCommands)
    if (name == text) return command;
  throw InvalidArgument("unknown command '" + name + "'");
}

const char* to_string(Command command) {
  for (const auto& [c, text] : kCommands)
    if (c == command) return text;
  return "unknown";
}

RunConfig config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  require(doc.is_object(), "config: top level must be a JSON object");

  RunConfig config;
  const auto reals = real_fields();
  const auto integers = integer_fields();
  try {
    for (const auto& [key, value] : doc.items()) {
      if (auto it = reals.find(key); it != reals.end()) {
        config.*(it->second) = value.get<double>();
      } else if (auto jt = integers.find(key); jt != integers.end()) {
        config.*(jt->second) = value.get<int>();
      } else if (key == "command") {
        config.command = parse_command(value.get<std::string>());
      } else if (key == "s-list") {
        config.s_list = value.get<std::vector<double>>();
      } else if (key == "preset") {
        config.preset = value.get<std::string>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "plot") {
        config.plot = value.get<bool>();
      } else {
        throw InvalidArgument("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return config;
}

RunConfig merge(const RunConfig& base, const RunConfig& flags, const std::vector<std::string>& explicit_keys) {
  RunConfig out = base;
  const auto given = [&](const char* key) {
    return std::find(explicit_keys.begin(), explicit_keys.end(), key) != explicit_keys.end();
  };
  for (const auto& [key, field] : real_fields())
    if ((flags.*field).has_value()) out.*field = flags.*field;
  for (const auto& [key, field] : integer_fields())
    if ((flags.*field).has_value()) out.*field = flags.*field;
  if (given("command")) out.command = flags.command;
  if (given("s-list")) out.s_list = flags.s_list;
  if (given("preset")) out.preset = flags.preset;
  if (given("out")) out.out = flags.out;
  if (given("seed")) out.seed = flags.seed;
  if (given("plot")) out.plot = flags.plot;
  return out;
}

std::string config_to_json(const RunConfig& config) {
  json doc;
  doc["command"] = to_string(config.command);
  for (const auto& [key, field] : real_fields())
    if ((config.*field).has_value()) doc[key] = *(config.*field);
  for (const auto& [key, field] : integer_fields())
    if ((config.*field).has_value()) doc[key] = *(config.*field);
  if (!config.s_list.empty()) doc["s-list"] = config.s_list;
  doc["preset"] = config.preset;
  doc["seed"] = config.seed;
  doc["plot"] = config.plot;
  return doc.dump();
}

void validate(const RunConfig& config) {
  for (const auto& [key, field] : real_fields())
    if ((config.*field).has_value()) require(std::isfinite(*(config.*field)), key + " must be finite");
  require_spin(config.s, "s");
  for (double s : config.s_list) {
    (void)SpinQuantum::from_value(s);
    require(s > 0.0, "s-list entries must be positive");
  }
  require_positive(config.temperature, "temperature");
  require_positive(config.x_max, "x-max");
  require_positive(config.h, "h");
  require_positive(config.t_max, "t-max");
  require_positive(config.db, "db");
  if (config.grid_points) require(*config.grid_points >= 201 && *config.grid_points % 2 == 1,
                                  "grid-points must be odd and >= 201");
  if (config.nu) require(*config.nu >= 2, "nu must be >= 2");
  if (config.nphi) require(*config.nphi >= 4, "nphi must be >= 4");
  if (config.sector_max) require(*config.sector_max >= 0, "sector-max must be nonnegative");
  if (config.steps) require(*config.steps >= 1, "steps must be >= 1");

  switch (config.command) {
    case Command::spectrum:
    case Command::potential:
    case Command::correspond:
      require_positive(config.b, "b");
      break;
    case Command::susceptibility:
      if (config.s) require(*config.s > 0.0, "s must be positive for the susceptibility scan");
      break;
    case Command::dynamics:
    case Command::closed_eq:
      if (config.s) require(*config.s > 0.0, "s must be positive");
      break;
    case Command::wk:
      require(config.preset == "zeeman" || config.preset == "uniaxial", "preset must be zeeman or uniaxial");
      require_positive(config.b, "b");
      break;
    case Command::dicke:
    case Command::oscillators:
      break;
  }
}

}  // namespace spinon::cli

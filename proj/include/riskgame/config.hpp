#pragma once

#include <cstdint>
#include <string>

#include "riskgame/engine.hpp"

namespace riskgame::config {

// Full run description as loaded from a config file: one episode setup plus
// the simulation block (rounds, replications, seed).  Parsing is strict -
// unknown keys are rejected so a typo in a parameter name cannot silently
// fall back to a default.
struct RunConfig {
  engine::EpisodeConfig episode;
  std::uint64_t replications = 1;
  std::uint64_t seed = 1;

  // Throws ConfigError naming the violated interval constraint.
  void validate() const;
};

// Parses and validates.  Throws ConfigError on syntax errors, unknown keys,
// wrong types, or violated constraints.
RunConfig parse_config(const std::string& json_text);

// Reads the file and parses it.  Throws IoError when the file cannot be
// read and ConfigError for anything wrong with its contents.
RunConfig load_config_file(const std::string& path);

// Canonical JSON serialization: fixed key order, round-trips through
// parse_config to a semantically identical RunConfig.
std::string serialize_config(const RunConfig& config);

}  // namespace riskgame::config

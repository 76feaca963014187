#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "ddradar/harness.hpp"

namespace ddradar {

inline constexpr int kScenarioSchemaVersion = 1;

/// Parses a JSON scenario document (schema in docs/config_schema.md).
/// Unknown keys, wrong types and a schema_version other than 1 throw
/// std::invalid_argument naming the offending key path.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Deterministic JSON rendering of every setting that affects results:
/// all keys present, fixed key order, no whitespace. `parallel` and `dump`
/// are left out because they cannot change the numbers.
std::string canonical_json(const ScenarioConfig& cfg);

/// FNV-1a 64 of canonical_json(cfg).
std::uint64_t config_hash(const ScenarioConfig& cfg);
std::string config_hash_hex(const ScenarioConfig& cfg);

}  // namespace ddradar

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ctmp/cspace/scenario.hpp"

namespace ctmp {

/// Canonical JSON text (sorted keys, two-space indent). Parsing this text
/// back yields an equal Scenario.
std::string serialize_scenario(const Scenario& scenario);

/// Throws Error{kInvalidScenario} on malformed input and
/// Error{kUnsupportedVersion} on an unknown format_version.
Scenario parse_scenario(std::string_view text);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace ctmp

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "ctmp/cspace/scenario.hpp"
#include "ctmp/preprocess/library.hpp"

namespace ctmp {

inline constexpr std::uint32_t kLibraryFormatVersion = 1;

/// Binary library image (layout in docs/formats.md). Byte-stable: equal
/// libraries serialize to identical bytes on every platform.
std::string serialize_library(const Library& library);

/// Parses and verifies an image against the scenario it claims to cover.
/// Errors: kCorruptLibrary (bad magic, checksum, truncation, malformed
/// content), kUnsupportedVersion, kFingerprintMismatch.
Library deserialize_library(const std::string& bytes, const Scenario& scenario);

void save_library(const Library& library, const std::filesystem::path& path);
Library load_library(const std::filesystem::path& path, const Scenario& scenario);

}  // namespace ctmp

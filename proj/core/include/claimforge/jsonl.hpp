#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace claimforge {

using ordered_json = nlohmann::ordered_json;

// Reads one JSON object per line, skipping blank lines. Throws ConfigError
// with the offending line number on malformed input.
std::vector<ordered_json> read_jsonl(const std::filesystem::path & path);

// Writes one compact JSON object per line. Atomic: write-temp-then-rename.
void write_jsonl(const std::filesystem::path & path, const std::vector<ordered_json> & rows);

// Atomic whole-file write (temp + rename).
void write_file_atomic(const std::filesystem::path & path, std::string_view content);

std::string read_file(const std::filesystem::path & path);

}  // namespace claimforge

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "likegame/trace.hpp"
#include "likegame/types.hpp"

namespace likegame::io {

inline constexpr std::string_view kConfigSchema = "likegame-config/1";
inline constexpr std::string_view kTraceSchema = "likegame-trace/1";
inline constexpr std::string_view kSummarySchema = "likegame-summary/1";

// Pretty-printed JSON with a trailing newline. Serialization always writes
// every top-level key in a fixed order, so equal configs produce equal bytes.
std::string config_to_json_text(const GameConfig& config);

// Strict: unknown keys and wrong schema strings raise ConfigError. Semantic
// checks (bounds, duplicate ids) stay in validate_config.
GameConfig config_from_json_text(const std::string& text);

GameConfig load_config(const std::filesystem::path& path);
void save_config(const GameConfig& config, const std::filesystem::path& path);

// JSONL: one meta line (schema, seed, full config), an optional cheap-talk
// line, one line per round, one metrics line. Line order and key order are
// fixed and floats use the shortest round-trip form, so a rerun with the same
// config and seed is byte-identical.
void write_trace(const RunTrace& trace, std::ostream& out);
void write_trace_file(const RunTrace& trace, const std::filesystem::path& path);
RunTrace read_trace_file(const std::filesystem::path& path);

std::string summary_json_text(const RunTrace& trace);
void write_summary_file(const RunTrace& trace, const std::filesystem::path& path);

}  // namespace likegame::io

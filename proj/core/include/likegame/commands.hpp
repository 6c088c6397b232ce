#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace likegame::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;    // invalid config or engine failure
inline constexpr int kExitIo = 2;        // unreadable/unwritable files
inline constexpr int kExitSweep = 3;     // at least one sweep run failed
inline constexpr int kExitVerify = 4;    // a verification claim failed
inline constexpr int kExitNoData = 5;    // unknown metric or nothing to plot

struct RunOptions {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;  // overrides the config's rng_seed
  std::filesystem::path out_dir;
};

// Writes trace.jsonl, metrics.csv and summary.json into out_dir.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::filesystem::path spec;
  std::filesystem::path out_dir;
  int workers = 0;  // <= 0: LIKEGAME_WORKERS, then hardware threads
};

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

// Prints one line per claim; fails with the first failing claim's name.
int cmd_verify(std::ostream& out, std::ostream& err);

struct PlotOptions {
  std::filesystem::path trace;
  std::string metric;  // fci | reshare_entropy | engagement_concentration |
                       // alignment | amplification
  std::filesystem::path out_svg;
};

int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err);

}  // namespace likegame::cli

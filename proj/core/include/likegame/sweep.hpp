#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "likegame/types.hpp"

namespace likegame::sweep {

struct SweepParameter {
  std::string path;                 // JSON Pointer into the config document
  std::vector<std::string> values;  // JSON literals, substituted verbatim
};

struct SweepSpec {
  GameConfig base;
  std::vector<SweepParameter> parameters;
  std::vector<std::uint64_t> seeds;
};

// Spec file: {"schema": "likegame-sweep/1", "base_config": <path relative to
// the spec file>, "parameters": [{"path", "values" | "range"}...],
// "seeds": {"count": n} | {"list": [...]}}. A count derives seeds from the
// base config's rng_seed via the splitmix sequence.
SweepSpec load_sweep_spec(const std::filesystem::path& path);

struct SweepOutcome {
  int runs = 0;
  int failures = 0;
  std::filesystem::path aggregate_csv;
};

// Runs the full grid, one directory per run (config.json, trace.jsonl,
// metrics.csv, summary.json), then writes aggregate.csv with one row per run
// ordered by parameter values then seed. Rows, directory names and file
// bytes do not depend on the worker count. workers <= 0 resolves from the
// LIKEGAME_WORKERS environment variable, falling back to the hardware thread
// count. Failed runs keep their row (status/error columns) and count toward
// the returned failure total.
SweepOutcome run_sweep(const SweepSpec& spec,
                       const std::filesystem::path& out_dir, int workers = 0);

int resolve_workers();

}  // namespace likegame::sweep

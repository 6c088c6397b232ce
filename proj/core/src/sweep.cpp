#include "likegame/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "likegame/engine.hpp"
#include "likegame/errors.hpp"
#include "likegame/io_json.hpp"
#include "likegame/io_table.hpp"
#include "likegame/rng.hpp"

namespace likegame::sweep {

namespace {

using ojson = nlohmann::ordered_json;

struct PlannedRun {
  std::vector<std::string> param_values;  // JSON literals, parameter order
  std::uint64_t seed = 0;
  std::string dir_name;
};

struct RunRow {
  bool ok = false;
  std::string error;
  std::vector<std::string> metrics;
};

ojson parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ojson::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("sweep spec '" + path.string() + "': " + e.what());
  }
}

std::vector<std::string> range_values(const ojson& range) {
  double start = range.at("start").get<double>();
  double stop = range.at("stop").get<double>();
  double step = range.at("step").get<double>();
  if (step <= 0.0) throw ConfigError("sweep range step must be positive");
  if (stop < start) throw ConfigError("sweep range stop must be >= start");
  std::vector<std::string> out;
  double tolerance = step * 1e-9;
  for (double v = start; v <= stop + tolerance; v += step)
    out.push_back(ojson(v).dump());
  return out;
}

// Applies the planned run's parameter values to the base document, then
// reparses so unknown paths and type mismatches fail like any bad config.
GameConfig materialize(const ojson& base_doc,
                       const std::vector<SweepParameter>& parameters,
                       const PlannedRun& run) {
  ojson doc = base_doc;
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    ojson::json_pointer ptr(parameters[i].path);
    if (!doc.contains(ptr))
      throw ConfigError("sweep parameter path '" + parameters[i].path +
                        "' does not exist in the base config");
    doc[ptr] = ojson::parse(run.param_values[i]);
  }
  GameConfig config = io::config_from_json_text(doc.dump());
  config.rng_seed = run.seed;
  return config;
}

std::vector<std::string> trace_metrics_cells(const RunTrace& trace,
                                             std::size_t fci_columns) {
  std::vector<std::string> cells;
  const MetricsRow* last =
      trace.metrics.rounds.empty() ? nullptr : &trace.metrics.rounds.back();
  for (std::size_t t = 0; t < fci_columns; ++t) {
    if (last && t < last->fci.size())
      cells.push_back(io::format_double(last->fci[t]));
    else
      cells.push_back("");
  }
  cells.push_back(last ? io::format_double(last->reshare_entropy) : "");
  cells.push_back(last ? io::format_double(last->engagement_concentration) : "");
  if (last && !last->exposure_alignment.empty()) {
    double sum = 0.0;
    for (const auto& [id, x] : last->exposure_alignment) sum += x;
    cells.push_back(io::format_double(
        sum / static_cast<double>(last->exposure_alignment.size())));
  } else {
    cells.push_back("");
  }
  double total = 0.0;
  for (const auto& [id, curve] : trace.metrics.amplification)
    if (!curve.empty()) total += curve.back();
  cells.push_back(io::format_double(total));
  return cells;
}

RunRow execute_run(const ojson& base_doc, const SweepSpec& spec,
                   const PlannedRun& run, const std::filesystem::path& dir,
                   std::size_t fci_columns) {
  RunRow row;
  try {
    std::filesystem::create_directories(dir);
    GameConfig config = materialize(base_doc, spec.parameters, run);
    io::save_config(config, dir / "config.json");
    RunTrace trace = run_game(config);
    io::write_trace_file(trace, dir / "trace.jsonl");
    io::write_metrics_csv(trace, dir / "metrics.csv");
    io::write_summary_file(trace, dir / "summary.json");
    row.metrics = trace_metrics_cells(trace, fci_columns);
    row.ok = true;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
    row.metrics.assign(fci_columns + 4, "");
  }
  return row;
}

}  // namespace

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  ojson doc = parse_file(path);
  if (!doc.is_object()) throw ConfigError("sweep spec: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "schema" && key != "base_config" && key != "parameters" &&
        key != "seeds")
      throw ConfigError("sweep spec: unknown key '" + key + "'");
  }
  if (!doc.contains("schema") || doc.at("schema") != "likegame-sweep/1")
    throw ConfigError("sweep spec: expected schema 'likegame-sweep/1'");
  if (!doc.contains("base_config"))
    throw ConfigError("sweep spec: missing 'base_config'");

  SweepSpec spec;
  std::filesystem::path base_path = doc.at("base_config").get<std::string>();
  if (base_path.is_relative()) base_path = path.parent_path() / base_path;
  spec.base = io::load_config(base_path);

  if (doc.contains("parameters")) {
    for (const ojson& p : doc.at("parameters")) {
      for (const auto& [key, value] : p.items()) {
        if (key != "path" && key != "values" && key != "range")
          throw ConfigError("sweep parameter: unknown key '" + key + "'");
      }
      SweepParameter param;
      param.path = p.at("path").get<std::string>();
      bool has_values = p.contains("values");
      bool has_range = p.contains("range");
      if (has_values == has_range)
        throw ConfigError("sweep parameter '" + param.path +
                          "' needs exactly one of 'values' or 'range'");
      if (has_values) {
        for (const ojson& v : p.at("values")) param.values.push_back(v.dump());
      } else {
        param.values = range_values(p.at("range"));
      }
      if (param.values.empty())
        throw ConfigError("sweep parameter '" + param.path + "' has no values");
      spec.parameters.push_back(std::move(param));
    }
  }

  if (!doc.contains("seeds")) throw ConfigError("sweep spec: missing 'seeds'");
  const ojson& seeds = doc.at("seeds");
  bool has_count = seeds.contains("count");
  bool has_list = seeds.contains("list");
  if (has_count == has_list)
    throw ConfigError("sweep seeds: needs exactly one of 'count' or 'list'");
  if (has_count) {
    int count = seeds.at("count").get<int>();
    if (count < 1) throw ConfigError("sweep seeds count must be positive");
    std::uint64_t state = spec.base.rng_seed;
    for (int i = 0; i < count; ++i) spec.seeds.push_back(splitmix64(state));
  } else {
    for (const ojson& s : seeds.at("list"))
      spec.seeds.push_back(s.get<std::uint64_t>());
  }
  if (spec.seeds.empty()) throw ConfigError("sweep spec: no seeds");
  return spec;
}

int resolve_workers() {
  if (const char* env = std::getenv("LIKEGAME_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SweepOutcome run_sweep(const SweepSpec& spec,
                       const std::filesystem::path& out_dir, int workers) {
  if (workers <= 0) workers = resolve_workers();
  ojson base_doc = ojson::parse(io::config_to_json_text(spec.base));

  std::vector<PlannedRun> runs;
  std::vector<std::size_t> cursor(spec.parameters.size(), 0);
  bool done = false;
  while (!done) {
    PlannedRun run;
    for (std::size_t i = 0; i < spec.parameters.size(); ++i)
      run.param_values.push_back(spec.parameters[i].values[cursor[i]]);
    for (std::uint64_t seed : spec.seeds) {
      run.seed = seed;
      runs.push_back(run);
    }
    done = true;
    for (std::size_t i = cursor.size(); i-- > 0;) {
      if (++cursor[i] < spec.parameters[i].values.size()) {
        done = false;
        break;
      }
      cursor[i] = 0;
    }
  }

  std::sort(runs.begin(), runs.end(),
            [](const PlannedRun& a, const PlannedRun& b) {
              if (a.param_values != b.param_values)
                return a.param_values < b.param_values;
              return a.seed < b.seed;
            });
  for (std::size_t i = 0; i < runs.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "run_%05zu", i);
    runs[i].dir_name = buf;
  }

  std::filesystem::create_directories(out_dir);
  std::size_t fci_columns = spec.base.type_centroids.size();
  std::vector<RunRow> rows(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= runs.size()) break;
      rows[i] = execute_run(base_doc, spec, runs[i], out_dir / runs[i].dir_name,
                            fci_columns);
    }
  };
  std::vector<std::thread> pool;
  int active = std::min<int>(workers, static_cast<int>(runs.size()));
  for (int i = 1; i < active; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<std::string> header;
  for (const SweepParameter& p : spec.parameters) header.push_back(p.path);
  header.push_back("seed");
  header.push_back("run_dir");
  header.push_back("status");
  header.push_back("error");
  for (std::size_t t = 0; t < fci_columns; ++t)
    header.push_back("fci_" + std::to_string(t));
  header.push_back("reshare_entropy");
  header.push_back("engagement_concentration");
  header.push_back("mean_alignment");
  header.push_back("total_engagement");

  SweepOutcome outcome;
  outcome.runs = static_cast<int>(runs.size());
  std::vector<std::vector<std::string>> table;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<std::string> row = runs[i].param_values;
    row.push_back(std::to_string(runs[i].seed));
    row.push_back(runs[i].dir_name);
    row.push_back(rows[i].ok ? "ok" : "error");
    row.push_back(rows[i].error);
    for (const std::string& cell : rows[i].metrics) row.push_back(cell);
    table.push_back(std::move(row));
    if (!rows[i].ok) outcome.failures += 1;
  }
  outcome.aggregate_csv = out_dir / "aggregate.csv";
  io::write_csv_file(outcome.aggregate_csv, header, table);
  return outcome;
}

}  // namespace likegame::sweep

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "likegame/commands.hpp"
#include "likegame/engine.hpp"
#include "likegame/errors.hpp"
#include "likegame/io_json.hpp"
#include "likegame/io_table.hpp"
#include "likegame/rng.hpp"
#include "likegame/scenarios.hpp"
#include "likegame/sweep.hpp"
#include "likegame/verify.hpp"
#include "test_support.hpp"

using namespace likegame;
using test_support::mixer_config;
using test_support::read_file;
using test_support::ScratchDir;
using test_support::tiny_config;
using test_support::write_file;

namespace {

namespace fs = std::filesystem;

// ---- oracles -------------------------------------------------------------

// RFC 4180 row splitter, independent of the writer.
std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

// Full-file parse: quoted fields may contain newlines.
std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  const std::string text = read_file(path);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      field += c;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_shell(const std::string& command) {
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string config_dir() { return LIKEGAME_CONFIG_DIR; }
std::string cli_path() { return LIKEGAME_CLI_PATH; }

void insert_after(std::string& text, const std::string& needle, const std::string& addition) {
  const std::size_t pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  text.insert(pos, addition);
}

}  // namespace

// ---- number and field formatting ----------------------------------------------

TEST_CASE("doubles print in their shortest round-trip form") {
  CHECK(io::format_double(0.0) == "0.0");
  CHECK(io::format_double(1.0) == "1.0");
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(-2.25) == "-2.25");
  CHECK(io::format_double(1.0 / 3.0) == "0.3333333333333333");

  RngStream rng(99);
  for (int i = 0; i < 200; ++i) {
    const double x = (rng.next_unit() - 0.5) * std::pow(10.0, (i % 13) - 6);
    CHECK(std::stod(io::format_double(x)) == x);
  }
}

TEST_CASE("csv fields quote only when they must") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("") == "");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(io::csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(split_csv_row(io::csv_field("a,b") + "," + io::csv_field("say \"hi\"")) ==
        std::vector<std::string>{"a,b", "say \"hi\""});
}

// ---- config serialization ---------------------------------------------------------

TEST_CASE("config serialization round-trips byte for byte") {
  const std::vector<GameConfig> configs{
      scenarios::equilibrium_family().front(),
      scenarios::two_player_quid_pro_quo(2, false),
      scenarios::majority_dominance(false),
      scenarios::false_consensus(11),
      scenarios::echo_chamber(7),
      scenarios::signal_boost(1, true),
      scenarios::signal_boost(1, false),
      mixer_config(5),
  };
  for (const GameConfig& cfg : configs) {
    const std::string text = io::config_to_json_text(cfg);
    const GameConfig parsed = io::config_from_json_text(text);
    CHECK(io::config_to_json_text(parsed) == text);
    CHECK(parsed.players == cfg.players);
  }
}

TEST_CASE("the config parser is strict about keys and schema") {
  const std::string good = io::config_to_json_text(scenarios::two_player_quid_pro_quo(2, false));

  std::string unknown_top = good;
  insert_after(unknown_top, "\"k_dims\"", "\"bogus\": 1,\n  ");
  CHECK_THROWS_WITH_AS(io::config_from_json_text(unknown_top),
                       doctest::Contains("unknown key 'bogus'"), ConfigError);

  std::string unknown_player = good;
  insert_after(unknown_player, "\"gamma\"", "\"mood\": 3,\n      ");
  CHECK_THROWS_WITH_AS(io::config_from_json_text(unknown_player),
                       doctest::Contains("unknown key 'mood'"), ConfigError);

  std::string wrong_schema = good;
  const std::size_t at = wrong_schema.find("likegame-config/1");
  REQUIRE(at != std::string::npos);
  wrong_schema.replace(at, 17, "likegame-config/9");
  CHECK_THROWS_WITH_AS(io::config_from_json_text(wrong_schema),
                       doctest::Contains("unsupported schema"), ConfigError);

  CHECK_THROWS_WITH_AS(io::config_from_json_text("{}"), doctest::Contains("missing 'schema'"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(io::config_from_json_text(good.substr(0, 30)),
                       doctest::Contains("parse error"), ConfigError);
  CHECK_THROWS_AS(io::load_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("the checked-in reference configs match their builders") {
  const std::vector<std::pair<std::string, GameConfig>> expected{
      {"equilibrium_small.json", scenarios::equilibrium_family().front()},
      {"quid_pro_quo.json", scenarios::two_player_quid_pro_quo(2, false)},
      {"majority_dominance.json", scenarios::majority_dominance(false)},
      {"false_consensus.json", scenarios::false_consensus(11)},
      {"echo_chamber.json", scenarios::echo_chamber(7)},
      {"signal_boost_boosted.json", scenarios::signal_boost(1, true)},
      {"signal_boost_control.json", scenarios::signal_boost(1, false)},
  };
  for (const auto& [name, cfg] : expected) {
    CHECK(read_file(fs::path(config_dir()) / name) == io::config_to_json_text(cfg));
  }
}

// ---- trace files ------------------------------------------------------------------

TEST_CASE("trace files round-trip and reruns reproduce their bytes") {
  ScratchDir scratch("trace_roundtrip");
  const fs::path p1 = scratch.path / "a.jsonl";
  const fs::path p2 = scratch.path / "b.jsonl";
  const fs::path p3 = scratch.path / "c.jsonl";

  const RunTrace a = run_game(scenarios::echo_chamber(7));
  io::write_trace_file(a, p1);

  const RunTrace b = io::read_trace_file(p1);
  CHECK(b.seed == a.seed);
  CHECK(b.cheap_talk == a.cheap_talk);
  CHECK(b.rounds == a.rounds);
  CHECK(b.metrics == a.metrics);
  CHECK(io::config_to_json_text(b.config) == io::config_to_json_text(a.config));

  io::write_trace_file(b, p2);
  CHECK(read_file(p2) == read_file(p1));

  const RunTrace c = run_game(b.config);
  io::write_trace_file(c, p3);
  CHECK(read_file(p3) == read_file(p1));

  CHECK(read_file(p1).find('\r') == std::string::npos);
  CHECK_THROWS_AS(io::read_trace_file(scratch.path / "missing.jsonl"), IoError);
}

TEST_CASE("trace reading rejects foreign or damaged files") {
  ScratchDir scratch("trace_damage");
  const fs::path path = scratch.path / "t.jsonl";
  write_file(path, "{\"schema\": \"other/1\"}\n");
  CHECK_THROWS_AS(io::read_trace_file(path), IoError);
  write_file(path, "not json\n");
  CHECK_THROWS_AS(io::read_trace_file(path), IoError);
}

// ---- summaries ----------------------------------------------------------------------

TEST_CASE("the summary reports exactly what the trace holds") {
  const RunTrace trace = run_game(scenarios::false_consensus(11));
  const std::string text = io::summary_json_text(trace);
  CHECK(text.find('\r') == std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(text);

  CHECK(j.at("schema") == "likegame-summary/1");
  CHECK(j.at("seed").get<std::uint64_t>() == trace.seed);
  CHECK(j.at("players").get<int>() == trace.config.n_players());
  CHECK(j.at("horizon").get<int>() == trace.config.horizon);

  std::map<std::string, int> counts{{"noop", 0}, {"like", 0}, {"reshare", 0}, {"share", 0}};
  for (const RoundRecord& r : trace.rounds) {
    for (const ActionRecord& a : r.actions) counts[std::string(to_string(a.kind))] += 1;
  }
  for (const auto& [kind, count] : counts) {
    CHECK(j.at("actions").at(kind).get<int>() == count);
  }

  const MetricsRow& last = trace.metrics.rounds.back();
  CHECK(j.at("final_metrics").at("round").get<int>() == last.round);
  CHECK(j.at("final_metrics").at("reshare_entropy").get<double>() == last.reshare_entropy);
  CHECK(j.at("final_metrics").at("engagement_concentration").get<double>() ==
        last.engagement_concentration);
  REQUIRE(j.at("final_metrics").at("fci").size() == last.fci.size());
  for (std::size_t t = 0; t < last.fci.size(); ++t) {
    CHECK(j.at("final_metrics").at("fci").at(t).get<double>() == last.fci[t]);
  }

  for (const auto& [id, curve] : trace.metrics.amplification) {
    CHECK(j.at("total_engagement").at(id.value).get<double>() == curve.back());
  }

  const auto& final_utilities = j.at("final_utilities");
  for (const auto& [id, u] : trace.rounds.back().utilities) {
    CHECK(final_utilities.at(id.value).at("combined").get<double>() == u.combined);
  }
}

// ---- metrics csv ---------------------------------------------------------------------

TEST_CASE("the metrics table lines up with the metrics block") {
  const RunTrace trace = run_game(scenarios::false_consensus(11));
  const auto header = io::metrics_csv_header(trace.config);
  const auto rows = io::metrics_csv_rows(trace);
  REQUIRE(rows.size() == trace.metrics.rounds.size());
  CHECK(header.front() == "round");
  CHECK(header[1] == "fci_0");
  CHECK(header[2] == "fci_1");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    REQUIRE(rows[r].size() == header.size());
    const MetricsRow& m = trace.metrics.rounds[r];
    CHECK(rows[r][0] == std::to_string(m.round));
    CHECK(rows[r][1] == io::format_double(m.fci[0]));
    CHECK(rows[r][3] == io::format_double(m.reshare_entropy));
  }
}

// ---- run command -----------------------------------------------------------------------

TEST_CASE("a run writes three files and reruns are byte-identical") {
  ScratchDir scratch("cli_run");
  std::ostringstream out, err;
  cli::RunOptions options;
  options.config = fs::path(config_dir()) / "echo_chamber.json";
  options.out_dir = scratch.path / "one";
  REQUIRE(cli::cmd_run(options, out, err) == cli::kExitOk);
  CHECK(err.str().empty());
  CHECK(out.str().find("ran 10 players") != std::string::npos);
  for (const char* name : {"trace.jsonl", "metrics.csv", "summary.json"}) {
    CHECK(fs::exists(options.out_dir / name));
    CHECK(read_file(options.out_dir / name).find('\r') == std::string::npos);
  }

  cli::RunOptions again = options;
  again.out_dir = scratch.path / "two";
  REQUIRE(cli::cmd_run(again, out, err) == cli::kExitOk);
  for (const char* name : {"trace.jsonl", "metrics.csv", "summary.json"}) {
    CHECK(read_file(options.out_dir / name) == read_file(again.out_dir / name));
  }
}

TEST_CASE("a seed override changes the run and is recorded") {
  ScratchDir scratch("cli_seed");
  std::ostringstream out, err;
  cli::RunOptions options;
  options.config = fs::path(config_dir()) / "echo_chamber.json";
  options.out_dir = scratch.path / "seeded";
  options.seed = 99;
  REQUIRE(cli::cmd_run(options, out, err) == cli::kExitOk);
  const RunTrace trace = io::read_trace_file(options.out_dir / "trace.jsonl");
  CHECK(trace.seed == 99);
  CHECK(trace.config.rng_seed == 99);
}

TEST_CASE("run failures map to distinct exit codes") {
  ScratchDir scratch("cli_run_fail");
  std::ostringstream out, err;

  cli::RunOptions missing;
  missing.config = scratch.path / "absent.json";
  missing.out_dir = scratch.path / "o1";
  CHECK(cli::cmd_run(missing, out, err) == cli::kExitIo);
  CHECK(err.str().find("error:") != std::string::npos);

  GameConfig bad = tiny_config();
  bad.players[0].gamma = 2.0;
  io::save_config(bad, scratch.path / "bad.json");
  cli::RunOptions invalid;
  invalid.config = scratch.path / "bad.json";
  invalid.out_dir = scratch.path / "o2";
  CHECK(cli::cmd_run(invalid, out, err) == cli::kExitConfig);

  write_file(scratch.path / "garbage.json", "not json at all");
  cli::RunOptions garbage;
  garbage.config = scratch.path / "garbage.json";
  garbage.out_dir = scratch.path / "o3";
  CHECK(cli::cmd_run(garbage, out, err) == cli::kExitConfig);
}

// ---- sweeps ---------------------------------------------------------------------------

TEST_CASE("a sweep runs its grid and the aggregate matches the run outputs") {
  ScratchDir scratch("sweep_grid");
  io::save_config(mixer_config(5), scratch.path / "base.json");
  write_file(scratch.path / "spec.json", R"({
  "schema": "likegame-sweep/1",
  "base_config": "base.json",
  "parameters": [
    {"path": "/discount", "values": [0.5, 1.0]}
  ],
  "seeds": {"list": [3, 4]}
}
)");

  std::ostringstream out, err;
  cli::SweepOptions options;
  options.spec = scratch.path / "spec.json";
  options.out_dir = scratch.path / "out";
  options.workers = 1;
  REQUIRE(cli::cmd_sweep(options, out, err) == cli::kExitOk);
  CHECK(out.str().find("4 runs, 0 failures") != std::string::npos);

  const auto rows = read_csv(options.out_dir / "aggregate.csv");
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"/discount", "seed", "run_dir", "status", "error",
                                            "reshare_entropy", "engagement_concentration",
                                            "mean_alignment", "total_engagement"});
  CHECK(rows[1][0] == "0.5");
  CHECK(rows[1][1] == "3");
  CHECK(rows[2][1] == "4");
  CHECK(rows[3][0] == "1.0");

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const fs::path run_dir = options.out_dir / rows[i][2];
    CHECK(rows[i][3] == "ok");
    CHECK(rows[i][4] == "");
    const RunTrace trace = io::read_trace_file(run_dir / "trace.jsonl");
    CHECK(io::format_double(trace.config.discount) == rows[i][0]);
    CHECK(std::to_string(trace.seed) == rows[i][1]);

    const MetricsRow& last = trace.metrics.rounds.back();
    CHECK(rows[i][5] == io::format_double(last.reshare_entropy));
    CHECK(rows[i][6] == io::format_double(last.engagement_concentration));
    double align = 0.0;
    for (const auto& [id, x] : last.exposure_alignment) align += x;
    align /= static_cast<double>(last.exposure_alignment.size());
    CHECK(rows[i][7] == io::format_double(align));
    double total = 0.0;
    for (const auto& [id, curve] : trace.metrics.amplification) total += curve.back();
    CHECK(rows[i][8] == io::format_double(total));

    for (const char* name : {"config.json", "trace.jsonl", "metrics.csv", "summary.json"}) {
      CHECK(fs::exists(run_dir / name));
    }
  }
}

TEST_CASE("sweep outputs do not depend on the worker count") {
  ScratchDir scratch("sweep_workers");
  io::save_config(mixer_config(5), scratch.path / "base.json");
  write_file(scratch.path / "spec.json", R"({
  "schema": "likegame-sweep/1",
  "base_config": "base.json",
  "parameters": [
    {"path": "/discount", "values": [0.5, 1.0]},
    {"path": "/reshare_weight", "values": [2.0, 3.0]}
  ],
  "seeds": {"list": [3, 4]}
}
)");
  const sweep::SweepSpec spec = sweep::load_sweep_spec(scratch.path / "spec.json");

  const auto serial = sweep::run_sweep(spec, scratch.path / "serial", 1);
  const auto threaded = sweep::run_sweep(spec, scratch.path / "threaded", 2);
  CHECK(serial.runs == 8);
  CHECK(threaded.runs == 8);
  CHECK(serial.failures == 0);
  CHECK(threaded.failures == 0);
  CHECK(read_file(serial.aggregate_csv) == read_file(threaded.aggregate_csv));
  for (int i = 0; i < 8; ++i) {
    char name[16];
    std::snprintf(name, sizeof(name), "run_%05d", i);
    CHECK(read_file(scratch.path / "serial" / name / "trace.jsonl") ==
          read_file(scratch.path / "threaded" / name / "trace.jsonl"));
  }
}

TEST_CASE("failing grid points keep their row and flip the exit code") {
  ScratchDir scratch("sweep_fail");
  io::save_config(mixer_config(5), scratch.path / "base.json");
  write_file(scratch.path / "spec.json", R"({
  "schema": "likegame-sweep/1",
  "base_config": "base.json",
  "parameters": [
    {"path": "/visibility_floor", "values": [0.5, 7.0]}
  ],
  "seeds": {"list": [3, 4]}
}
)");

  std::ostringstream out, err;
  cli::SweepOptions options;
  options.spec = scratch.path / "spec.json";
  options.out_dir = scratch.path / "out";
  options.workers = 1;
  CHECK(cli::cmd_sweep(options, out, err) == cli::kExitSweep);
  CHECK(out.str().find("4 runs, 2 failures") != std::string::npos);
  CHECK(err.str().find("failed") != std::string::npos);

  const auto rows = read_csv(options.out_dir / "aggregate.csv");
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][3] == "ok");
  CHECK(rows[2][3] == "ok");
  for (std::size_t i : {std::size_t{3}, std::size_t{4}}) {
    CHECK(rows[i][0] == "7.0");
    CHECK(rows[i][3] == "error");
    CHECK(rows[i][4].find("visibility_floor") != std::string::npos);
    CHECK(rows[i][5] == "");
    const fs::path run_dir = options.out_dir / rows[i][2];
    CHECK(fs::exists(run_dir / "config.json"));
    CHECK(!fs::exists(run_dir / "trace.jsonl"));
  }
}

TEST_CASE("sweep specs validate keys, parameters and seeds") {
  ScratchDir scratch("sweep_spec");
  io::save_config(tiny_config(), scratch.path / "base.json");
  const auto spec_with = [&](const std::string& body) {
    write_file(scratch.path / "s.json", body);
    return sweep::load_sweep_spec(scratch.path / "s.json");
  };

  CHECK_THROWS_WITH_AS(
      spec_with(R"({"schema": "likegame-sweep/1", "base_config": "base.json", "bogus": 1,
                    "seeds": {"list": [1]}})"),
      doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(
      spec_with(R"({"schema": "likegame-sweep/2", "base_config": "base.json",
                    "seeds": {"list": [1]}})"),
      doctest::Contains("schema"), ConfigError);
  CHECK_THROWS_WITH_AS(
      spec_with(R"({"schema": "likegame-sweep/1", "base_config": "base.json"})"),
      doctest::Contains("seeds"), ConfigError);
  CHECK_THROWS_WITH_AS(
      spec_with(R"({"schema": "likegame-sweep/1", "base_config": "base.json",
                    "parameters": [{"path": "/discount"}], "seeds": {"list": [1]}})"),
      doctest::Contains("exactly one of 'values' or 'range'"), ConfigError);
  CHECK_THROWS_WITH_AS(
      spec_with(R"({"schema": "likegame-sweep/1", "base_config": "base.json",
                    "parameters": [{"path": "/discount",
                                    "range": {"start": 0, "stop": 1, "step": 0}}],
                    "seeds": {"list": [1]}})"),
      doctest::Contains("step"), ConfigError);
  CHECK_THROWS_WITH_AS(
      spec_with(R"({"schema": "likegame-sweep/1", "base_config": "base.json",
                    "seeds": {"count": 0}})"),
      doctest::Contains("count"), ConfigError);

  const sweep::SweepSpec ranged = spec_with(
      R"({"schema": "likegame-sweep/1", "base_config": "base.json",
          "parameters": [{"path": "/discount",
                          "range": {"start": 0.0, "stop": 1.0, "step": 0.5}}],
          "seeds": {"list": [1, 2]}})");
  REQUIRE(ranged.parameters.size() == 1);
  CHECK(ranged.parameters[0].values == std::vector<std::string>{"0.0", "0.5", "1.0"});
  CHECK(ranged.seeds == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("a seed count derives the seeds from the base seed's splitmix chain") {
  const sweep::SweepSpec spec =
      sweep::load_sweep_spec(fs::path(config_dir()) / "sweep_example.json");
  CHECK(spec.base.rng_seed == 7);
  REQUIRE(spec.parameters.size() == 1);
  CHECK(spec.parameters[0].path == "/visibility_floor");
  CHECK(spec.parameters[0].values == std::vector<std::string>{"0.05", "0.2", "1.0"});

  std::uint64_t state = spec.base.rng_seed;
  std::vector<std::uint64_t> expected;
  for (int i = 0; i < 3; ++i) expected.push_back(splitmix64(state));
  CHECK(spec.seeds == expected);
}

TEST_CASE("worker resolution honors the environment variable") {
  setenv("LIKEGAME_WORKERS", "3", 1);
  CHECK(sweep::resolve_workers() == 3);
  setenv("LIKEGAME_WORKERS", "0", 1);
  CHECK(sweep::resolve_workers() >= 1);
  unsetenv("LIKEGAME_WORKERS");
  CHECK(sweep::resolve_workers() >= 1);
}

// ---- verification ------------------------------------------------------------------------

TEST_CASE("verification passes and prints one line per claim") {
  std::ostringstream out, err;
  REQUIRE(cli::cmd_verify(out, err) == cli::kExitOk);
  CHECK(err.str().empty());
  const std::vector<std::string> names{"endpoint-reductions", "idealist-equilibrium",
                                       "belief-invariance",   "reciprocity-cycle",
                                       "majority-dominance",  "ledger-conservation"};
  std::istringstream lines(out.str());
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    REQUIRE(i < names.size());
    CHECK(line.find(names[i]) == 0);
    CHECK(line.find("pass") != std::string::npos);
    ++i;
  }
  CHECK(i == names.size());
}

TEST_CASE("a wrong utility combination is caught by the endpoint claim") {
  verify::VerifyHooks hooks;
  hooks.combine = [](double gamma, double personal, double social) {
    return gamma * social + (1.0 - gamma) * personal;
  };
  const auto results = verify::run_verification(hooks);
  REQUIRE(results.size() == 6);
  CHECK(results[0].name == "endpoint-reductions");
  CHECK(!results[0].passed);
  CHECK(!results[0].detail.empty());
  for (std::size_t i = 1; i < results.size(); ++i) CHECK(results[i].passed);
}

TEST_CASE("a tampered replay is caught by the ledger claim") {
  verify::VerifyHooks hooks;
  hooks.tamper_self_engagement = true;
  const auto results = verify::run_verification(hooks);
  REQUIRE(results.size() == 6);
  CHECK(results.back().name == "ledger-conservation");
  CHECK(!results.back().passed);
  for (std::size_t i = 0; i + 1 < results.size(); ++i) CHECK(results[i].passed);
}

// ---- plots ---------------------------------------------------------------------------------

TEST_CASE("plots render deterministic svg for every metric") {
  ScratchDir scratch("plot_ok");
  const RunTrace trace = run_game(scenarios::false_consensus(11));
  io::write_trace_file(trace, scratch.path / "trace.jsonl");

  for (const std::string metric : {"fci", "reshare_entropy", "engagement_concentration",
                                   "alignment", "amplification"}) {
    std::ostringstream out, err;
    cli::PlotOptions options;
    options.trace = scratch.path / "trace.jsonl";
    options.metric = metric;
    options.out_svg = scratch.path / (metric + ".svg");
    REQUIRE(cli::cmd_plot(options, out, err) == cli::kExitOk);
    const std::string svg = read_file(options.out_svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find('\r') == std::string::npos);

    options.out_svg = scratch.path / (metric + "_again.svg");
    REQUIRE(cli::cmd_plot(options, out, err) == cli::kExitOk);
    CHECK(read_file(scratch.path / (metric + ".svg")) == read_file(options.out_svg));
  }

  const std::string fci_svg = read_file(scratch.path / "fci.svg");
  CHECK(fci_svg.find("fci_0") != std::string::npos);
  CHECK(fci_svg.find("fci_1") != std::string::npos);
}

TEST_CASE("plot failures are split between io and no-data") {
  ScratchDir scratch("plot_fail");
  io::write_trace_file(run_game(tiny_config()), scratch.path / "untyped.jsonl");

  std::ostringstream out, err;
  cli::PlotOptions options;
  options.trace = scratch.path / "missing.jsonl";
  options.metric = "fci";
  options.out_svg = scratch.path / "x.svg";
  CHECK(cli::cmd_plot(options, out, err) == cli::kExitIo);

  options.trace = scratch.path / "untyped.jsonl";
  options.metric = "nope";
  CHECK(cli::cmd_plot(options, out, err) == cli::kExitNoData);
  CHECK(err.str().find("unknown metric") != std::string::npos);

  std::ostringstream err2;
  options.metric = "fci";
  CHECK(cli::cmd_plot(options, out, err2) == cli::kExitNoData);
  CHECK(err2.str().find("no data") != std::string::npos);
}

// ---- the installed binary --------------------------------------------------------------------

TEST_CASE("the command-line binary wires the commands to exit codes") {
  ScratchDir scratch("cli_binary");
  const std::string quiet = " > " + (scratch.path / "out.txt").string() + " 2>&1";

  CHECK(run_shell(cli_path() + " run --config " + config_dir() + "/quid_pro_quo.json --seed 5" +
                  " --out " + (scratch.path / "run").string() + quiet) == cli::kExitOk);
  CHECK(fs::exists(scratch.path / "run" / "trace.jsonl"));
  const RunTrace trace = io::read_trace_file(scratch.path / "run" / "trace.jsonl");
  CHECK(trace.seed == 5);

  CHECK(run_shell(cli_path() + " run --config " + (scratch.path / "absent.json").string() +
                  " --out " + (scratch.path / "r2").string() + quiet) == cli::kExitIo);
  CHECK(run_shell(cli_path() + " frobnicate" + quiet) == cli::kExitConfig);
  CHECK(run_shell(cli_path() + " plot --in " + (scratch.path / "run" / "trace.jsonl").string() +
                  " --metric nope --out " + (scratch.path / "p.svg").string() + quiet) ==
        cli::kExitNoData);
}

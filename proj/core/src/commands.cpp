#include "likegame/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "likegame/engine.hpp"
#include "likegame/errors.hpp"
#include "likegame/io_json.hpp"
#include "likegame/io_table.hpp"
#include "likegame/sweep.hpp"
#include "likegame/verify.hpp"

namespace likegame::cli {

namespace {

int classify(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  return kExitConfig;
}

std::vector<io::ChartSeries> metric_series(const RunTrace& trace,
                                           const std::string& metric) {
  std::vector<io::ChartSeries> series;
  const auto& rounds = trace.metrics.rounds;
  if (metric == "fci") {
    std::size_t types = trace.config.type_centroids.size();
    for (std::size_t t = 0; t < types; ++t) {
      io::ChartSeries s;
      s.name = "fci_" + std::to_string(t);
      for (const MetricsRow& r : rounds)
        if (t < r.fci.size()) s.points.emplace_back(r.round, r.fci[t]);
      series.push_back(std::move(s));
    }
  } else if (metric == "reshare_entropy" ||
             metric == "engagement_concentration") {
    io::ChartSeries s;
    s.name = metric;
    for (const MetricsRow& r : rounds)
      s.points.emplace_back(r.round, metric == "reshare_entropy"
                                         ? r.reshare_entropy
                                         : r.engagement_concentration);
    series.push_back(std::move(s));
  } else if (metric == "alignment") {
    io::ChartSeries s;
    s.name = "mean alignment";
    for (const MetricsRow& r : rounds) {
      if (r.exposure_alignment.empty()) continue;
      double sum = 0.0;
      for (const auto& [id, x] : r.exposure_alignment) sum += x;
      s.points.emplace_back(
          r.round, sum / static_cast<double>(r.exposure_alignment.size()));
    }
    series.push_back(std::move(s));
  } else if (metric == "amplification") {
    for (const auto& [id, curve] : trace.metrics.amplification) {
      io::ChartSeries s;
      s.name = id.value;
      for (std::size_t r = 0; r < curve.size(); ++r)
        s.points.emplace_back(static_cast<double>(r), curve[r]);
      series.push_back(std::move(s));
    }
  } else {
    throw std::invalid_argument(
        "unknown metric '" + metric +
        "' (available: fci, reshare_entropy, engagement_concentration, "
        "alignment, amplification)");
  }
  std::erase_if(series,
                [](const io::ChartSeries& s) { return s.points.empty(); });
  return series;
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    GameConfig config = io::load_config(options.config);
    if (options.seed) config.rng_seed = *options.seed;
    RunTrace trace = run_game(config);
    std::filesystem::create_directories(options.out_dir);
    io::write_trace_file(trace, options.out_dir / "trace.jsonl");
    io::write_metrics_csv(trace, options.out_dir / "metrics.csv");
    io::write_summary_file(trace, options.out_dir / "summary.json");
    out << "ran " << config.n_players() << " players for " << config.horizon
        << " rounds (seed " << config.rng_seed << "); outputs in "
        << options.out_dir.string() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    return classify(e, err);
  }
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  try {
    sweep::SweepSpec spec = sweep::load_sweep_spec(options.spec);
    sweep::SweepOutcome outcome =
        sweep::run_sweep(spec, options.out_dir, options.workers);
    out << outcome.runs << " runs, " << outcome.failures
        << " failures; aggregate at " << outcome.aggregate_csv.string() << '\n';
    if (outcome.failures > 0) {
      err << "error: " << outcome.failures << " sweep run(s) failed\n";
      return kExitSweep;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return classify(e, err);
  }
}

int cmd_verify(std::ostream& out, std::ostream& err) {
  auto results = verify::run_verification();
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  const verify::ClaimResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name
        << (r.passed ? "pass  " : "FAIL  ") << r.detail << '\n';
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    err << "error: verification failed: " << first_failure->name << '\n';
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err) {
  RunTrace trace;
  try {
    trace = io::read_trace_file(options.trace);
  } catch (const std::exception& e) {
    return classify(e, err);
  }
  std::vector<io::ChartSeries> series;
  try {
    series = metric_series(trace, options.metric);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoData;
  }
  if (series.empty()) {
    err << "error: no data for metric '" << options.metric << "'\n";
    return kExitNoData;
  }
  try {
    io::write_line_chart_svg(options.out_svg, options.metric + " by round",
                             "round", options.metric, series);
  } catch (const std::exception& e) {
    return classify(e, err);
  }
  out << "wrote " << options.out_svg.string() << '\n';
  return kExitOk;
}

}  // namespace likegame::cli

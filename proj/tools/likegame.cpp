#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "likegame/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"deterministic social-feed game simulator and exact solver"};
  app.require_subcommand(1);

  likegame::cli::RunOptions run_options;
  CLI::App* run = app.add_subcommand("run", "simulate one seeded game");
  run->add_option("--config", run_options.config, "config JSON path")
      ->required();
  std::uint64_t seed_value = 0;
  CLI::Option* seed_opt =
      run->add_option("--seed", seed_value, "override the config rng_seed");
  run->add_option("--out", run_options.out_dir, "output directory")->required();

  likegame::cli::SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid");
  sweep->add_option("--spec", sweep_options.spec, "sweep spec JSON path")
      ->required();
  sweep->add_option("--out", sweep_options.out_dir, "output directory")
      ->required();
  sweep->add_option("--workers", sweep_options.workers,
                    "worker threads (default: LIKEGAME_WORKERS or hardware)");

  CLI::App* verify =
      app.add_subcommand("verify", "check the model's canned claims");

  likegame::cli::PlotOptions plot_options;
  CLI::App* plot = app.add_subcommand("plot", "render one metric to SVG");
  plot->add_option("--in", plot_options.trace, "trace.jsonl path")->required();
  plot->add_option("--metric", plot_options.metric,
                   "fci | reshare_entropy | engagement_concentration | "
                   "alignment | amplification")
      ->required();
  plot->add_option("--out", plot_options.out_svg, "output SVG path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return likegame::cli::kExitConfig;
  }

  if (run->parsed()) {
    if (seed_opt->count() > 0) run_options.seed = seed_value;
    return likegame::cli::cmd_run(run_options, std::cout, std::cerr);
  }
  if (sweep->parsed())
    return likegame::cli::cmd_sweep(sweep_options, std::cout, std::cerr);
  if (verify->parsed()) return likegame::cli::cmd_verify(std::cout, std::cerr);
  if (plot->parsed())
    return likegame::cli::cmd_plot(plot_options, std::cout, std::cerr);
  return likegame::cli::kExitConfig;
}

#include <benchmark/benchmark.h>

#include "likegame/engine.hpp"
#include "likegame/legality.hpp"
#include "likegame/scenarios.hpp"
#include "likegame/state.hpp"

namespace {

using namespace likegame;

void BM_RunEchoChamber(benchmark::State& state) {
  const GameConfig cfg = scenarios::echo_chamber(7);
  for (auto _ : state) benchmark::DoNotOptimize(run_game(cfg));
}
BENCHMARK(BM_RunEchoChamber);

void BM_RunFalseConsensus(benchmark::State& state) {
  const GameConfig cfg = scenarios::false_consensus(11);
  for (auto _ : state) benchmark::DoNotOptimize(run_game(cfg));
}
BENCHMARK(BM_RunFalseConsensus);

// Horizon scaling of the full pipeline (policies, visibility, metrics).
void BM_RunByHorizon(benchmark::State& state) {
  GameConfig cfg = scenarios::echo_chamber(7);
  cfg.horizon = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_game(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunByHorizon)->Arg(10)->Arg(40)->Arg(160);

void BM_SampleVisibility(benchmark::State& state) {
  const GameConfig cfg = scenarios::echo_chamber(7);
  GameState game_state = init_state(cfg);
  for (const PlayerSpec& p : cfg.players)
    apply_action(game_state, make_share(0, p.id, p.pool.front().id), cfg);
  const VisibilityDraws draws(cfg.rng_seed);
  int round = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_visibility(game_state, cfg, draws, round));
    round = round % 1000 + 1;
  }
}
BENCHMARK(BM_SampleVisibility);

void BM_LegalActions(benchmark::State& state) {
  const GameConfig cfg = scenarios::echo_chamber(7);
  const RunTrace trace = run_game(cfg);
  const GameState final_state = replay_trace(trace);
  const PlayerId& actor = cfg.players.front().id;
  for (auto _ : state)
    benchmark::DoNotOptimize(legal_actions(final_state, cfg, actor));
}
BENCHMARK(BM_LegalActions);

}  // namespace

#include <benchmark/benchmark.h>

#include "likegame/oracle.hpp"
#include "likegame/scenarios.hpp"

namespace {

using namespace likegame;

void BM_BuildNormalForm(benchmark::State& state) {
  const GameConfig cfg = scenarios::equilibrium_family().back();
  const auto menus = scenarios::share_noop_menus(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(build_normal_form(cfg, menus));
}
BENCHMARK(BM_BuildNormalForm);

void BM_FindPureNash(benchmark::State& state) {
  const GameConfig cfg = scenarios::equilibrium_family().back();
  const NormalFormGame game = build_normal_form(cfg, scenarios::share_noop_menus(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(find_pure_nash(game));
}
BENCHMARK(BM_FindPureNash);

void BM_WeakDominance(benchmark::State& state) {
  const GameConfig cfg = scenarios::majority_dominance(false);
  const NormalFormGame game = build_normal_form(cfg, scenarios::majority_menus(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(weak_dominance(game, 0, 0, 1));
}
BENCHMARK(BM_WeakDominance);

void BM_EnumerateContingentPlans(benchmark::State& state) {
  const GameConfig cfg = scenarios::two_player_quid_pro_quo(2, false);
  const PlayerId player = cfg.players.front().id;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_contingent_plans(cfg, player));
}
BENCHMARK(BM_EnumerateContingentPlans);

}  // namespace

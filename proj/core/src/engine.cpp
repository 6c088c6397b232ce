#include "likegame/engine.hpp"

#include <algorithm>
#include <string>

#include "likegame/errors.hpp"
#include "likegame/legality.hpp"
#include "likegame/metrics.hpp"
#include "likegame/utility.hpp"
#include "likegame/validate.hpp"
#include "likegame/vec.hpp"

namespace likegame {
namespace {

std::string describe(const ActionRecord& a) {
  std::string out = std::string(to_string(a.kind));
  if (a.content) out += " " + a.content->value;
  if (a.source) out += " from " + a.source->value;
  return out;
}

double visibility_probability(const GameState& state, const GameConfig& config,
                              const ContentId& content, double mass_max) {
  if (mass_max <= 0.0) return config.visibility_floor;
  const double mass =
      state.ledger.visibility_mass(content, config.like_weight, config.reshare_weight);
  return config.visibility_floor + (1.0 - config.visibility_floor) * mass / mass_max;
}

}  // namespace

CheapTalkRecord run_cheap_talk(const GameConfig& config) {
  CheapTalkRecord record;
  std::vector<Vec> displays;
  for (const PlayerSpec* p : config.players_by_id()) {
    const ContentId shown = cheap_talk_display(*p, config);
    const ContentItem* item = config.find_content(shown);
    record.displays[p->id] = {shown, item->vector};
    displays.push_back(item->vector);
  }

  // Level-1: leave-one-out mean of the displays. Level-2: mean over players
  // of their level-1 estimates, which collapses to the global display mean.
  const std::size_t n = displays.size();
  const Vec global = mean_point(displays);
  for (const PlayerSpec* p : config.players_by_id()) {
    BeliefState belief = p->belief;
    if (n > 1) {
      const Vec& own = record.displays.at(p->id).vector;
      Vec others(global.size(), 0.0);
      for (std::size_t d = 0; d < others.size(); ++d) {
        others[d] = (global[d] * static_cast<double>(n) - own[d]) / static_cast<double>(n - 1);
      }
      belief.majority_centroid_estimate = others;
      belief.majority_centroid_of_centroid_estimate = global;
    }
    record.beliefs[p->id] = belief;
  }
  return record;
}

std::map<PlayerId, std::set<SharePair>> sample_visibility(const GameState& state,
                                                          const GameConfig& config,
                                                          const VisibilityDraws& draws,
                                                          int round) {
  std::map<PlayerId, std::set<SharePair>> visible;
  double mass_max = 0.0;
  if (config.info_mode == InfoMode::Imperfect) {
    for (const auto& [id, item] : state.catalog) {
      mass_max = std::max(
          mass_max, state.ledger.visibility_mass(id, config.like_weight, config.reshare_weight));
    }
  }
  for (const PlayerSpec& viewer : config.players) {
    std::set<SharePair>& pairs = visible[viewer.id];
    for (const auto& [pair, first_round] : state.pair_round) {
      if (pair.sharer == viewer.id) continue;
      if (config.info_mode == InfoMode::Perfect) {
        pairs.insert(pair);
        continue;
      }
      const double p = visibility_probability(state, config, pair.content, mass_max);
      const double u =
          draws.unit(round, viewer.id.value, pair.content.value, pair.sharer.value);
      if (u < p) pairs.insert(pair);
    }
  }
  return visible;
}

std::map<PlayerId, UtilityBreakdown> step_round(GameState& state,
                                                const std::vector<ActionRecord>& chosen,
                                                const GameConfig& config,
                                                const VisibilityDraws& draws) {
  // Simultaneous moves: all legality checks run against the pre-round state.
  for (const ActionRecord& action : chosen) {
    if (action.round != state.round) {
      throw EngineError("player '" + action.actor.value + "' returned an action for round " +
                        std::to_string(action.round) + " at round " +
                        std::to_string(state.round));
    }
    if (!is_legal(state, config, action)) {
      throw EngineError("player '" + action.actor.value + "' chose illegal action [" +
                        describe(action) + "] at round " + std::to_string(state.round));
    }
  }
  for (const ActionRecord& action : chosen) apply_action(state, action, config);

  std::map<PlayerId, UtilityBreakdown> utilities;
  for (const PlayerSpec& p : config.players) {
    utilities[p.id] = combined_utility(p, state, config, state.round);
  }

  state.round += 1;
  state.visible = sample_visibility(state, config, draws, state.round);
  return utilities;
}

RunTrace run_game(const GameConfig& config) {
  return run_game_with(config, {});
}

RunTrace run_game_with(const GameConfig& config,
                       const std::map<PlayerId, PolicyFn>& overrides) {
  require_valid(config);

  RunTrace trace;
  trace.config = config;
  trace.seed = config.rng_seed;

  GameState state = init_state(config);
  RngStream rng(config.rng_seed);
  const VisibilityDraws draws(config.rng_seed);

  if (config.cheap_talk) {
    trace.cheap_talk = run_cheap_talk(config);
    state.beliefs = trace.cheap_talk->beliefs;
  }

  const std::vector<const PlayerSpec*> order = config.players_by_id();
  std::map<PlayerId, PolicyFn> policies;
  for (const PlayerSpec* p : order) {
    auto it = overrides.find(p->id);
    policies[p->id] = it != overrides.end() ? it->second : make_policy(p->policy);
  }

  for (int round = 0; round <= config.horizon; ++round) {
    RoundRecord record;
    record.round = round;
    record.visible = state.visible;

    std::vector<ActionRecord> chosen;
    for (const PlayerSpec* p : order) {
      const std::vector<ActionRecord> legal = legal_actions(state, config, p->id);
      if (legal.empty()) {
        throw EngineError("player '" + p->id.value + "' has no legal action at round " +
                          std::to_string(round));
      }
      PolicyContext ctx{p, &config, &rng};
      PolicyChoice choice = policies.at(p->id)(state, legal, ctx);
      chosen.push_back(choice.action);
      for (std::string& note : choice.notes) record.annotations.push_back(std::move(note));
    }

    record.actions = chosen;
    record.utilities = step_round(state, chosen, config, draws);
    trace.rounds.push_back(std::move(record));
  }

  trace.metrics = compute_metrics(trace);
  return trace;
}

GameState replay_trace(const RunTrace& trace) {
  GameState state = init_state(trace.config);
  const VisibilityDraws draws(trace.seed);
  if (trace.cheap_talk) state.beliefs = trace.cheap_talk->beliefs;
  for (const RoundRecord& record : trace.rounds) {
    if (record.round != state.round) {
      throw EngineError("trace rounds out of order at round " + std::to_string(record.round));
    }
    step_round(state, record.actions, trace.config, draws);
  }
  return state;
}

void check_trace_legality(const RunTrace& trace) { (void)replay_trace(trace); }

}  // namespace likegame

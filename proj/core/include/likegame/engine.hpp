#pragma once

#include <map>
#include <set>
#include <vector>

#include "likegame/policies.hpp"
#include "likegame/rng.hpp"
#include "likegame/state.hpp"
#include "likegame/trace.hpp"

namespace likegame {

// Deterministic pre-game phase: every player displays one pool item; level-1
// estimates are leave-one-out means of the displayed vectors, level-2 the mean
// of everyone's level-1 estimate (equal to the global display mean).
CheapTalkRecord run_cheap_talk(const GameConfig& config);

// Visible pairs for round `round`, sampled against engagement recorded so
// far. Perfect mode: every pair except the viewer's own shares. Imperfect:
// pair (c, y) is visible to viewer i with probability
// floor + (1 - floor) * E(c) / max E, where E aggregates multiplier-weighted
// engagement per content; all-zero engagement floors every probability.
std::map<PlayerId, std::set<SharePair>> sample_visibility(const GameState& state,
                                                          const GameConfig& config,
                                                          const VisibilityDraws& draws,
                                                          int round);

// Plays one round: checks every chosen action against the pre-round legal
// sets (throwing EngineError naming the violator), applies them all, records
// utilities for the round, then samples visibility for the next round and
// increments the round counter. Returns the round's utility breakdowns.
std::map<PlayerId, UtilityBreakdown> step_round(GameState& state,
                                                const std::vector<ActionRecord>& chosen,
                                                const GameConfig& config,
                                                const VisibilityDraws& draws);

// Full deterministic run: validates, runs cheap talk if enabled, round 0
// shares, rounds 1..horizon, and computes the metrics block. Policy draws
// come from one stream seeded with config.rng_seed, consumed per round in
// player-id order; visibility draws are keyed on (round, viewer, pair).
RunTrace run_game(const GameConfig& config);

// Same, with per-player policy overrides (used by the exact solver to run
// scripted strategies). Players absent from the map use their configured
// policy.
RunTrace run_game_with(const GameConfig& config,
                       const std::map<PlayerId, PolicyFn>& overrides);

// Replays a trace's actions through fresh state, round by round, confirming
// each recorded action was legal when played (throws EngineError otherwise)
// and returning the final state for audits against the trace's own records.
GameState replay_trace(const RunTrace& trace);

void check_trace_legality(const RunTrace& trace);

}  // namespace likegame

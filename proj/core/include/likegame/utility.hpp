#pragma once

#include "likegame/ledger.hpp"
#include "likegame/state.hpp"
#include "likegame/types.hpp"

namespace likegame {

struct UtilityBreakdown {
  double personal = 0.0;
  double social = 0.0;
  double combined = 0.0;
  bool operator==(const UtilityBreakdown&) const = default;
};

// Mean closeness to the player's ideal over all shared content, in [0, 1].
// Static mode weighs every item equally; ExposureWeighted weighs each item by
// its engagement-driven visibility probability. Throws EngineError when
// nothing has been shared yet.
double personal_utility(const PlayerSpec& player, const GameState& state,
                        const GameConfig& config);

// Weighted engagement received in `round` on pairs this player shared or
// reshared: w_like per like plus w_share per reshare.
double social_gain(const PlayerId& player, int round, const EngagementLedger& ledger,
                   const GameConfig& config);

// Discounted accrual S(r) = discount * S(r-1) + gain(r), S(0) = 0.
double social_score(const PlayerId& player, int round, const EngagementLedger& ledger,
                    const GameConfig& config);

// Largest S(r) any single share can accrue: each of the n-1 others spends its
// one Like and one Reshare on that pair, scheduled to maximize the round-r
// value. Zero at round 0 and in one-player games.
double max_social_score(const GameConfig& config, int round);

// S(r) / S_max(r), clamped to [0, 1]; zero when S_max(r) is zero. The clamp
// matters because reshared pairs credit the resharer, so a player active on
// many pairs can accrue beyond the single-share bound.
double social_utility(const PlayerId& player, int round, const EngagementLedger& ledger,
                      const GameConfig& config);

// combined = gamma * personal + (1 - gamma) * social, evaluated after `round`
// has been played into the state's ledger.
UtilityBreakdown combined_utility(const PlayerSpec& player, const GameState& state,
                                  const GameConfig& config, int round);

}  // namespace likegame

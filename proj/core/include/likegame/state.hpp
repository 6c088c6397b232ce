#pragma once

#include <map>
#include <set>
#include <tuple>

#include "likegame/ledger.hpp"
#include "likegame/types.hpp"

namespace likegame {

struct GameState {
  // Round currently being played; history holds rounds < round.
  int round = 0;
  std::vector<ActionRecord> history;
  EngagementLedger ledger;
  // Visible (content, sharer) pairs sampled for the current round.
  std::map<PlayerId, std::set<SharePair>> visible;
  std::map<PlayerId, BeliefState> beliefs;
  // Content shared so far; round_introduced is the round it was shared.
  std::map<ContentId, ContentItem> catalog;
  // Pool items not yet shared.
  std::map<ContentId, ContentItem> unshared;
  // First round each (content, sharer) pair appeared.
  std::map<SharePair, int> pair_round;
  // (actor, kind, content, source) tuples already played; each is legal at
  // most once per game.
  std::set<std::tuple<PlayerId, ActionKind, ContentId, PlayerId>> engaged;

  const ContentItem* find_shared(const ContentId& id) const;
  const ContentItem* find_any(const ContentId& id) const;
};

GameState init_state(const GameConfig& config);

// Applies one action to the state: history, ledger, catalog and pair updates.
// pre: action.round == state.round and the action was legal against the state
// all of this round's actions were chosen from (moves are simultaneous, so
// legality is checked before any of them is applied).
void apply_action(GameState& state, const ActionRecord& action, const GameConfig& config);

}  // namespace likegame

#include "likegame/state.hpp"

#include <string>

#include "likegame/errors.hpp"

namespace likegame {

const ContentItem* GameState::find_shared(const ContentId& id) const {
  auto it = catalog.find(id);
  return it == catalog.end() ? nullptr : &it->second;
}

const ContentItem* GameState::find_any(const ContentId& id) const {
  if (const ContentItem* c = find_shared(id)) return c;
  auto it = unshared.find(id);
  return it == unshared.end() ? nullptr : &it->second;
}

void apply_action(GameState& state, const ActionRecord& action, const GameConfig& config) {
  if (action.round != state.round) {
    throw EngineError("action for round " + std::to_string(action.round) +
                      " applied at round " + std::to_string(state.round));
  }
  state.history.push_back(action);
  switch (action.kind) {
    case ActionKind::Noop:
      break;
    case ActionKind::Share: {
      auto it = state.unshared.find(*action.content);
      if (it == state.unshared.end()) {
        throw EngineError("share of unknown or already shared content '" +
                          action.content->value + "'");
      }
      ContentItem item = it->second;
      item.round_introduced = action.round;
      state.unshared.erase(it);
      state.catalog.emplace(item.id, item);
      state.pair_round.emplace(SharePair{item.id, action.actor}, action.round);
      break;
    }
    case ActionKind::Like:
    case ActionKind::Reshare: {
      const PlayerSpec* actor = config.find_player(action.actor);
      state.ledger.record(action, actor ? actor->audience_multiplier : 1.0);
      state.engaged.insert({action.actor, action.kind, *action.content, *action.source});
      if (action.kind == ActionKind::Reshare) {
        // emplace keeps the first round if the actor reshared this content
        // before from a different source.
        state.pair_round.emplace(SharePair{*action.content, action.actor}, action.round);
      }
      break;
    }
  }
}

GameState init_state(const GameConfig& config) {
  GameState state;
  state.round = 0;
  for (const PlayerSpec& p : config.players) {
    state.visible[p.id] = {};
    if (!p.belief.empty()) state.beliefs[p.id] = p.belief;
    for (const ContentItem& c : p.pool) {
      if (state.find_any(c.id) != nullptr) {
        throw ConfigError("duplicate content id across pools: " + c.id.value);
      }
      state.unshared.emplace(c.id, c);
    }
  }
  return state;
}

}  // namespace likegame

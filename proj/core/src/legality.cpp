#include "likegame/legality.hpp"

#include <algorithm>

namespace likegame {
namespace {

bool engaged_before(const GameState& state, const PlayerId& actor, ActionKind kind,
                    const SharePair& pair) {
  return state.engaged.count({actor, kind, pair.content, pair.sharer}) > 0;
}

// A player never engages its own share nor content it authored.
bool self_pair(const GameState& state, const PlayerId& actor, const SharePair& pair) {
  if (pair.sharer == actor) return true;
  const ContentItem* item = state.find_shared(pair.content);
  return item != nullptr && item->author == actor;
}

}  // namespace

std::vector<ActionRecord> legal_actions(const GameState& state, const GameConfig& config,
                                        const PlayerId& actor) {
  std::vector<ActionRecord> out;
  const int round = state.round;

  if (round == 0) {
    const PlayerSpec* spec = config.find_player(actor);
    if (spec == nullptr) return out;
    for (const ContentItem& c : spec->pool) {
      if (state.unshared.count(c.id) > 0) out.push_back(make_share(round, actor, c.id));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  out.push_back(make_noop(round, actor));

  auto visible_it = state.visible.find(actor);
  if (visible_it != state.visible.end()) {
    for (ActionKind kind : {ActionKind::Like, ActionKind::Reshare}) {
      for (const SharePair& pair : visible_it->second) {
        if (self_pair(state, actor, pair)) continue;
        if (engaged_before(state, actor, kind, pair)) continue;
        out.push_back(kind == ActionKind::Like
                          ? make_like(round, actor, pair.content, pair.sharer)
                          : make_reshare(round, actor, pair.content, pair.sharer));
      }
    }
  }

  if (config.allow_new_content) {
    const PlayerSpec* spec = config.find_player(actor);
    if (spec != nullptr) {
      for (const ContentItem& c : spec->pool) {
        if (state.unshared.count(c.id) > 0) out.push_back(make_share(round, actor, c.id));
      }
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

bool is_legal(const GameState& state, const GameConfig& config, const ActionRecord& action) {
  const std::vector<ActionRecord> legal = legal_actions(state, config, action.actor);
  return std::find(legal.begin(), legal.end(), action) != legal.end();
}

}  // namespace likegame

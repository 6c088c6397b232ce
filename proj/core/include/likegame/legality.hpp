#pragma once

#include <vector>

#include "likegame/state.hpp"
#include "likegame/types.hpp"

namespace likegame {

// Legal moves for `actor` in the round the state is about to play, in canonical
// order: by kind (noop, like, reshare, share), then content id, then source id.
// Round 0 admits exactly the actor's pool shares; later rounds admit noop,
// engagement on visible pairs (never the actor's own share or authorship, never
// a repeat of the same kind on the same pair), and, when new content is
// allowed, shares of still-unshared pool items.
std::vector<ActionRecord> legal_actions(const GameState& state, const GameConfig& config,
                                        const PlayerId& actor);

bool is_legal(const GameState& state, const GameConfig& config, const ActionRecord& action);

}  // namespace likegame

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "likegame/rng.hpp"
#include "likegame/state.hpp"
#include "likegame/types.hpp"

namespace likegame {

struct PolicyContext {
  const PlayerSpec* self = nullptr;
  const GameConfig* config = nullptr;
  RngStream* rng = nullptr;
};

struct PolicyChoice {
  ActionRecord action;
  // Free-form diagnostics copied into the trace (e.g. belief fallbacks).
  std::vector<std::string> notes;
};

// A policy maps (state, legal set, context) to one element of the legal set.
// `legal` is canonically ordered and non-empty.
using PolicyFn =
    std::function<PolicyChoice(const GameState&, const std::vector<ActionRecord>&, PolicyContext&)>;

// At round 0: share the pool item closest to the player's ideal (lowest
// content id on ties). Later rounds: one-step lookahead argmax of own combined
// utility over the legal set, ties resolved toward the earliest action in
// canonical order, which puts Noop first.
PolicyChoice idealist_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                             PolicyContext& ctx);

// Tit-for-tat over engagement: reciprocate the largest last-round engager
// (initiating toward the lowest-id engageable player when nobody engaged),
// retaliate with a one-round Noop when the candidate failed to reciprocate,
// and introduce fresh content on the three-round cycle when allowed.
PolicyChoice quid_pro_quo_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                                 PolicyContext& ctx);

// Uniform draw over the canonically ordered legal set (pool shares at round 0).
PolicyChoice uniform_mixer_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                                  PolicyContext& ctx);

// Shares (and reshares) whatever lies closest to the depth target: depth 0 the
// own ideal, depth 1 the estimated majority centroid, depth 2 the estimated
// centroid of centroid estimates. Missing estimates fall back one depth with a
// note. Depth 0 behaves exactly like idealist_choice.
PolicyChoice level_k_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                            PolicyContext& ctx, int depth);

// Courts one target player: shares the pool item closest to the target's
// ideal, then engages the target's pairs (recent first), likes before
// reshares.
PolicyChoice influencer_seeker_choice(const GameState& state,
                                      const std::vector<ActionRecord>& legal, PolicyContext& ctx,
                                      const PlayerId& target);

// Engages (with its configured action kind) the visible pair whose content is
// closest to its own ideal within `radius` (normalized); blind mode ignores
// proximity and takes the lowest pair. Noop when nothing qualifies.
PolicyChoice influencer_reposter_choice(const GameState& state,
                                        const std::vector<ActionRecord>& legal,
                                        PolicyContext& ctx);

PolicyFn make_policy(const PolicySpec& spec);

// True when the policy consumes random draws (only the uniform mixer does);
// the exact solver rejects these.
bool is_stochastic(const PolicySpec& spec);

// Pool item a player displays in the cheap-talk phase: players who mostly
// want engagement point at the salient type centroid when one is configured,
// everyone else at their own ideal.
ContentId cheap_talk_display(const PlayerSpec& player, const GameConfig& config);

}  // namespace likegame

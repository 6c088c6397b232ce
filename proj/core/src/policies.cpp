#include "likegame/policies.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "likegame/errors.hpp"
#include "likegame/utility.hpp"
#include "likegame/vec.hpp"

namespace likegame {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const Vec* content_vector(const GameState& state, const GameConfig& config, const ContentId& id) {
  if (const ContentItem* item = state.find_any(id)) return &item->vector;
  if (const ContentItem* item = config.find_content(id)) return &item->vector;
  return nullptr;
}

// Lowest content id wins ties because `legal` is canonically ordered and the
// comparison is strict.
const ActionRecord* closest_legal(const std::vector<ActionRecord>& legal, ActionKind kind,
                                  const Vec& target, const GameState& state,
                                  const GameConfig& config) {
  const ActionRecord* best = nullptr;
  double best_d = kInf;
  for (const ActionRecord& a : legal) {
    if (a.kind != kind) continue;
    const Vec* v = content_vector(state, config, *a.content);
    if (v == nullptr) continue;
    const double d = distance(*v, target);
    if (d < best_d) {
      best = &a;
      best_d = d;
    }
  }
  return best;
}

PolicyChoice noop_choice(const GameState& state, PolicyContext& ctx,
                         std::vector<std::string> notes = {}) {
  return {make_noop(state.round, ctx.self->id), std::move(notes)};
}

double engagement_weight(ActionKind kind, const GameConfig& config) {
  return kind == ActionKind::Like ? config.like_weight : config.reshare_weight;
}

bool is_engagement(const ActionRecord& a) {
  return a.kind == ActionKind::Like || a.kind == ActionKind::Reshare;
}

// The pair (content, sharer) the partner put up most recently: highest first
// round, then lowest content id.
const SharePair* most_recent_pair_of(const GameState& state, const PlayerId& sharer) {
  const SharePair* best = nullptr;
  int best_round = -1;
  for (const auto& [pair, round] : state.pair_round) {
    if (pair.sharer != sharer) continue;
    if (round > best_round) {
      best = &pair;
      best_round = round;
    }
  }
  return best;
}

const ActionRecord* find_action(const std::vector<ActionRecord>& legal, ActionKind kind,
                                const SharePair& pair) {
  for (const ActionRecord& a : legal) {
    if (a.kind == kind && a.content == pair.content && a.source == pair.sharer) return &a;
  }
  return nullptr;
}

}  // namespace

PolicyChoice idealist_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                             PolicyContext& ctx) {
  if (state.round == 0) {
    const ActionRecord* best =
        closest_legal(legal, ActionKind::Share, ctx.self->ideal, state, *ctx.config);
    return {*best, {}};
  }
  // One-step lookahead on own combined utility; strict improvement required,
  // so ties stay with the canonically earliest action (Noop).
  const ActionRecord* best = nullptr;
  double best_value = -kInf;
  for (const ActionRecord& a : legal) {
    GameState next = state;
    apply_action(next, a, *ctx.config);
    const double value = combined_utility(*ctx.self, next, *ctx.config, state.round).combined;
    if (value > best_value) {
      best = &a;
      best_value = value;
    }
  }
  return {*best, {}};
}

PolicyChoice quid_pro_quo_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                                 PolicyContext& ctx) {
  const PlayerId& me = ctx.self->id;
  const GameConfig& config = *ctx.config;
  if (state.round == 0) {
    const ActionRecord* best =
        closest_legal(legal, ActionKind::Share, ctx.self->ideal, state, config);
    return {*best, {}};
  }

  const int prev = state.round - 1;
  // Weighted engagement toward me at the previous round, per engager, plus
  // per-round engagement directions for the defection test.
  std::map<PlayerId, double> toward_me;
  std::map<int, std::set<PlayerId>> i_engaged_at;
  std::map<int, std::set<PlayerId>> engaged_me_at;
  for (const ActionRecord& a : state.history) {
    if (!is_engagement(a)) continue;
    if (a.actor == me) i_engaged_at[a.round].insert(*a.source);
    if (*a.source == me) {
      engaged_me_at[a.round].insert(a.actor);
      if (a.round == prev) toward_me[a.actor] += engagement_weight(a.kind, config);
    }
  }

  // Candidate partner: largest engager last round (maps iterate in id order,
  // so strict > keeps the lowest id on ties); otherwise the lowest-id player
  // I can still engage.
  const PlayerId* candidate = nullptr;
  double candidate_weight = -kInf;
  for (const auto& [who, weight] : toward_me) {
    if (weight > candidate_weight) {
      candidate = &who;
      candidate_weight = weight;
    }
  }
  if (candidate == nullptr) {
    for (const ActionRecord& a : legal) {
      if (!is_engagement(a)) continue;
      if (candidate == nullptr || *a.source < *candidate) candidate = &*a.source;
    }
  }

  if (candidate != nullptr) {
    const auto defected = [&](int round) {
      auto mine = i_engaged_at.find(round);
      if (mine == i_engaged_at.end() || mine->second.count(*candidate) == 0) return false;
      auto theirs = engaged_me_at.find(round);
      return theirs == engaged_me_at.end() || theirs->second.count(*candidate) == 0;
    };
    bool retaliate = defected(prev);
    if (!retaliate && ctx.self->policy.grim) {
      for (int r = 1; r < prev && !retaliate; ++r) retaliate = defected(r);
    }
    if (retaliate) {
      return noop_choice(state, ctx, {me.value + ": retaliating against " + candidate->value});
    }
    if (const SharePair* pair = most_recent_pair_of(state, *candidate)) {
      if (const ActionRecord* a = find_action(legal, ActionKind::Like, *pair)) return {*a, {}};
      if (const ActionRecord* a = find_action(legal, ActionKind::Reshare, *pair)) return {*a, {}};
    }
  }

  if (config.allow_new_content && state.round % 3 == 0) {
    if (const ActionRecord* best =
            closest_legal(legal, ActionKind::Share, ctx.self->ideal, state, config)) {
      return {*best, {}};
    }
  }
  return noop_choice(state, ctx);
}

PolicyChoice uniform_mixer_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                                  PolicyContext& ctx) {
  (void)state;
  return {legal[ctx.rng->next_index(legal.size())], {}};
}

PolicyChoice level_k_choice(const GameState& state, const std::vector<ActionRecord>& legal,
                            PolicyContext& ctx, int depth) {
  std::vector<std::string> notes;
  const BeliefState* belief = nullptr;
  if (auto it = state.beliefs.find(ctx.self->id); it != state.beliefs.end()) {
    belief = &it->second;
  }

  int effective = depth;
  if (effective == 2 && (belief == nullptr || !belief->majority_centroid_of_centroid_estimate)) {
    notes.push_back(ctx.self->id.value + ": depth-2 estimate missing, using depth 1");
    effective = 1;
  }
  if (effective == 1 && (belief == nullptr || !belief->majority_centroid_estimate)) {
    notes.push_back(ctx.self->id.value + ": depth-1 estimate missing, using depth 0");
    effective = 0;
  }
  if (effective == 0) {
    PolicyChoice choice = idealist_choice(state, legal, ctx);
    notes.insert(notes.end(), choice.notes.begin(), choice.notes.end());
    return {choice.action, std::move(notes)};
  }

  const Vec& target = effective == 2 ? *belief->majority_centroid_of_centroid_estimate
                                     : *belief->majority_centroid_estimate;
  if (state.round == 0) {
    const ActionRecord* best =
        closest_legal(legal, ActionKind::Share, target, state, *ctx.config);
    return {*best, std::move(notes)};
  }
  // Propagation first: reshare whatever sits closest to the target point,
  // like it when resharing is spent, introduce fresh content as a last resort.
  for (ActionKind kind : {ActionKind::Reshare, ActionKind::Like, ActionKind::Share}) {
    if (const ActionRecord* best = closest_legal(legal, kind, target, state, *ctx.config)) {
      return {*best, std::move(notes)};
    }
  }
  return noop_choice(state, ctx, std::move(notes));
}

PolicyChoice influencer_seeker_choice(const GameState& state,
                                      const std::vector<ActionRecord>& legal, PolicyContext& ctx,
                                      const PlayerId& target) {
  const GameConfig& config = *ctx.config;
  const PlayerSpec* target_spec = config.find_player(target);
  if (target_spec == nullptr) {
    throw EngineError("influencer seeker '" + ctx.self->id.value + "' has unknown target '" +
                      target.value + "'");
  }
  if (state.round == 0) {
    const ActionRecord* best =
        closest_legal(legal, ActionKind::Share, target_spec->ideal, state, config);
    return {*best, {}};
  }
  // The target's pairs, most recent first; a fresh share is courted to
  // completion (like, then reshare) before any older leftover.
  std::vector<const SharePair*> pairs;
  for (const auto& [pair, round] : state.pair_round) {
    if (pair.sharer == target) pairs.push_back(&pair);
  }
  std::sort(pairs.begin(), pairs.end(), [&](const SharePair* a, const SharePair* b) {
    const int ra = state.pair_round.at(*a);
    const int rb = state.pair_round.at(*b);
    if (ra != rb) return ra > rb;
    return a->content < b->content;
  });
  for (const SharePair* pair : pairs) {
    for (ActionKind kind : {ActionKind::Like, ActionKind::Reshare}) {
      if (const ActionRecord* a = find_action(legal, kind, *pair)) return {*a, {}};
    }
  }
  return noop_choice(state, ctx);
}

PolicyChoice influencer_reposter_choice(const GameState& state,
                                        const std::vector<ActionRecord>& legal,
                                        PolicyContext& ctx) {
  if (state.round == 0) {
    const ActionRecord* best =
        closest_legal(legal, ActionKind::Share, ctx.self->ideal, state, *ctx.config);
    return {*best, {}};
  }
  const PolicySpec& policy = ctx.self->policy;
  const ActionKind kind =
      policy.engage == EngageKind::Like ? ActionKind::Like : ActionKind::Reshare;
  // One engagement per content: a second pair carrying the same content is
  // never re-engaged, whatever its sharer.
  const PlayerId& me = ctx.self->id;
  const auto already_engaged = [&](const ContentId& content) {
    for (const ActionRecord& past : state.history) {
      if (past.actor == me && past.kind == kind && past.content && *past.content == content) {
        return true;
      }
    }
    return false;
  };
  if (policy.blind) {
    for (const ActionRecord& a : legal) {
      if (a.kind == kind && !already_engaged(*a.content)) return {a, {}};
    }
    return noop_choice(state, ctx);
  }
  const ActionRecord* best = nullptr;
  double best_d = kInf;
  for (const ActionRecord& a : legal) {
    if (a.kind != kind) continue;
    const Vec* v = content_vector(state, *ctx.config, *a.content);
    if (v == nullptr) continue;
    const double d = normalized_distance(*v, ctx.self->ideal);
    if (d <= policy.radius && d < best_d && !already_engaged(*a.content)) {
      best = &a;
      best_d = d;
    }
  }
  if (best != nullptr) return {*best, {}};
  return noop_choice(state, ctx);
}

PolicyFn make_policy(const PolicySpec& spec) {
  switch (spec.kind) {
    case PolicyKind::Idealist:
      return idealist_choice;
    case PolicyKind::QuidProQuo:
      return quid_pro_quo_choice;
    case PolicyKind::UniformMixer:
      return uniform_mixer_choice;
    case PolicyKind::LevelK:
      return [depth = spec.depth](const GameState& state, const std::vector<ActionRecord>& legal,
                                  PolicyContext& ctx) {
        return level_k_choice(state, legal, ctx, depth);
      };
    case PolicyKind::InfluencerSeeker:
      return [target = spec.target](const GameState& state,
                                    const std::vector<ActionRecord>& legal, PolicyContext& ctx) {
        return influencer_seeker_choice(state, legal, ctx, target);
      };
    case PolicyKind::InfluencerReposter:
      return influencer_reposter_choice;
  }
  throw EngineError("unhandled policy kind");
}

bool is_stochastic(const PolicySpec& spec) { return spec.kind == PolicyKind::UniformMixer; }

ContentId cheap_talk_display(const PlayerSpec& player, const GameConfig& config) {
  const Vec* target = &player.ideal;
  if (player.gamma < 0.5 && !config.type_centroids.empty()) {
    target = &config.type_centroids.front();
  }
  const ContentItem* best = nullptr;
  double best_d = kInf;
  for (const ContentItem& item : player.pool) {
    const double d = distance(item.vector, *target);
    if (best == nullptr || d < best_d || (d == best_d && item.id < best->id)) {
      best = &item;
      best_d = d;
    }
  }
  return best->id;
}

}  // namespace likegame

#include "likegame/oracle.hpp"

#include <algorithm>

#include "likegame/engine.hpp"
#include "likegame/errors.hpp"
#include "likegame/legality.hpp"
#include "likegame/policies.hpp"

namespace likegame {
namespace {

std::string action_key(const ActionRecord& a) {
  std::string out = std::to_string(a.round) + ":" + a.actor.value + ":" +
                    std::string(to_string(a.kind));
  if (a.content) out += ":" + a.content->value;
  if (a.source) out += "<" + a.source->value;
  return out;
}

PolicyFn strategy_policy(const Strategy& strategy, const PlayerId& player) {
  if (const auto* script = std::get_if<ScriptStrategy>(&strategy)) {
    return [actions = script->actions, name = script->name, player](
               const GameState& state, const std::vector<ActionRecord>&, PolicyContext&) {
      for (const ActionRecord& a : actions) {
        if (a.round == state.round && a.actor == player) return PolicyChoice{a, {}};
      }
      throw OracleError("script '" + name + "' has no action for round " +
                        std::to_string(state.round));
    };
  }
  if (const auto* policy = std::get_if<PolicyStrategy>(&strategy)) {
    return make_policy(policy->policy);
  }
  const auto& plan = std::get<ContingentStrategy>(strategy);
  return [plan](const GameState& state, const std::vector<ActionRecord>&, PolicyContext&) {
    const std::string key = history_key(state.history);
    auto it = plan.plan.find(key);
    if (it == plan.plan.end()) {
      throw OracleError("plan '" + plan.name + "' has no entry for observed history [" + key +
                        "]");
    }
    return PolicyChoice{it->second, {}};
  };
}

// Cross product of the other players' legal sets, id order, lexicographic.
std::vector<std::vector<ActionRecord>> opponent_combos(const GameState& state,
                                                       const GameConfig& config,
                                                       const PlayerId& focal) {
  std::vector<std::vector<ActionRecord>> per_player;
  for (const PlayerSpec* p : config.players_by_id()) {
    if (p->id == focal) continue;
    per_player.push_back(legal_actions(state, config, p->id));
  }
  std::vector<std::vector<ActionRecord>> combos{{}};
  for (const std::vector<ActionRecord>& options : per_player) {
    std::vector<std::vector<ActionRecord>> next;
    for (const std::vector<ActionRecord>& combo : combos) {
      for (const ActionRecord& option : options) {
        std::vector<ActionRecord> extended = combo;
        extended.push_back(option);
        next.push_back(std::move(extended));
      }
    }
    combos = std::move(next);
  }
  return combos;
}

// Recursively enumerates the focal player's plans from this state: pick one
// legal action, then independently plan every opponent continuation.
std::vector<std::map<std::string, ActionRecord>> enumerate_plans_from(
    const GameState& state, const GameConfig& config, const PlayerId& focal,
    const VisibilityDraws& draws, std::size_t max_plans) {
  if (state.round > config.horizon) return {{}};

  const std::string key = history_key(state.history);
  const std::vector<ActionRecord> legal = legal_actions(state, config, focal);
  std::vector<std::map<std::string, ActionRecord>> plans;

  for (const ActionRecord& choice : legal) {
    std::vector<std::map<std::string, ActionRecord>> subtree{{{key, choice}}};
    for (const std::vector<ActionRecord>& combo : opponent_combos(state, config, focal)) {
      GameState next = state;
      // Engine application order is player-id order; reproduce it so history
      // keys match what the plan will observe at run time.
      std::vector<ActionRecord> joint = combo;
      joint.push_back(choice);
      std::sort(joint.begin(), joint.end(),
                [](const ActionRecord& a, const ActionRecord& b) { return a.actor < b.actor; });
      for (const ActionRecord& a : joint) apply_action(next, a, config);
      next.round += 1;
      next.visible = sample_visibility(next, config, draws, next.round);

      const auto children = enumerate_plans_from(next, config, focal, draws, max_plans);
      std::vector<std::map<std::string, ActionRecord>> merged;
      for (const auto& base : subtree) {
        for (const auto& child : children) {
          std::map<std::string, ActionRecord> plan = base;
          plan.insert(child.begin(), child.end());
          merged.push_back(std::move(plan));
          if (merged.size() > max_plans) {
            throw OracleError("contingent plan space exceeds cap of " +
                              std::to_string(max_plans));
          }
        }
      }
      subtree = std::move(merged);
    }
    plans.insert(plans.end(), std::make_move_iterator(subtree.begin()),
                 std::make_move_iterator(subtree.end()));
    if (plans.size() > max_plans) {
      throw OracleError("contingent plan space exceeds cap of " + std::to_string(max_plans));
    }
  }
  return plans;
}

}  // namespace

const std::string& strategy_name(const Strategy& strategy) {
  return std::visit([](const auto& s) -> const std::string& { return s.name; }, strategy);
}

std::string history_key(const std::vector<ActionRecord>& history) {
  std::string key;
  for (const ActionRecord& a : history) {
    if (!key.empty()) key += "|";
    key += action_key(a);
  }
  return key;
}

std::size_t NormalFormGame::profile_count() const {
  std::size_t count = 1;
  for (const auto& menu : menus) count *= menu.size();
  return count;
}

std::size_t NormalFormGame::index_of(const std::vector<std::size_t>& profile) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < menus.size(); ++i) {
    index = index * menus[i].size() + profile[i];
  }
  return index;
}

std::vector<std::size_t> NormalFormGame::profile_at(std::size_t index) const {
  std::vector<std::size_t> profile(menus.size(), 0);
  for (std::size_t i = menus.size(); i-- > 0;) {
    profile[i] = index % menus[i].size();
    index /= menus[i].size();
  }
  return profile;
}

double NormalFormGame::payoff(const std::vector<std::size_t>& profile,
                              std::size_t player) const {
  return payoffs[index_of(profile)][player];
}

NormalFormGame build_normal_form(const GameConfig& config,
                                 const std::vector<std::vector<Strategy>>& menus,
                                 std::size_t profile_cap) {
  if (config.info_mode != InfoMode::Perfect) {
    throw OracleError("exact solver requires perfect information");
  }
  NormalFormGame game;
  game.config = config;
  for (const PlayerSpec* p : config.players_by_id()) game.players.push_back(p->id);
  if (menus.size() != game.players.size()) {
    throw OracleError("expected one menu per player, in player-id order");
  }

  std::size_t count = 1;
  for (std::size_t i = 0; i < menus.size(); ++i) {
    if (menus[i].empty()) {
      throw OracleError("empty menu for player '" + game.players[i].value + "'");
    }
    for (const Strategy& s : menus[i]) {
      if (const auto* policy = std::get_if<PolicyStrategy>(&s)) {
        if (is_stochastic(policy->policy)) {
          throw OracleError("stochastic strategy '" + policy->name + "' in exact solver");
        }
      }
    }
    if (count > profile_cap / menus[i].size()) {
      throw OracleError("profile count exceeds cap of " + std::to_string(profile_cap));
    }
    count *= menus[i].size();
  }
  game.menus = menus;

  game.payoffs.resize(count);
  for (std::size_t index = 0; index < count; ++index) {
    const std::vector<std::size_t> profile = game.profile_at(index);
    std::map<PlayerId, PolicyFn> overrides;
    for (std::size_t i = 0; i < game.players.size(); ++i) {
      overrides[game.players[i]] =
          strategy_policy(menus[i][profile[i]], game.players[i]);
    }
    const RunTrace trace = run_game_with(config, overrides);
    std::vector<double>& row = game.payoffs[index];
    row.resize(game.players.size(), 0.0);
    for (const RoundRecord& record : trace.rounds) {
      for (std::size_t i = 0; i < game.players.size(); ++i) {
        row[i] += record.utilities.at(game.players[i]).combined;
      }
    }
  }
  return game;
}

std::vector<std::vector<std::size_t>> find_pure_nash(const NormalFormGame& game) {
  std::vector<std::vector<std::size_t>> nash;
  const std::size_t count = game.profile_count();
  for (std::size_t index = 0; index < count; ++index) {
    const std::vector<std::size_t> profile = game.profile_at(index);
    bool stable = true;
    for (std::size_t i = 0; i < game.players.size() && stable; ++i) {
      const double current = game.payoffs[index][i];
      std::vector<std::size_t> deviation = profile;
      for (std::size_t alt = 0; alt < game.menus[i].size() && stable; ++alt) {
        if (alt == profile[i]) continue;
        deviation[i] = alt;
        if (game.payoff(deviation, i) > current) stable = false;
      }
    }
    if (stable) nash.push_back(profile);
  }
  return nash;
}

std::string_view to_string(DominanceVerdict verdict) {
  switch (verdict) {
    case DominanceVerdict::StrictlyDominates: return "strictly-dominates";
    case DominanceVerdict::WeaklyDominates: return "weakly-dominates";
    case DominanceVerdict::Incomparable: return "incomparable";
  }
  return "incomparable";
}

DominanceRelation weak_dominance(const NormalFormGame& game, std::size_t player, std::size_t a,
                                 std::size_t b) {
  if (player >= game.menus.size() || a >= game.menus[player].size() ||
      b >= game.menus[player].size()) {
    throw OracleError("unknown strategy in dominance query");
  }
  DominanceRelation relation;
  relation.player = player;
  relation.strategy_a = a;
  relation.strategy_b = b;

  const std::size_t count = game.profile_count();
  for (std::size_t index = 0; index < count; ++index) {
    std::vector<std::size_t> profile = game.profile_at(index);
    if (profile[player] != a) continue;
    std::vector<std::size_t> other = profile;
    other[player] = b;
    const double pa = game.payoffs[index][player];
    const double pb = game.payoff(other, player);
    if (pa > pb) {
      if (!relation.strict_witness) relation.strict_witness = profile;
    } else if (pa == pb) {
      if (!relation.equal_witness) relation.equal_witness = profile;
    } else {
      if (!relation.violation_witness) relation.violation_witness = profile;
    }
  }

  if (relation.violation_witness || !relation.strict_witness) {
    relation.verdict = DominanceVerdict::Incomparable;
  } else if (relation.equal_witness) {
    relation.verdict = DominanceVerdict::WeaklyDominates;
  } else {
    relation.verdict = DominanceVerdict::StrictlyDominates;
  }
  return relation;
}

std::vector<std::size_t> best_responses(const NormalFormGame& game,
                                        const std::vector<std::size_t>& profile,
                                        std::size_t player) {
  std::vector<std::size_t> best;
  double best_payoff = 0.0;
  std::vector<std::size_t> candidate = profile;
  for (std::size_t alt = 0; alt < game.menus[player].size(); ++alt) {
    candidate[player] = alt;
    const double value = game.payoff(candidate, player);
    if (best.empty() || value > best_payoff) {
      best = {alt};
      best_payoff = value;
    } else if (value == best_payoff) {
      best.push_back(alt);
    }
  }
  return best;
}

std::vector<Strategy> enumerate_contingent_plans(const GameConfig& config, const PlayerId& player,
                                                 std::size_t max_plans) {
  if (config.horizon > 2) {
    throw OracleError("contingent plans are limited to horizon <= 2");
  }
  if (config.info_mode != InfoMode::Perfect) {
    throw OracleError("contingent plans require perfect information");
  }
  if (config.find_player(player) == nullptr) {
    throw OracleError("unknown player '" + player.value + "'");
  }
  const GameState start = init_state(config);
  const VisibilityDraws draws(config.rng_seed);
  const auto plans = enumerate_plans_from(start, config, player, draws, max_plans);
  std::vector<Strategy> out;
  out.reserve(plans.size());
  for (std::size_t i = 0; i < plans.size(); ++i) {
    out.push_back(ContingentStrategy{"plan-" + std::to_string(i), plans[i]});
  }
  return out;
}

}  // namespace likegame

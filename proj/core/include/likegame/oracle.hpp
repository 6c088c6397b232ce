#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "likegame/types.hpp"

namespace likegame {

// A fixed action per round, independent of what anyone else does. Actions
// carry their round and actor and must cover rounds 0..horizon.
struct ScriptStrategy {
  std::string name;
  std::vector<ActionRecord> actions;
};

// A deterministic policy run as-is; stochastic policies are rejected at
// normal-form construction.
struct PolicyStrategy {
  std::string name;
  PolicySpec policy;
};

// A full plan: one action per reachable observed history (perfect
// information, so the observation is the joint history). Missing entries
// abort evaluation, so plans must cover every reachable history.
struct ContingentStrategy {
  std::string name;
  std::map<std::string, ActionRecord> plan;  // history_key -> action
};

using Strategy = std::variant<ScriptStrategy, PolicyStrategy, ContingentStrategy>;

const std::string& strategy_name(const Strategy& strategy);

// Canonical lookup key for a joint history prefix.
std::string history_key(const std::vector<ActionRecord>& history);

// Exhaustive payoff tensor over finite per-player menus. Payoffs are the
// horizon-total combined utilities from a deterministic engine run per
// profile. Profiles are mixed-radix tuples over menu sizes, last player
// fastest.
struct NormalFormGame {
  GameConfig config;
  std::vector<PlayerId> players;             // id order; aligns with menus
  std::vector<std::vector<Strategy>> menus;  // one menu per player
  std::vector<std::vector<double>> payoffs;  // [profile_index][player_index]

  std::size_t profile_count() const;
  std::size_t index_of(const std::vector<std::size_t>& profile) const;
  std::vector<std::size_t> profile_at(std::size_t index) const;
  double payoff(const std::vector<std::size_t>& profile, std::size_t player) const;
};

// pre: Perfect info; every menu non-empty and deterministic; profile count
// within `profile_cap`. Throws OracleError otherwise.
NormalFormGame build_normal_form(const GameConfig& config,
                                 const std::vector<std::vector<Strategy>>& menus,
                                 std::size_t profile_cap = 1000000);

// Profiles where no player gains strictly by a unilateral menu deviation.
std::vector<std::vector<std::size_t>> find_pure_nash(const NormalFormGame& game);

enum class DominanceVerdict { StrictlyDominates, WeaklyDominates, Incomparable };

std::string_view to_string(DominanceVerdict verdict);

// Comparison of strategies a and b for one player across every opponent
// combination. Witnesses are full profiles with the player's slot set to a.
struct DominanceRelation {
  std::size_t player = 0;
  std::size_t strategy_a = 0;
  std::size_t strategy_b = 0;
  DominanceVerdict verdict = DominanceVerdict::Incomparable;
  std::optional<std::vector<std::size_t>> strict_witness;     // payoff(a) > payoff(b)
  std::optional<std::vector<std::size_t>> equal_witness;      // payoff(a) == payoff(b)
  std::optional<std::vector<std::size_t>> violation_witness;  // payoff(a) < payoff(b)
};

DominanceRelation weak_dominance(const NormalFormGame& game, std::size_t player, std::size_t a,
                                 std::size_t b);

// Argmax set of the player's payoffs with opponents held at `profile`.
std::vector<std::size_t> best_responses(const NormalFormGame& game,
                                        const std::vector<std::size_t>& profile,
                                        std::size_t player);

// All contingent plans for one player over horizon <= 2, enumerated against
// every joint legal continuation; throws OracleError when the plan space
// exceeds `max_plans` or the horizon is too deep.
std::vector<Strategy> enumerate_contingent_plans(const GameConfig& config, const PlayerId& player,
                                                 std::size_t max_plans = 10000);

}  // namespace likegame

#include "likegame/utility.hpp"

#include <algorithm>
#include <cmath>

#include "likegame/errors.hpp"
#include "likegame/vec.hpp"

namespace likegame {

double personal_utility(const PlayerSpec& player, const GameState& state,
                        const GameConfig& config) {
  if (state.catalog.empty()) {
    throw EngineError("personal utility undefined before any content is shared");
  }
  const double d_max = max_distance(static_cast<std::size_t>(config.k_dims));

  if (config.personal_mode == PersonalUtilityMode::Static) {
    double sum = 0.0;
    for (const auto& [id, item] : state.catalog) {
      sum += 1.0 - distance(item.vector, player.ideal) / d_max;
    }
    return sum / static_cast<double>(state.catalog.size());
  }

  // ExposureWeighted: weigh each item by its visibility probability, so heavily
  // engaged content dominates what the player effectively consumes.
  double mass_max = 0.0;
  for (const auto& [id, item] : state.catalog) {
    mass_max = std::max(
        mass_max, state.ledger.visibility_mass(id, config.like_weight, config.reshare_weight));
  }
  double weight_sum = 0.0;
  double value_sum = 0.0;
  for (const auto& [id, item] : state.catalog) {
    double weight = 1.0;
    if (mass_max > 0.0) {
      const double mass =
          state.ledger.visibility_mass(id, config.like_weight, config.reshare_weight);
      weight = config.visibility_floor + (1.0 - config.visibility_floor) * mass / mass_max;
    }
    weight_sum += weight;
    value_sum += weight * (1.0 - distance(item.vector, player.ideal) / d_max);
  }
  return value_sum / weight_sum;
}

double social_gain(const PlayerId& player, int round, const EngagementLedger& ledger,
                   const GameConfig& config) {
  return ledger.gain_for(player, round, config.like_weight, config.reshare_weight);
}

double social_score(const PlayerId& player, int round, const EngagementLedger& ledger,
                    const GameConfig& config) {
  double score = 0.0;
  for (int r = 1; r <= round; ++r) {
    score = config.discount * score + social_gain(player, r, ledger, config);
  }
  return score;
}

double max_social_score(const GameConfig& config, int round) {
  const double m = static_cast<double>(config.n_players()) - 1.0;
  if (round <= 0 || m <= 0.0) return 0.0;
  const double w_hi = std::max(config.like_weight, config.reshare_weight);
  const double w_lo = std::min(config.like_weight, config.reshare_weight);
  if (round == 1) return m * w_hi;
  // Two actions per opponent; with discount <= 1 the round-r maximum schedules
  // the lighter action at r-1 and the heavier at r, independent of r >= 2.
  return m * (w_hi + config.discount * w_lo);
}

double social_utility(const PlayerId& player, int round, const EngagementLedger& ledger,
                      const GameConfig& config) {
  const double s_max = max_social_score(config, round);
  if (s_max <= 0.0) return 0.0;
  const double ratio = social_score(player, round, ledger, config) / s_max;
  return std::clamp(ratio, 0.0, 1.0);
}

UtilityBreakdown combined_utility(const PlayerSpec& player, const GameState& state,
                                  const GameConfig& config, int round) {
  UtilityBreakdown out;
  out.personal = personal_utility(player, state, config);
  out.social = social_utility(player.id, round, state.ledger, config);
  out.combined = player.gamma * out.personal + (1.0 - player.gamma) * out.social;
  return out;
}

}  // namespace likegame

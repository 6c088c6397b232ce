#include "likegame/ledger.hpp"

#include <cassert>

namespace likegame {

int EngagementLedger::PairCounts::likes_total() const {
  int total = 0;
  for (const auto& [round, count] : likes_by_round) total += count;
  return total;
}

int EngagementLedger::PairCounts::reshares_total() const {
  int total = 0;
  for (const auto& [round, count] : reshares_by_round) total += count;
  return total;
}

void EngagementLedger::record(const ActionRecord& record, double actor_multiplier) {
  assert(record.kind == ActionKind::Like || record.kind == ActionKind::Reshare);
  assert(record.content.has_value() && record.source.has_value());
  const SharePair pair{*record.content, *record.source};
  PairCounts& counts = pairs_[pair];
  if (record.kind == ActionKind::Like) {
    counts.likes_by_round[record.round] += 1;
  } else {
    counts.reshares_by_round[record.round] += 1;
  }
  events_.push_back(Event{record.round, record.kind, *record.content, *record.source,
                          actor_multiplier});
}

double EngagementLedger::visibility_mass(const ContentId& content, double like_weight,
                                         double reshare_weight) const {
  double mass = 0.0;
  for (const Event& e : events_) {
    if (e.content != content) continue;
    const double w = (e.kind == ActionKind::Like) ? like_weight : reshare_weight;
    mass += w * e.actor_multiplier;
  }
  return mass;
}

double EngagementLedger::gain_for(const PlayerId& sharer, int round, double like_weight,
                                  double reshare_weight) const {
  double gain = 0.0;
  for (const auto& [pair, counts] : pairs_) {
    if (pair.sharer != sharer) continue;
    if (auto it = counts.likes_by_round.find(round); it != counts.likes_by_round.end()) {
      gain += like_weight * it->second;
    }
    if (auto it = counts.reshares_by_round.find(round); it != counts.reshares_by_round.end()) {
      gain += reshare_weight * it->second;
    }
  }
  return gain;
}

double EngagementLedger::weighted_engagement(const ContentId& content, int round,
                                             double like_weight, double reshare_weight) const {
  double total = 0.0;
  for (const auto& [pair, counts] : pairs_) {
    if (pair.content != content) continue;
    for (const auto& [r, count] : counts.likes_by_round) {
      if (r <= round) total += like_weight * count;
    }
    for (const auto& [r, count] : counts.reshares_by_round) {
      if (r <= round) total += reshare_weight * count;
    }
  }
  return total;
}

int EngagementLedger::total_likes() const {
  int total = 0;
  for (const auto& [pair, counts] : pairs_) total += counts.likes_total();
  return total;
}

int EngagementLedger::total_reshares() const {
  int total = 0;
  for (const auto& [pair, counts] : pairs_) total += counts.reshares_total();
  return total;
}

EngagementLedger rebuild_ledger(const std::vector<ActionRecord>& history,
                                const GameConfig& config) {
  EngagementLedger ledger;
  for (const ActionRecord& record : history) {
    if (record.kind != ActionKind::Like && record.kind != ActionKind::Reshare) continue;
    const PlayerSpec* actor = config.find_player(record.actor);
    ledger.record(record, actor ? actor->audience_multiplier : 1.0);
  }
  return ledger;
}

}  // namespace likegame

#include "likegame/metrics.hpp"

#include <cmath>
#include <map>

#include "likegame/errors.hpp"
#include "likegame/ledger.hpp"
#include "likegame/vec.hpp"

namespace likegame {
namespace {

std::vector<ActionRecord> full_history(const RunTrace& trace) {
  std::vector<ActionRecord> history;
  for (const RoundRecord& record : trace.rounds) {
    history.insert(history.end(), record.actions.begin(), record.actions.end());
  }
  return history;
}

// share_mass per type over all reshare actions up to `round`; empty when
// nothing was reshared yet.
std::vector<double> reshare_mass(const RunTrace& trace, const ContentTyping& typing, int round) {
  std::vector<double> counts(typing.centroids.size(), 0.0);
  double total = 0.0;
  for (const RoundRecord& record : trace.rounds) {
    if (record.round > round) break;
    for (const ActionRecord& a : record.actions) {
      if (a.kind != ActionKind::Reshare) continue;
      const ContentItem* item = trace.config.find_content(*a.content);
      if (item == nullptr) throw ConfigError("reshared content missing from config pools");
      counts[typing.assign(item->vector)] += 1.0;
      total += 1.0;
    }
  }
  if (total == 0.0) return {};
  for (double& c : counts) c /= total;
  return counts;
}

double entropy(const std::vector<double>& distribution) {
  double h = 0.0;
  for (double q : distribution) {
    if (q > 0.0) h -= q * std::log(q);
  }
  return h;
}

}  // namespace

std::size_t ContentTyping::assign(const Vec& point) const {
  std::size_t best = 0;
  double best_d = distance(point, centroids[0]);
  for (std::size_t i = 1; i < centroids.size(); ++i) {
    const double d = distance(point, centroids[i]);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

double false_consensus_index(const RunTrace& trace, const ContentTyping& typing,
                             std::size_t type_index, int round) {
  if (type_index >= typing.centroids.size()) {
    throw ConfigError("unknown content type index " + std::to_string(type_index));
  }
  const std::vector<double> share = reshare_mass(trace, typing, round);
  if (share.empty()) return 0.0;

  double ideal_mass = 0.0;
  for (const PlayerSpec& p : trace.config.players) {
    if (typing.assign(p.ideal) == type_index) ideal_mass += 1.0;
  }
  ideal_mass /= static_cast<double>(trace.config.players.size());
  return share[type_index] - ideal_mass;
}

double reshare_entropy(const RunTrace& trace, const ContentTyping& typing, int round) {
  return entropy(reshare_mass(trace, typing, round));
}

double engagement_concentration(const RunTrace& trace, int round) {
  const EngagementLedger ledger = rebuild_ledger(full_history(trace), trace.config);
  std::vector<double> weights;
  double total = 0.0;
  for (const RoundRecord& record : trace.rounds) {
    if (record.round > round) break;
    for (const ActionRecord& a : record.actions) {
      if (a.kind != ActionKind::Share) continue;
      const double w = ledger.weighted_engagement(*a.content, round, trace.config.like_weight,
                                                  trace.config.reshare_weight);
      weights.push_back(w);
      total += w;
    }
  }
  if (total <= 0.0) return 0.0;
  for (double& w : weights) w /= total;
  return entropy(weights);
}

ExposureResult exposure_alignment(const RunTrace& trace, const PlayerId& player, int round,
                                  double radius) {
  if (round < 0 || round >= static_cast<int>(trace.rounds.size())) {
    throw ConfigError("round " + std::to_string(round) + " is not in the trace");
  }
  const PlayerSpec* spec = trace.config.find_player(player);
  if (spec == nullptr) throw ConfigError("unknown player '" + player.value + "'");

  const auto it = trace.rounds[round].visible.find(player);
  if (it == trace.rounds[round].visible.end() || it->second.empty()) return {};

  double aligned = 0.0;
  for (const SharePair& pair : it->second) {
    const ContentItem* item = trace.config.find_content(pair.content);
    if (item == nullptr) throw ConfigError("visible content missing from config pools");
    if (normalized_distance(item->vector, spec->ideal) <= radius) aligned += 1.0;
  }
  ExposureResult result;
  result.alignment = aligned / static_cast<double>(it->second.size());
  result.dissent = 1.0 - result.alignment;
  result.defined = true;
  return result;
}

std::vector<double> amplification_curve(const RunTrace& trace, const ContentId& content) {
  if (trace.config.find_content(content) == nullptr) {
    throw ConfigError("unknown content '" + content.value + "'");
  }
  const EngagementLedger ledger = rebuild_ledger(full_history(trace), trace.config);
  std::vector<double> curve;
  curve.reserve(trace.rounds.size());
  for (const RoundRecord& record : trace.rounds) {
    curve.push_back(ledger.weighted_engagement(content, record.round, trace.config.like_weight,
                                               trace.config.reshare_weight));
  }
  return curve;
}

MetricsBlock compute_metrics(const RunTrace& trace) {
  MetricsBlock block;
  const ContentTyping typing{trace.config.type_centroids};
  const bool typed = !typing.centroids.empty();

  for (const RoundRecord& record : trace.rounds) {
    MetricsRow row;
    row.round = record.round;
    if (typed) {
      for (std::size_t t = 0; t < typing.centroids.size(); ++t) {
        row.fci.push_back(false_consensus_index(trace, typing, t, record.round));
      }
      row.reshare_entropy = reshare_entropy(trace, typing, record.round);
    }
    row.engagement_concentration = engagement_concentration(trace, record.round);
    for (const PlayerSpec& p : trace.config.players) {
      const ExposureResult exposure =
          exposure_alignment(trace, p.id, record.round, trace.config.alignment_radius);
      row.exposure_alignment[p.id] = exposure.alignment;
      row.dissent_exposure[p.id] = exposure.dissent;
      row.exposure_defined[p.id] = exposure.defined;
    }
    block.rounds.push_back(std::move(row));
  }

  for (const RoundRecord& record : trace.rounds) {
    for (const ActionRecord& a : record.actions) {
      if (a.kind != ActionKind::Share) continue;
      block.amplification[*a.content] = amplification_curve(trace, *a.content);
    }
  }
  return block;
}

}  // namespace likegame

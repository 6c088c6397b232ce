#pragma once

#include <map>
#include <vector>

#include "likegame/types.hpp"

namespace likegame {

// Aggregated engagement per (content, sharer) pair plus the per-event actor
// multipliers needed for visibility weighting. The ledger is exactly the
// aggregation of the engagement actions in a game history; the conservation
// checks rebuild it from scratch and compare for equality.
class EngagementLedger {
 public:
  struct PairCounts {
    std::map<int, int> likes_by_round;
    std::map<int, int> reshares_by_round;
    bool operator==(const PairCounts&) const = default;

    int likes_total() const;
    int reshares_total() const;
  };

  // pre: record.kind is Like or Reshare with content and source set
  void record(const ActionRecord& record, double actor_multiplier);

  const std::map<SharePair, PairCounts>& pairs() const { return pairs_; }

  // Sum over engagements with `content` (any sharer) of
  // w(kind) * audience_multiplier(engaging actor). Multipliers enter here and
  // nowhere else: visibility is the only channel influence flows through.
  double visibility_mass(const ContentId& content, double like_weight,
                         double reshare_weight) const;

  // Sum of w(kind) over engagements credited to `sharer` (the engaged pair's
  // sharer) at exactly `round`.
  double gain_for(const PlayerId& sharer, int round, double like_weight,
                  double reshare_weight) const;

  // w_like*likes + w_share*reshares received by `content` through `round`,
  // all sharers aggregated. Counts are unweighted by multipliers.
  double weighted_engagement(const ContentId& content, int round,
                             double like_weight, double reshare_weight) const;

  int total_likes() const;
  int total_reshares() const;

  bool operator==(const EngagementLedger&) const = default;

 private:
  struct Event {
    int round = 0;
    ActionKind kind = ActionKind::Like;
    ContentId content;
    PlayerId source;
    double actor_multiplier = 1.0;
    bool operator==(const Event&) const = default;
  };

  std::map<SharePair, PairCounts> pairs_;
  std::vector<Event> events_;
};

// Rebuilds the ledger from a raw action history; Share and Noop records are
// skipped. Actor multipliers are looked up in the config.
EngagementLedger rebuild_ledger(const std::vector<ActionRecord>& history,
                                const GameConfig& config);

}  // namespace likegame

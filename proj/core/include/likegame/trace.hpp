#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "likegame/types.hpp"
#include "likegame/utility.hpp"

namespace likegame {

// One display per player during the pre-game talk phase: the pool item the
// player claims to care about. Cheap in the literal sense: nothing is shared
// or engaged, only beliefs move.
struct CheapTalkRecord {
  struct Display {
    ContentId content;
    Vec vector;
    bool operator==(const Display&) const = default;
  };
  std::map<PlayerId, Display> displays;
  std::map<PlayerId, BeliefState> beliefs;
  bool operator==(const CheapTalkRecord&) const = default;
};

struct RoundRecord {
  int round = 0;
  // Visible pairs in effect while this round was played (empty at round 0).
  std::map<PlayerId, std::set<SharePair>> visible;
  // One action per player, in player-id order.
  std::vector<ActionRecord> actions;
  std::map<PlayerId, UtilityBreakdown> utilities;
  std::vector<std::string> annotations;
  bool operator==(const RoundRecord&) const = default;
};

// Per-round observables plus per-content amplification curves. Values are
// recorded in the trace and must equal recomputation from the trace's own
// actions (pure-function contract).
struct MetricsRow {
  int round = 0;
  std::vector<double> fci;  // one entry per type centroid
  double reshare_entropy = 0.0;
  double engagement_concentration = 0.0;
  std::map<PlayerId, double> exposure_alignment;
  std::map<PlayerId, double> dissent_exposure;
  // False when the player's visible set was empty and the 0/1 convention for
  // alignment/dissent applied.
  std::map<PlayerId, bool> exposure_defined;
  bool operator==(const MetricsRow&) const = default;
};

struct MetricsBlock {
  std::vector<MetricsRow> rounds;
  // Cumulative weighted engagement per content, index = round.
  std::map<ContentId, std::vector<double>> amplification;
  bool operator==(const MetricsBlock&) const = default;
};

struct RunTrace {
  GameConfig config;
  std::uint64_t seed = 0;
  std::optional<CheapTalkRecord> cheap_talk;
  std::vector<RoundRecord> rounds;  // index == round, 0..horizon
  MetricsBlock metrics;
};

}  // namespace likegame

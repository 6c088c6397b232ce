#pragma once

#include <cstddef>
#include <vector>

#include "likegame/trace.hpp"
#include "likegame/types.hpp"

namespace likegame {

// Nearest-centroid content typing; ties go to the lowest centroid index.
struct ContentTyping {
  std::vector<Vec> centroids;

  // pre: centroids non-empty
  std::size_t assign(const Vec& point) const;
};

// share_mass(t, r) - ideal_mass(t): fraction of all reshare actions up to
// round r that landed on type-t content, minus the fraction of players whose
// ideal is type t. Zero for every type until the first reshare.
double false_consensus_index(const RunTrace& trace, const ContentTyping& typing,
                             std::size_t type_index, int round);

// Shannon entropy (natural log) of the reshare distribution over types at
// round r; zero when nothing was reshared.
double reshare_entropy(const RunTrace& trace, const ContentTyping& typing, int round);

// Shannon entropy of cumulative weighted engagement across content items at
// round r; lower means more concentrated amplification. Zero when nothing was
// engaged.
double engagement_concentration(const RunTrace& trace, int round);

struct ExposureResult {
  double alignment = 0.0;  // 0 by convention when nothing was visible
  double dissent = 1.0;
  bool defined = false;
};

// Fraction of the player's visible pairs at round r whose content lies within
// normalized distance `radius` of the player's ideal; dissent is the
// complement.
ExposureResult exposure_alignment(const RunTrace& trace, const PlayerId& player, int round,
                                  double radius);

// Cumulative weighted engagement on `content`, one value per round 0..horizon;
// non-decreasing.
std::vector<double> amplification_curve(const RunTrace& trace, const ContentId& content);

// Fills a complete metrics block from the trace's config and actions alone.
MetricsBlock compute_metrics(const RunTrace& trace);

}  // namespace likegame

#include "likegame/validate.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "likegame/errors.hpp"
#include "likegame/vec.hpp"

namespace likegame {
namespace {

bool in_unit_cube(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x) || x < -1.0 || x > 1.0) return false;
  }
  return true;
}

void check_point(ValidationReport& report, const Vec& v, std::size_t k_dims,
                 const std::string& what) {
  if (v.size() != k_dims) {
    report.messages.push_back(
        {Severity::Error, what + ": expected " + std::to_string(k_dims) + " coordinates, got " +
                              std::to_string(v.size())});
  } else if (!in_unit_cube(v)) {
    report.messages.push_back({Severity::Error, what + ": coordinates outside [-1, 1]"});
  }
}

}  // namespace

bool ValidationReport::ok() const {
  for (const ValidationMessage& m : messages) {
    if (m.severity == Severity::Error) return false;
  }
  return true;
}

std::vector<std::string> ValidationReport::errors() const {
  std::vector<std::string> out;
  for (const ValidationMessage& m : messages) {
    if (m.severity == Severity::Error) out.push_back(m.text);
  }
  return out;
}

std::vector<std::string> ValidationReport::warnings() const {
  std::vector<std::string> out;
  for (const ValidationMessage& m : messages) {
    if (m.severity == Severity::Warning) out.push_back(m.text);
  }
  return out;
}

ValidationReport validate_config(const GameConfig& config) {
  ValidationReport report;
  auto error = [&](std::string text) {
    report.messages.push_back({Severity::Error, std::move(text)});
  };
  auto warn = [&](std::string text) {
    report.messages.push_back({Severity::Warning, std::move(text)});
  };

  if (config.k_dims < 1) error("k_dims must be at least 1");
  if (config.horizon < 1) error("horizon must be positive");
  if (config.players.empty()) error("no players configured");
  if (config.visibility_floor < 0.0 || config.visibility_floor > 1.0) {
    error("visibility_floor out of [0, 1]");
  } else if (config.info_mode == InfoMode::Imperfect && config.visibility_floor == 0.0) {
    // With a zero floor unengaged content is never sampled, so engagement can
    // never start; the floor must be strictly positive when it is in effect.
    error("visibility_floor must be positive in imperfect mode");
  }
  if (config.discount < 0.0 || config.discount > 1.0) error("discount out of [0, 1]");
  if (config.like_weight < 0.0) error("like_weight must be non-negative");
  if (config.reshare_weight < 0.0) error("reshare_weight must be non-negative");
  if (config.like_weight == 0.0 && config.reshare_weight == 0.0) {
    warn("degenerate engagement weights: likes and reshares are both worth zero");
  }
  if (config.alignment_radius <= 0.0 || config.alignment_radius > 1.0) {
    error("alignment_radius out of (0, 1]");
  }
  for (std::size_t i = 0; i < config.type_centroids.size(); ++i) {
    check_point(report, config.type_centroids[i], static_cast<std::size_t>(config.k_dims),
                "type centroid " + std::to_string(i));
  }
  if (config.cheap_talk && config.type_centroids.empty()) {
    warn("cheap_talk enabled but no type centroids are configured");
  }

  std::set<PlayerId> player_ids;
  std::set<ContentId> content_ids;
  for (const PlayerSpec& p : config.players) {
    const std::string who = "player '" + p.id.value + "'";
    if (p.id.value.empty()) error("player with empty id");
    if (!player_ids.insert(p.id).second) error("duplicate player id '" + p.id.value + "'");
    if (p.gamma < 0.0 || p.gamma > 1.0) error(who + ": gamma out of [0, 1]");
    if (p.audience_multiplier < 0.0) error(who + ": audience_multiplier must be non-negative");
    if (p.pool.empty()) error(who + ": empty content pool (round 0 requires a share)");
    check_point(report, p.ideal, static_cast<std::size_t>(config.k_dims), who + " ideal point");
    if (p.belief.majority_centroid_estimate) {
      check_point(report, *p.belief.majority_centroid_estimate,
                  static_cast<std::size_t>(config.k_dims), who + " belief centroid");
    }
    if (p.belief.majority_centroid_of_centroid_estimate) {
      check_point(report, *p.belief.majority_centroid_of_centroid_estimate,
                  static_cast<std::size_t>(config.k_dims), who + " belief centroid-of-centroid");
    }
    for (const auto& [other, prob] : p.belief.gamma_zero_type_prob) {
      if (prob < 0.0 || prob > 1.0) {
        error(who + ": belief type probability for '" + other.value + "' out of [0, 1]");
      }
    }
    for (const ContentItem& c : p.pool) {
      if (c.id.value.empty()) error(who + ": pool item with empty content id");
      if (!content_ids.insert(c.id).second) {
        error("duplicate content id '" + c.id.value + "'");
      }
      if (c.author != p.id) {
        error("content '" + c.id.value + "' in pool of '" + p.id.value +
              "' lists a different author");
      }
      check_point(report, c.vector, static_cast<std::size_t>(config.k_dims),
                  "content '" + c.id.value + "'");
    }

    switch (p.policy.kind) {
      case PolicyKind::LevelK:
        if (p.policy.depth < 0) error(who + ": level-k depth must be non-negative");
        break;
      case PolicyKind::InfluencerReposter:
        if (p.policy.radius < 0.0) error(who + ": reposter radius must be non-negative");
        break;
      case PolicyKind::InfluencerSeeker:
        if (p.policy.target.value.empty()) {
          error(who + ": influencer seeker needs a target");
        } else if (p.policy.target == p.id) {
          error(who + ": influencer seeker cannot target itself");
        }
        break;
      default:
        break;
    }
  }

  // Target existence and influence checks need the full id set.
  for (const PlayerSpec& p : config.players) {
    if (p.policy.kind != PolicyKind::InfluencerSeeker || p.policy.target.value.empty()) continue;
    const PlayerSpec* target = config.find_player(p.policy.target);
    if (target == nullptr) {
      error("player '" + p.id.value + "': seeker target '" + p.policy.target.value +
            "' does not exist");
    } else if (target->audience_multiplier <= 1.0) {
      warn("player '" + p.id.value + "': seeker target '" + target->id.value +
           "' has no outsized audience");
    }
  }

  return report;
}

void require_valid(const GameConfig& config) {
  const ValidationReport report = validate_config(config);
  if (report.ok()) return;
  std::ostringstream out;
  out << "invalid config:";
  for (const std::string& text : report.errors()) out << "\n  " << text;
  throw ConfigError(out.str());
}

}  // namespace likegame

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "likegame/ids.hpp"
#include "likegame/vec.hpp"

namespace likegame {

// Declaration order doubles as the canonical action ordering: legal sets are
// sorted Noop < Like < Reshare < Share, then by content id, then source id.
enum class ActionKind { Noop, Like, Reshare, Share };

std::string_view to_string(ActionKind kind);
std::optional<ActionKind> action_kind_from(std::string_view name);

struct ActionRecord {
  int round = 0;
  PlayerId actor;
  ActionKind kind = ActionKind::Noop;
  std::optional<ContentId> content;  // absent iff kind == Noop
  std::optional<PlayerId> source;    // Like/Reshare: whose share is engaged
  auto operator<=>(const ActionRecord&) const = default;
};

ActionRecord make_noop(int round, PlayerId actor);
ActionRecord make_share(int round, PlayerId actor, ContentId content);
ActionRecord make_like(int round, PlayerId actor, ContentId content, PlayerId source);
ActionRecord make_reshare(int round, PlayerId actor, ContentId content, PlayerId source);

struct ContentItem {
  ContentId id;
  Vec vector;  // coordinates in [-1,1]^k
  PlayerId author;
  int round_introduced = 0;
  bool operator==(const ContentItem&) const = default;
};

// A (content, sharer) pair: one feed entry somebody can engage with.
struct SharePair {
  ContentId content;
  PlayerId sharer;
  auto operator<=>(const SharePair&) const = default;
};

enum class PolicyKind {
  Idealist,
  QuidProQuo,
  UniformMixer,
  LevelK,
  InfluencerSeeker,
  InfluencerReposter,
};

std::string_view to_string(PolicyKind kind);
std::optional<PolicyKind> policy_kind_from(std::string_view name);

enum class EngageKind { Like, Reshare };

std::string_view to_string(EngageKind kind);
std::optional<EngageKind> engage_kind_from(std::string_view name);

struct PolicySpec {
  PolicyKind kind = PolicyKind::Idealist;
  int depth = 0;                            // LevelK: 0, 1 or 2
  PlayerId target;                          // InfluencerSeeker
  double radius = 0.0;                      // InfluencerReposter, normalized
  EngageKind engage = EngageKind::Reshare;  // InfluencerReposter
  bool blind = false;   // InfluencerReposter: ignore proximity entirely
  bool grim = false;    // QuidProQuo: retaliate forever instead of one round
  bool operator==(const PolicySpec&) const = default;
};

struct BeliefState {
  std::optional<Vec> majority_centroid_estimate;              // level-1
  std::optional<Vec> majority_centroid_of_centroid_estimate;  // level-2
  std::map<PlayerId, double> gamma_zero_type_prob;
  bool operator==(const BeliefState&) const = default;

  bool empty() const {
    return !majority_centroid_estimate &&
           !majority_centroid_of_centroid_estimate &&
           gamma_zero_type_prob.empty();
  }
};

struct PlayerSpec {
  PlayerId id;
  double gamma = 1.0;  // weight on personal utility, in [0,1]
  Vec ideal;
  PolicySpec policy;
  double audience_multiplier = 1.0;  // >= 1; enters visibility weighting only
  BeliefState belief;
  std::vector<ContentItem> pool;  // author == id for every item
  bool operator==(const PlayerSpec&) const = default;
};

enum class InfoMode { Perfect, Imperfect };
enum class PersonalUtilityMode { Static, ExposureWeighted };

struct GameConfig {
  int k_dims = 2;
  int horizon = 1;
  std::vector<PlayerSpec> players;
  bool allow_new_content = false;
  InfoMode info_mode = InfoMode::Perfect;
  double visibility_floor = 1.0;  // epsilon in (0,1]; Imperfect mode only
  double like_weight = 1.0;
  double reshare_weight = 2.0;
  double discount = 1.0;  // in [0,1]
  bool cheap_talk = false;
  std::vector<Vec> type_centroids;  // first entry is the salient type
  double alignment_radius = 0.25;   // normalized exposure radius for metrics
  PersonalUtilityMode personal_mode = PersonalUtilityMode::Static;
  std::uint64_t rng_seed = 0;

  int n_players() const { return static_cast<int>(players.size()); }
  const PlayerSpec* find_player(const PlayerId& id) const;
  // Searches every pool; content ids are unique game-wide.
  const ContentItem* find_content(const ContentId& id) const;
  std::vector<const PlayerSpec*> players_by_id() const;
};

}  // namespace likegame

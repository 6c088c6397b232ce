#include "likegame/types.hpp"

#include <algorithm>

namespace likegame {

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::Noop: return "noop";
    case ActionKind::Like: return "like";
    case ActionKind::Reshare: return "reshare";
    case ActionKind::Share: return "share";
  }
  return "noop";
}

std::optional<ActionKind> action_kind_from(std::string_view name) {
  if (name == "noop") return ActionKind::Noop;
  if (name == "like") return ActionKind::Like;
  if (name == "reshare") return ActionKind::Reshare;
  if (name == "share") return ActionKind::Share;
  return std::nullopt;
}

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Idealist: return "idealist";
    case PolicyKind::QuidProQuo: return "quid_pro_quo";
    case PolicyKind::UniformMixer: return "uniform_mixer";
    case PolicyKind::LevelK: return "level_k";
    case PolicyKind::InfluencerSeeker: return "influencer_seeker";
    case PolicyKind::InfluencerReposter: return "influencer_reposter";
  }
  return "idealist";
}

std::optional<PolicyKind> policy_kind_from(std::string_view name) {
  if (name == "idealist") return PolicyKind::Idealist;
  if (name == "quid_pro_quo") return PolicyKind::QuidProQuo;
  if (name == "uniform_mixer") return PolicyKind::UniformMixer;
  if (name == "level_k") return PolicyKind::LevelK;
  if (name == "influencer_seeker") return PolicyKind::InfluencerSeeker;
  if (name == "influencer_reposter") return PolicyKind::InfluencerReposter;
  return std::nullopt;
}

std::string_view to_string(EngageKind kind) {
  return kind == EngageKind::Like ? "like" : "reshare";
}

std::optional<EngageKind> engage_kind_from(std::string_view name) {
  if (name == "like") return EngageKind::Like;
  if (name == "reshare") return EngageKind::Reshare;
  return std::nullopt;
}

ActionRecord make_noop(int round, PlayerId actor) {
  return ActionRecord{round, std::move(actor), ActionKind::Noop, std::nullopt, std::nullopt};
}

ActionRecord make_share(int round, PlayerId actor, ContentId content) {
  return ActionRecord{round, std::move(actor), ActionKind::Share, std::move(content), std::nullopt};
}

ActionRecord make_like(int round, PlayerId actor, ContentId content, PlayerId source) {
  return ActionRecord{round, std::move(actor), ActionKind::Like, std::move(content), std::move(source)};
}

ActionRecord make_reshare(int round, PlayerId actor, ContentId content, PlayerId source) {
  return ActionRecord{round, std::move(actor), ActionKind::Reshare, std::move(content), std::move(source)};
}

const PlayerSpec* GameConfig::find_player(const PlayerId& id) const {
  for (const PlayerSpec& p : players) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const ContentItem* GameConfig::find_content(const ContentId& id) const {
  for (const PlayerSpec& p : players) {
    for (const ContentItem& c : p.pool) {
      if (c.id == id) return &c;
    }
  }
  return nullptr;
}

std::vector<const PlayerSpec*> GameConfig::players_by_id() const {
  std::vector<const PlayerSpec*> out;
  out.reserve(players.size());
  for (const PlayerSpec& p : players) out.push_back(&p);
  std::sort(out.begin(), out.end(),
            [](const PlayerSpec* a, const PlayerSpec* b) { return a->id < b->id; });
  return out;
}

}  // namespace likegame

#include "likegame/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace likegame::scenarios {

namespace {

std::string indexed(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%02d", prefix, i);
  return buf;
}

ContentItem item(std::string id, Vec v, PlayerId author) {
  ContentItem c;
  c.id = ContentId{std::move(id)};
  c.vector = std::move(v);
  c.author = std::move(author);
  return c;
}

PolicySpec policy_of(PolicyKind kind) {
  PolicySpec p;
  p.kind = kind;
  return p;
}

PolicySpec reactor_policy(double radius, EngageKind engage, bool blind) {
  PolicySpec p;
  p.kind = PolicyKind::InfluencerReposter;
  p.radius = radius;
  p.engage = engage;
  p.blind = blind;
  return p;
}

ScriptStrategy share_then_noop(const PlayerSpec& player, const ContentItem& c,
                               int horizon, std::string name) {
  ScriptStrategy s;
  s.name = std::move(name);
  s.actions.push_back(make_share(0, player.id, c.id));
  for (int r = 1; r <= horizon; ++r) {
    s.actions.push_back(make_noop(r, player.id));
  }
  return s;
}

}  // namespace

std::vector<GameConfig> equilibrium_family() {
  std::vector<GameConfig> out;
  for (int n = 2; n <= 3; ++n) {
    for (int pool = 1; pool <= 3; ++pool) {
      for (int horizon = 1; horizon <= 2; ++horizon) {
        GameConfig cfg;
        cfg.k_dims = 2;
        cfg.horizon = horizon;
        cfg.rng_seed = 1;
        for (int i = 0; i < n; ++i) {
          PlayerSpec p;
          p.id = PlayerId{indexed("p", i)};
          p.gamma = 1.0;
          double theta = 2.0 * std::numbers::pi * i / n;
          p.ideal = {0.7 * std::cos(theta), 0.7 * std::sin(theta)};
          p.policy = policy_of(PolicyKind::Idealist);
          for (int j = 0; j < pool; ++j) {
            double scale = 1.0 - 0.2 * j;
            p.pool.push_back(item(indexed("p", i) + indexed("c", j),
                                  {p.ideal[0] * scale, p.ideal[1] * scale},
                                  p.id));
          }
          cfg.players.push_back(std::move(p));
        }
        out.push_back(std::move(cfg));
      }
    }
  }
  return out;
}

std::vector<std::vector<Strategy>> share_noop_menus(const GameConfig& config) {
  std::vector<std::vector<Strategy>> menus;
  for (const PlayerSpec* p : config.players_by_id()) {
    std::vector<Strategy> menu;
    for (const ContentItem& c : p->pool) {
      menu.push_back(
          share_then_noop(*p, c, config.horizon, "share-" + c.id.value));
    }
    menus.push_back(std::move(menu));
  }
  return menus;
}

GameConfig two_player_quid_pro_quo(int horizon, bool allow_new_content) {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = horizon;
  cfg.allow_new_content = allow_new_content;
  cfg.rng_seed = 1;
  int pool = allow_new_content ? 2 : 1;
  const double sign[2] = {1.0, -1.0};
  for (int i = 0; i < 2; ++i) {
    PlayerSpec p;
    p.id = PlayerId{i == 0 ? "pa" : "pb"};
    p.gamma = 0.0;
    p.ideal = {0.5 * sign[i], 0.5 * sign[i]};
    p.policy = policy_of(PolicyKind::QuidProQuo);
    for (int j = 0; j < pool; ++j) {
      double scale = 1.0 - 0.2 * j;
      p.pool.push_back(item(p.id.value + indexed("c", j),
                            {p.ideal[0] * scale, p.ideal[1] * scale}, p.id));
    }
    cfg.players.push_back(std::move(p));
  }
  return cfg;
}

std::vector<std::vector<Strategy>> quid_pro_quo_menus(
    const GameConfig& config) {
  std::vector<std::vector<Strategy>> menus;
  for (const PlayerSpec* p : config.players_by_id()) {
    PolicyStrategy reciprocate;
    reciprocate.name = "quid-pro-quo";
    reciprocate.policy = policy_of(PolicyKind::QuidProQuo);
    std::vector<Strategy> menu;
    menu.push_back(std::move(reciprocate));
    menu.push_back(share_then_noop(*p, p->pool.front(), config.horizon,
                                   "share-then-noop"));
    menus.push_back(std::move(menu));
  }
  return menus;
}

GameConfig majority_dominance(bool blind_reactors) {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 1;
  cfg.rng_seed = 1;

  PlayerSpec focal;
  focal.id = PlayerId{"pa"};
  focal.gamma = 0.0;
  focal.ideal = {-0.8, -0.8};
  focal.policy = policy_of(PolicyKind::Idealist);
  focal.pool.push_back(item("a_maj", {0.8, 0.8}, focal.id));
  focal.pool.push_back(item("a_own", {-0.8, -0.8}, focal.id));
  cfg.players.push_back(std::move(focal));

  const char* reactor_ids[2] = {"pb", "pc"};
  const Vec reactor_pools[2] = {{0.1, -0.9}, {-0.9, 0.1}};
  for (int i = 0; i < 2; ++i) {
    PlayerSpec r;
    r.id = PlayerId{reactor_ids[i]};
    r.gamma = 0.0;
    r.ideal = {0.8, 0.8};
    r.policy = reactor_policy(0.25, EngageKind::Like, blind_reactors);
    r.pool.push_back(item(indexed("z", i + 1), reactor_pools[i], r.id));
    cfg.players.push_back(std::move(r));
  }
  return cfg;
}

std::vector<std::vector<Strategy>> majority_menus(const GameConfig& config) {
  std::vector<std::vector<Strategy>> menus;
  for (const PlayerSpec* p : config.players_by_id()) {
    std::vector<Strategy> menu;
    if (p->id.value == "pa") {
      menu.push_back(share_then_noop(*p, p->pool[0], config.horizon,
                                     "share-majority"));
      menu.push_back(share_then_noop(*p, p->pool[1], config.horizon,
                                     "share-own"));
    } else {
      PolicyStrategy react;
      react.name = "react";
      react.policy = p->policy;
      menu.push_back(std::move(react));
      menu.push_back(share_then_noop(*p, p->pool.front(), config.horizon,
                                     "sit-out"));
    }
    menus.push_back(std::move(menu));
  }
  return menus;
}

// Eighteen majority-followers share salient items and reshare them every
// round; one dissenter shares its own-ideal item and an own-type reposter
// reshares that item exactly once (round 1), then runs out of in-radius
// pairs. The salient reshare fraction is 18r / (18r + 1): strictly increasing
// while every ideal stays at the other type.
GameConfig false_consensus(std::uint64_t seed) {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 10;
  cfg.cheap_talk = true;
  cfg.type_centroids = {{0.8, 0.8}, {-0.8, -0.8}};
  cfg.rng_seed = seed;
  for (int i = 0; i < 18; ++i) {
    PlayerSpec p;
    p.id = PlayerId{indexed("p", i)};
    p.gamma = 0.0;
    p.ideal = {-0.8 + 0.01 * i, -0.78 + 0.005 * i};
    p.policy = policy_of(PolicyKind::LevelK);
    p.policy.depth = 1;
    p.pool.push_back(item(indexed("o", i), p.ideal, p.id));
    p.pool.push_back(
        item(indexed("s", i), {0.78 + 0.002 * i, 0.8 - 0.003 * i}, p.id));
    cfg.players.push_back(std::move(p));
  }

  PlayerSpec dissenter;
  dissenter.id = PlayerId{"p18"};
  dissenter.gamma = 0.0;
  dissenter.ideal = {-0.8, -0.8};
  dissenter.policy = policy_of(PolicyKind::Idealist);
  dissenter.pool.push_back(item("o18", dissenter.ideal, dissenter.id));
  cfg.players.push_back(std::move(dissenter));

  PlayerSpec reposter;
  reposter.id = PlayerId{"p19"};
  reposter.gamma = 0.0;
  reposter.ideal = {-0.8, -0.8};
  reposter.policy = reactor_policy(0.05, EngageKind::Reshare, false);
  reposter.pool.push_back(item("r19", {-0.78, -0.78}, reposter.id));
  cfg.players.push_back(std::move(reposter));
  return cfg;
}

GameConfig echo_chamber(std::uint64_t seed) {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 10;
  cfg.cheap_talk = true;
  cfg.info_mode = InfoMode::Imperfect;
  cfg.visibility_floor = 0.05;
  cfg.type_centroids = {{0.8, 0.8}, {-0.8, -0.8}};
  cfg.rng_seed = seed;
  for (int i = 0; i < 10; ++i) {
    PlayerSpec p;
    p.id = PlayerId{indexed("p", i)};
    p.gamma = 0.0;
    p.ideal = {0.78 + 0.004 * i, 0.8 - 0.003 * i};
    p.policy = policy_of(PolicyKind::LevelK);
    p.policy.depth = 1;
    p.pool.push_back(
        item(indexed("s", i), {p.ideal[0] - 0.02, p.ideal[1] + 0.01}, p.id));
    p.pool.push_back(item(indexed("x", i), {-0.8 + 0.01 * i, -0.8}, p.id));
    cfg.players.push_back(std::move(p));
  }
  return cfg;
}

// The target item is introduced by "s0" at the influencer's position and
// relayed onward by zero-audience warmers, so the influencer's reshare round
// is the same in both arms of a boosted/control pair. Fans court the
// influencer and can reach the target only through the influencer's reshare,
// which ties their per-round visibility of it to the influencer's audience
// multiplier. Pinners hold the exposure ceiling on a reference item sized
// just above the boosted reshare (22 vs 10), and with unit reshare weight a
// single landed pin (2) already strictly exceeds the control reshare (1), so
// neither arm sits at certainty exposure once any pin is up.
GameConfig signal_boost(std::uint64_t seed, bool boosted) {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 14;
  cfg.info_mode = InfoMode::Imperfect;
  cfg.visibility_floor = 0.08;
  cfg.reshare_weight = 1.0;
  cfg.rng_seed = seed;

  PlayerSpec influencer;
  influencer.id = PlayerId{"inf"};
  influencer.gamma = 0.0;
  influencer.ideal = {0.5, 0.5};
  influencer.policy = reactor_policy(0.1, EngageKind::Reshare, false);
  influencer.audience_multiplier = boosted ? 10.0 : 1.0;
  influencer.pool.push_back(item("fown", {-0.5, -0.5}, influencer.id));
  cfg.players.push_back(std::move(influencer));

  PlayerSpec author;
  author.id = PlayerId{"s0"};
  author.ideal = {0.5, 0.5};
  author.policy = policy_of(PolicyKind::Idealist);
  author.pool.push_back(item("boost", {0.5, 0.5}, author.id));
  cfg.players.push_back(std::move(author));

  PlayerSpec holder;
  holder.id = PlayerId{"dz"};
  holder.ideal = {-0.7, 0.7};
  holder.policy = policy_of(PolicyKind::Idealist);
  holder.pool.push_back(item("ref", {-0.7, 0.7}, holder.id));
  cfg.players.push_back(std::move(holder));

  for (int i = 0; i < 12; ++i) {
    PlayerSpec warmer;
    warmer.id = PlayerId{indexed("w", i)};
    warmer.gamma = 0.0;
    warmer.ideal = {0.5, 0.5};
    warmer.policy = reactor_policy(0.1, EngageKind::Reshare, false);
    warmer.audience_multiplier = 0.0;
    warmer.pool.push_back(item(indexed("wj", i), {-0.9 + 0.16 * i, -0.9}, warmer.id));
    cfg.players.push_back(std::move(warmer));
  }

  for (int i = 0; i < 10; ++i) {
    PlayerSpec fan;
    fan.id = PlayerId{indexed("f", i)};
    fan.gamma = 0.0;
    fan.ideal = {0.5, 0.5};
    fan.policy = policy_of(PolicyKind::InfluencerSeeker);
    fan.policy.target = PlayerId{"inf"};
    fan.audience_multiplier = 0.0;
    fan.pool.push_back(item(indexed("fj", i), {-0.45 + 0.1 * i, -0.95}, fan.id));
    cfg.players.push_back(std::move(fan));
  }

  for (int i = 0; i < 11; ++i) {
    PlayerSpec pinner;
    pinner.id = PlayerId{indexed("q", i)};
    pinner.gamma = 0.0;
    pinner.ideal = {-0.7, 0.7};
    pinner.policy = reactor_policy(0.07, EngageKind::Like, false);
    pinner.audience_multiplier = 2.0;
    pinner.pool.push_back(item(indexed("qj", i), {0.95, -0.9 + 0.17 * i}, pinner.id));
    cfg.players.push_back(std::move(pinner));
  }
  return cfg;
}

ContentId signal_boost_target() { return ContentId{"boost"}; }

}  // namespace likegame::scenarios

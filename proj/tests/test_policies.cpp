#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "likegame/engine.hpp"
#include "likegame/errors.hpp"
#include "likegame/legality.hpp"
#include "likegame/policies.hpp"
#include "likegame/rng.hpp"
#include "likegame/scenarios.hpp"
#include "likegame/state.hpp"
#include "test_support.hpp"

using namespace likegame;
using test_support::item;
using test_support::mixer_config;
using test_support::player;
using test_support::tiny_config;

namespace {

// ---- oracles -------------------------------------------------------------

// Pearson statistic against a uniform expectation.
double chi_square_uniform(const std::map<ActionRecord, int>& counts, int draws,
                          std::size_t cells) {
  const double expected = static_cast<double>(draws) / static_cast<double>(cells);
  double stat = 0.0;
  for (const auto& [action, count] : counts) {
    const double diff = static_cast<double>(count) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

bool contains(const std::vector<ActionRecord>& legal, const ActionRecord& action) {
  return std::find(legal.begin(), legal.end(), action) != legal.end();
}

// Three-player stage for direct policy calls: "t" has shared two items, the
// newer one at round 2, and everything is visible to "s".
struct CourtshipStage {
  GameConfig cfg;
  GameState state;

  CourtshipStage() {
    cfg.k_dims = 2;
    cfg.horizon = 6;
    cfg.players.push_back(player("s", 0.0, {0.5, 0.5}, {item("sc", {0.4, 0.4}, "s")}));
    PlayerSpec target = player("t", 0.0, {0.9, 0.1}, {item("c_old", {0.9, 0.1}, "t"),
                                                      item("c_new", {0.8, 0.2}, "t")});
    cfg.players.push_back(std::move(target));
    cfg.players.push_back(player("o", 0.0, {-0.5, -0.5}, {item("oc", {-0.5, -0.5}, "o")}));

    state = init_state(cfg);
    apply_action(state, make_share(0, PlayerId{"s"}, ContentId{"sc"}), cfg);
    apply_action(state, make_share(0, PlayerId{"t"}, ContentId{"c_old"}), cfg);
    apply_action(state, make_share(0, PlayerId{"o"}, ContentId{"oc"}), cfg);
    state.round = 2;
    cfg.allow_new_content = true;
    apply_action(state, make_share(2, PlayerId{"t"}, ContentId{"c_new"}), cfg);
    cfg.allow_new_content = false;
    state.round = 3;
    for (const PlayerSpec& p : cfg.players) {
      for (const auto& [pair, round] : state.pair_round) {
        if (pair.sharer != p.id) state.visible[p.id].insert(pair);
      }
    }
  }
};

}  // namespace

// ---- membership -----------------------------------------------------------

TEST_CASE("every policy kind picks from the legal set on live states") {
  const GameConfig cfg = mixer_config(6);
  const RunTrace trace = run_game(cfg);
  GameState state = init_state(cfg);
  const VisibilityDraws draws(cfg.rng_seed);
  RngStream rng(123);

  std::vector<PolicySpec> specs(6);
  specs[0].kind = PolicyKind::Idealist;
  specs[1].kind = PolicyKind::QuidProQuo;
  specs[2].kind = PolicyKind::UniformMixer;
  specs[3].kind = PolicyKind::LevelK;
  specs[3].depth = 2;
  specs[4].kind = PolicyKind::InfluencerSeeker;
  specs[4].target = PlayerId{"b"};
  specs[5].kind = PolicyKind::InfluencerReposter;
  specs[5].radius = 0.4;

  for (int r = 0; r <= cfg.horizon; ++r) {
    for (const PolicySpec& spec : specs) {
      PlayerSpec self = cfg.players.front();
      self.policy = spec;
      PolicyContext ctx{&self, &cfg, &rng};
      const auto legal = legal_actions(state, cfg, self.id);
      const PolicyChoice choice = make_policy(spec)(state, legal, ctx);
      CHECK(contains(legal, choice.action));
    }
    step_round(state, trace.rounds.at(r).actions, cfg, draws);
  }
}

TEST_CASE("only the uniform mixer is stochastic") {
  PolicySpec spec;
  for (PolicyKind kind : {PolicyKind::Idealist, PolicyKind::QuidProQuo, PolicyKind::LevelK,
                          PolicyKind::InfluencerSeeker, PolicyKind::InfluencerReposter}) {
    spec.kind = kind;
    CHECK(!is_stochastic(spec));
  }
  spec.kind = PolicyKind::UniformMixer;
  CHECK(is_stochastic(spec));
}

// ---- idealist ----------------------------------------------------------------

TEST_CASE("the idealist opens with its closest pool item, lowest id on ties") {
  GameConfig cfg = tiny_config();
  cfg.players[0].pool = {item("cb2", {0.3, 0.3}, "a"), item("ca2", {0.3, 0.3}, "a"),
                         item("far", {-0.9, -0.9}, "a")};
  const GameState state = init_state(cfg);
  RngStream rng(1);
  PolicyContext ctx{&cfg.players[0], &cfg, &rng};
  const auto legal = legal_actions(state, cfg, PlayerId{"a"});
  const PolicyChoice choice = idealist_choice(state, legal, ctx);
  CHECK(choice.action == make_share(0, PlayerId{"a"}, ContentId{"ca2"}));
}

TEST_CASE("without a strict improvement the idealist sits still") {
  // Static personal utility never moves with an own engagement, and own
  // engagement never feeds own social score, so every later round collapses
  // to the canonical first action.
  for (double gamma : {1.0, 0.0}) {
    GameConfig cfg = tiny_config();
    for (PlayerSpec& p : cfg.players) p.gamma = gamma;
    const RunTrace trace = run_game(cfg);
    for (int r = 1; r <= 2; ++r) {
      for (const ActionRecord& a : trace.rounds.at(r).actions) {
        CHECK(a.kind == ActionKind::Noop);
      }
    }
  }
}

TEST_CASE("under exposure weighting the idealist curates its feed") {
  GameConfig cfg = tiny_config();
  cfg.personal_mode = PersonalUtilityMode::ExposureWeighted;
  cfg.visibility_floor = 0.2;
  cfg.players[0].pool = {item("ca", {-0.7, -0.7}, "a")};
  cfg.players[1].pool = {item("cb", {0.5, 0.5}, "b")};
  const RunTrace trace = run_game(cfg);
  // Engaging the item at a's ideal tilts exposure toward it. With a single
  // massed item the normalized weights are the same for a like and a reshare,
  // so the canonical order breaks the tie toward the like.
  CHECK(trace.rounds.at(1).actions.at(0) ==
        make_like(1, PlayerId{"a"}, ContentId{"cb"}, PlayerId{"b"}));
}

TEST_CASE("idealist round-zero choices ignore beliefs entirely") {
  const GameConfig cfg = scenarios::equilibrium_family().at(5);
  RngStream rng(77);
  for (const PlayerSpec& p : cfg.players) {
    GameState state = init_state(cfg);
    const auto legal = legal_actions(state, cfg, p.id);
    PolicyContext ctx{&p, &cfg, &rng};
    const ActionRecord baseline = idealist_choice(state, legal, ctx).action;
    for (int trial = 0; trial < 25; ++trial) {
      BeliefState noise;
      noise.majority_centroid_estimate = Vec{rng.next_unit() * 2 - 1, rng.next_unit() * 2 - 1};
      noise.majority_centroid_of_centroid_estimate =
          Vec{rng.next_unit() * 2 - 1, rng.next_unit() * 2 - 1};
      for (const PlayerSpec& other : cfg.players) {
        if (other.id != p.id) noise.gamma_zero_type_prob[other.id] = rng.next_unit();
      }
      GameState perturbed = init_state(cfg);
      perturbed.beliefs[p.id] = noise;
      CHECK(idealist_choice(perturbed, legal, ctx).action == baseline);
    }
  }
}

// ---- level-k -------------------------------------------------------------------

TEST_CASE("depth zero is the idealist on every input") {
  GameConfig idealists = scenarios::echo_chamber(7);
  GameConfig level_zero = idealists;
  for (PlayerSpec& p : idealists.players) p.policy = PolicySpec{};
  for (PlayerSpec& p : level_zero.players) {
    p.policy = PolicySpec{};
    p.policy.kind = PolicyKind::LevelK;
    p.policy.depth = 0;
  }
  const RunTrace a = run_game(idealists);
  const RunTrace b = run_game(level_zero);
  REQUIRE(a.rounds.size() == b.rounds.size());
  for (std::size_t r = 0; r < a.rounds.size(); ++r) {
    CHECK(a.rounds[r].actions == b.rounds[r].actions);
  }
}

TEST_CASE("depth one shares what the estimated majority wants") {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 1;
  cfg.cheap_talk = true;
  cfg.type_centroids = {{0.9, 0.9}, {-0.9, -0.9}};
  for (int i = 0; i < 3; ++i) {
    const std::string id(1, static_cast<char>('a' + i));
    const double pop = 0.9 - 0.1 * i;
    PlayerSpec p = player(id, 0.0, {-0.4, -0.4},
                          {item(id + "_own", {-0.4, -0.4}, id),
                           item(id + "_pop", {pop, pop}, id)});
    p.policy.kind = PolicyKind::LevelK;
    p.policy.depth = 1;
    cfg.players.push_back(std::move(p));
  }
  const RunTrace trace = run_game(cfg);
  // Everyone displays its pop item, so each estimate sits near (0.8, 0.8) and
  // each opening share is the pop item, not the own ideal.
  for (int i = 0; i < 3; ++i) {
    const ActionRecord& a = trace.rounds.at(0).actions.at(i);
    CHECK(a.kind == ActionKind::Share);
    CHECK(a.content->value.find("_pop") != std::string::npos);
  }
}

TEST_CASE("missing estimates degrade level-k one depth at a time with notes") {
  const GameConfig cfg = tiny_config();
  const GameState state = init_state(cfg);
  RngStream rng(5);
  PlayerSpec self = cfg.players.front();
  self.policy.kind = PolicyKind::LevelK;
  PolicyContext ctx{&self, &cfg, &rng};
  const auto legal = legal_actions(state, cfg, self.id);

  self.policy.depth = 1;
  PolicyChoice depth1 = level_k_choice(state, legal, ctx, 1);
  REQUIRE(depth1.notes.size() == 1);
  CHECK(depth1.notes[0].find("depth-1 estimate missing") != std::string::npos);

  self.policy.depth = 2;
  PolicyChoice depth2 = level_k_choice(state, legal, ctx, 2);
  REQUIRE(depth2.notes.size() == 2);
  CHECK(depth2.notes[0].find("depth-2 estimate missing") != std::string::npos);
  CHECK(depth2.notes[1].find("depth-1 estimate missing") != std::string::npos);

  // Both collapse to the idealist's pick.
  const ActionRecord baseline = idealist_choice(state, legal, ctx).action;
  CHECK(depth1.action == baseline);
  CHECK(depth2.action == baseline);
}

TEST_CASE("fallback notes surface as round annotations in the trace") {
  GameConfig cfg = tiny_config();
  cfg.players[0].policy.kind = PolicyKind::LevelK;
  cfg.players[0].policy.depth = 1;
  const RunTrace trace = run_game(cfg);
  bool noted = false;
  for (const std::string& note : trace.rounds.at(0).annotations) {
    noted = noted || note.find("using depth 0") != std::string::npos;
  }
  CHECK(noted);
}

// ---- quid pro quo -----------------------------------------------------------------

TEST_CASE("mutual reciprocation runs the like then reshare cycle") {
  const GameConfig cfg = scenarios::two_player_quid_pro_quo(2, false);
  const RunTrace trace = run_game(cfg);
  for (const ActionRecord& a : trace.rounds.at(1).actions) {
    CHECK(a.kind == ActionKind::Like);
    CHECK(*a.source != a.actor);
  }
  for (const ActionRecord& a : trace.rounds.at(2).actions) {
    CHECK(a.kind == ActionKind::Reshare);
    CHECK(*a.source != a.actor);
  }
}

TEST_CASE("an unreciprocated engagement draws a one-round retaliation") {
  GameConfig cfg = scenarios::two_player_quid_pro_quo(3, false);
  PolicyFn silent = [](const GameState& state, const std::vector<ActionRecord>& legal,
                       PolicyContext& ctx) {
    if (state.round == 0) return PolicyChoice{legal.front(), {}};
    return PolicyChoice{make_noop(state.round, ctx.self->id), {}};
  };
  const RunTrace trace = run_game_with(cfg, {{PlayerId{"pb"}, silent}});
  const PlayerId pa{"pa"};
  CHECK(trace.rounds.at(1).actions.at(0).kind == ActionKind::Like);
  CHECK(trace.rounds.at(2).actions.at(0).kind == ActionKind::Noop);
  // Forgiven after one round: courtship resumes with the unspent reshare.
  CHECK(trace.rounds.at(3).actions.at(0).kind == ActionKind::Reshare);
  CHECK(trace.rounds.at(1).actions.at(0).actor == pa);
}

TEST_CASE("a grim reciprocator never forgives") {
  GameConfig cfg = scenarios::two_player_quid_pro_quo(3, false);
  for (PlayerSpec& p : cfg.players) p.policy.grim = true;
  PolicyFn silent = [](const GameState& state, const std::vector<ActionRecord>& legal,
                       PolicyContext& ctx) {
    if (state.round == 0) return PolicyChoice{legal.front(), {}};
    return PolicyChoice{make_noop(state.round, ctx.self->id), {}};
  };
  const RunTrace trace = run_game_with(cfg, {{PlayerId{"pb"}, silent}});
  CHECK(trace.rounds.at(1).actions.at(0).kind == ActionKind::Like);
  CHECK(trace.rounds.at(2).actions.at(0).kind == ActionKind::Noop);
  CHECK(trace.rounds.at(3).actions.at(0).kind == ActionKind::Noop);
}

TEST_CASE("retaliation is announced in the round annotations") {
  GameConfig cfg = scenarios::two_player_quid_pro_quo(2, false);
  PolicyFn silent = [](const GameState& state, const std::vector<ActionRecord>& legal,
                       PolicyContext& ctx) {
    if (state.round == 0) return PolicyChoice{legal.front(), {}};
    return PolicyChoice{make_noop(state.round, ctx.self->id), {}};
  };
  const RunTrace trace = run_game_with(cfg, {{PlayerId{"pb"}, silent}});
  bool announced = false;
  for (const std::string& note : trace.rounds.at(2).annotations) {
    announced = announced || note.find("retaliating") != std::string::npos;
  }
  CHECK(announced);
}

TEST_CASE("with fresh content allowed the pair restarts on the three-round cycle") {
  const GameConfig cfg = scenarios::two_player_quid_pro_quo(3, true);
  const RunTrace trace = run_game(cfg);
  for (const ActionRecord& a : trace.rounds.at(3).actions) {
    CHECK(a.kind == ActionKind::Share);
  }
}

// ---- uniform mixer ------------------------------------------------------------------

TEST_CASE("mixer draws are uniform over the legal set") {
  GameConfig cfg = tiny_config();
  cfg.players[0].pool = {item("c0", {0.1, 0.1}, "a"), item("c1", {0.2, 0.2}, "a"),
                         item("c2", {0.3, 0.3}, "a"), item("c3", {0.4, 0.4}, "a")};
  const GameState state = init_state(cfg);
  const auto legal = legal_actions(state, cfg, PlayerId{"a"});
  REQUIRE(legal.size() == 4);

  RngStream rng(2026);
  PolicyContext ctx{&cfg.players[0], &cfg, &rng};
  std::map<ActionRecord, int> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    counts[uniform_mixer_choice(state, legal, ctx).action] += 1;
  }
  REQUIRE(counts.size() == 4);
  // Chi-square with three degrees of freedom at the 0.001 level.
  CHECK(chi_square_uniform(counts, draws, 4) < 16.266);
}

// ---- influencer seeker ----------------------------------------------------------------

TEST_CASE("the seeker opens with the item its target would like most") {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 2;
  PlayerSpec seeker = player("s", 0.0, {-0.9, -0.9},
                             {item("mine", {-0.9, -0.9}, "s"), item("bait", {0.7, 0.7}, "s")});
  seeker.policy.kind = PolicyKind::InfluencerSeeker;
  seeker.policy.target = PlayerId{"t"};
  cfg.players.push_back(std::move(seeker));
  cfg.players.push_back(player("t", 0.0, {0.8, 0.8}, {item("tc", {0.8, 0.8}, "t")}));

  const RunTrace trace = run_game(cfg);
  CHECK(trace.rounds.at(0).actions.at(0) == make_share(0, PlayerId{"s"}, ContentId{"bait"}));
}

TEST_CASE("the seeker courts the target's newest share to completion first") {
  CourtshipStage stage;
  PlayerSpec self = stage.cfg.players.front();
  self.policy.kind = PolicyKind::InfluencerSeeker;
  self.policy.target = PlayerId{"t"};
  RngStream rng(3);
  PolicyContext ctx{&self, &stage.cfg, &rng};

  const auto legal = legal_actions(stage.state, stage.cfg, self.id);
  PolicyChoice first = influencer_seeker_choice(stage.state, legal, ctx, PlayerId{"t"});
  CHECK(first.action == make_like(3, PlayerId{"s"}, ContentId{"c_new"}, PlayerId{"t"}));

  stage.state.engaged.insert({PlayerId{"s"}, ActionKind::Like, ContentId{"c_new"}, PlayerId{"t"}});
  const auto after_like = legal_actions(stage.state, stage.cfg, self.id);
  PolicyChoice second = influencer_seeker_choice(stage.state, after_like, ctx, PlayerId{"t"});
  CHECK(second.action == make_reshare(3, PlayerId{"s"}, ContentId{"c_new"}, PlayerId{"t"}));

  stage.state.engaged.insert(
      {PlayerId{"s"}, ActionKind::Reshare, ContentId{"c_new"}, PlayerId{"t"}});
  const auto after_both = legal_actions(stage.state, stage.cfg, self.id);
  PolicyChoice third = influencer_seeker_choice(stage.state, after_both, ctx, PlayerId{"t"});
  CHECK(third.action == make_like(3, PlayerId{"s"}, ContentId{"c_old"}, PlayerId{"t"}));
}

TEST_CASE("a seeker with nothing to court sits out the round") {
  CourtshipStage stage;
  PlayerSpec self = stage.cfg.players.front();
  self.policy.kind = PolicyKind::InfluencerSeeker;
  self.policy.target = PlayerId{"t"};
  RngStream rng(4);
  PolicyContext ctx{&self, &stage.cfg, &rng};
  for (ActionKind kind : {ActionKind::Like, ActionKind::Reshare}) {
    stage.state.engaged.insert({PlayerId{"s"}, kind, ContentId{"c_new"}, PlayerId{"t"}});
    stage.state.engaged.insert({PlayerId{"s"}, kind, ContentId{"c_old"}, PlayerId{"t"}});
  }
  const auto legal = legal_actions(stage.state, stage.cfg, self.id);
  PolicyChoice choice = influencer_seeker_choice(stage.state, legal, ctx, PlayerId{"t"});
  CHECK(choice.action.kind == ActionKind::Noop);
}

TEST_CASE("a seeker with an unknown target is rejected") {
  CourtshipStage stage;
  PlayerSpec self = stage.cfg.players.front();
  RngStream rng(5);
  PolicyContext ctx{&self, &stage.cfg, &rng};
  const auto legal = legal_actions(stage.state, stage.cfg, self.id);
  CHECK_THROWS_AS(influencer_seeker_choice(stage.state, legal, ctx, PlayerId{"zz"}),
                  EngineError);
}

// ---- influencer reposter ----------------------------------------------------------------

TEST_CASE("the sighted reposter engages the closest content inside its radius") {
  CourtshipStage stage;
  PlayerSpec self = stage.cfg.players.front();
  self.ideal = {0.8, 0.2};
  self.policy.kind = PolicyKind::InfluencerReposter;
  self.policy.engage = EngageKind::Reshare;
  self.policy.radius = 0.2;
  RngStream rng(6);
  PolicyContext ctx{&self, &stage.cfg, &rng};
  const auto legal = legal_actions(stage.state, stage.cfg, self.id);
  // c_new sits 0.0 away under the normalized metric, c_old 0.05; oc far out.
  PolicyChoice choice = influencer_reposter_choice(stage.state, legal, ctx);
  CHECK(choice.action == make_reshare(3, PlayerId{"s"}, ContentId{"c_new"}, PlayerId{"t"}));

  self.policy.radius = 0.01;
  self.ideal = {0.0, 0.9};
  PolicyChoice out_of_range = influencer_reposter_choice(stage.state, legal, ctx);
  CHECK(out_of_range.action.kind == ActionKind::Noop);
}

TEST_CASE("the blind reposter takes the first canonical candidate") {
  CourtshipStage stage;
  PlayerSpec self = stage.cfg.players.front();
  self.policy.kind = PolicyKind::InfluencerReposter;
  self.policy.engage = EngageKind::Like;
  self.policy.blind = true;
  RngStream rng(7);
  PolicyContext ctx{&self, &stage.cfg, &rng};
  const auto legal = legal_actions(stage.state, stage.cfg, self.id);
  PolicyChoice choice = influencer_reposter_choice(stage.state, legal, ctx);
  CHECK(choice.action == make_like(3, PlayerId{"s"}, ContentId{"c_new"}, PlayerId{"t"}));
}

TEST_CASE("the reposter never engages the same content twice") {
  CourtshipStage stage;
  // A second sharer republishes c_new, giving it two distinct pairs.
  stage.state.pair_round[{ContentId{"c_new"}, PlayerId{"o"}}] = 2;
  stage.state.visible[PlayerId{"s"}].insert({ContentId{"c_new"}, PlayerId{"o"}});

  PlayerSpec self = stage.cfg.players.front();
  self.policy.kind = PolicyKind::InfluencerReposter;
  self.policy.engage = EngageKind::Like;
  self.policy.blind = true;
  RngStream rng(8);
  PolicyContext ctx{&self, &stage.cfg, &rng};

  // The earlier like on (c_new, t) blocks the (c_new, o) copy as well.
  stage.state.history.push_back(make_like(2, PlayerId{"s"}, ContentId{"c_new"}, PlayerId{"t"}));
  stage.state.engaged.insert({PlayerId{"s"}, ActionKind::Like, ContentId{"c_new"}, PlayerId{"t"}});
  const auto legal = legal_actions(stage.state, stage.cfg, self.id);
  REQUIRE(contains(legal, make_like(3, PlayerId{"s"}, ContentId{"c_new"}, PlayerId{"o"})));
  PolicyChoice choice = influencer_reposter_choice(stage.state, legal, ctx);
  CHECK(choice.action == make_like(3, PlayerId{"s"}, ContentId{"c_old"}, PlayerId{"t"}));
}

// ---- cheap talk displays ----------------------------------------------------------------

TEST_CASE("display choice splits on the audience appetite") {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 1;
  cfg.type_centroids = {{0.9, 0.9}};
  PlayerSpec p = player("a", 0.0, {-0.5, -0.5},
                        {item("own", {-0.5, -0.5}, "a"), item("pop", {0.8, 0.8}, "a")});
  cfg.players.push_back(p);

  CHECK(cheap_talk_display(cfg.players[0], cfg) == ContentId{"pop"});
  cfg.players[0].gamma = 0.6;
  CHECK(cheap_talk_display(cfg.players[0], cfg) == ContentId{"own"});
  cfg.players[0].gamma = 0.0;
  cfg.type_centroids.clear();
  CHECK(cheap_talk_display(cfg.players[0], cfg) == ContentId{"own"});
}

TEST_CASE("display ties resolve to the lowest content id") {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 1;
  PlayerSpec p = player("a", 1.0, {0.0, 0.0},
                        {item("twin_b", {0.1, 0.0}, "a"), item("twin_a", {-0.1, 0.0}, "a")});
  cfg.players.push_back(p);
  CHECK(cheap_talk_display(cfg.players[0], cfg) == ContentId{"twin_a"});
}

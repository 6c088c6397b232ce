#include "likegame/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "likegame/engine.hpp"
#include "likegame/errors.hpp"
#include "likegame/legality.hpp"
#include "likegame/oracle.hpp"
#include "likegame/policies.hpp"
#include "likegame/rng.hpp"
#include "likegame/scenarios.hpp"
#include "likegame/state.hpp"

namespace likegame::verify {

namespace {

using Combine = std::function<double(double, double, double)>;

double contract_combine(double gamma, double personal, double social) {
  return gamma * personal + (1.0 - gamma) * social;
}

Vec random_point(RngStream& rng, int k) {
  Vec v;
  for (int i = 0; i < k; ++i) v.push_back(rng.next_unit() * 2.0 - 1.0);
  return v;
}

GameConfig random_instance(RngStream& rng, int index) {
  GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 1 + static_cast<int>(rng.next_index(2));
  cfg.rng_seed = 1000 + static_cast<std::uint64_t>(index);
  int n = 2 + static_cast<int>(rng.next_index(2));
  for (int i = 0; i < n; ++i) {
    PlayerSpec p;
    p.id = PlayerId{"p" + std::to_string(i)};
    p.ideal = random_point(rng, cfg.k_dims);
    p.policy.kind =
        rng.next_unit() < 0.5 ? PolicyKind::Idealist : PolicyKind::UniformMixer;
    int pool = 1 + static_cast<int>(rng.next_index(2));
    for (int j = 0; j < pool; ++j) {
      ContentItem c;
      c.id = ContentId{p.id.value + "c" + std::to_string(j)};
      c.vector = random_point(rng, cfg.k_dims);
      c.author = p.id;
      p.pool.push_back(std::move(c));
    }
    cfg.players.push_back(std::move(p));
  }
  return cfg;
}

GameConfig with_gamma(GameConfig cfg, double gamma) {
  for (PlayerSpec& p : cfg.players) p.gamma = gamma;
  return cfg;
}

ClaimResult check_endpoint_reductions(const Combine& combine) {
  ClaimResult claim{"endpoint-reductions", false, ""};
  RngStream rng(20240817);
  int comparisons = 0;
  for (int i = 0; i < 50; ++i) {
    GameConfig base = random_instance(rng, i);
    for (double gamma : {1.0, 0.0}) {
      RunTrace trace = run_game(with_gamma(base, gamma));
      for (const RoundRecord& r : trace.rounds) {
        for (const auto& [id, u] : r.utilities) {
          double expected = combine(gamma, u.personal, u.social);
          if (u.combined != expected) {
            std::ostringstream what;
            what << "instance " << i << " gamma " << gamma << " round "
                 << r.round << " player " << id.value << ": combined "
                 << u.combined << " != reference " << expected;
            claim.detail = what.str();
            return claim;
          }
          ++comparisons;
        }
      }
    }
    RunTrace mid = run_game(with_gamma(base, 0.5));
    for (const RoundRecord& r : mid.rounds) {
      for (const auto& [id, u] : r.utilities) {
        double lo = std::min(u.personal, u.social) - 1e-12;
        double hi = std::max(u.personal, u.social) + 1e-12;
        if (u.combined < lo || u.combined > hi) {
          std::ostringstream what;
          what << "instance " << i << " gamma 0.5 round " << r.round
               << " player " << id.value << ": combined " << u.combined
               << " outside [" << lo << ", " << hi << "]";
          claim.detail = what.str();
          return claim;
        }
        ++comparisons;
      }
    }
  }
  claim.passed = true;
  claim.detail =
      "50 instances, " + std::to_string(comparisons) + " utility comparisons";
  return claim;
}

ClaimResult check_idealist_equilibrium() {
  ClaimResult claim{"idealist-equilibrium", false, ""};
  auto family = scenarios::equilibrium_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    NormalFormGame game =
        build_normal_form(family[i], scenarios::share_noop_menus(family[i]));
    std::vector<std::size_t> all_idealist(game.players.size(), 0);
    auto nash = find_pure_nash(game);
    if (std::find(nash.begin(), nash.end(), all_idealist) == nash.end()) {
      claim.detail = "instance " + std::to_string(i) +
                     ": the all-idealist profile is not a pure equilibrium";
      return claim;
    }
  }
  claim.passed = true;
  claim.detail = std::to_string(family.size()) + " instances";
  return claim;
}

BeliefState random_belief(RngStream& rng, const GameConfig& cfg,
                          const PlayerId& self) {
  BeliefState b;
  b.majority_centroid_estimate = random_point(rng, cfg.k_dims);
  b.majority_centroid_of_centroid_estimate = random_point(rng, cfg.k_dims);
  for (const PlayerSpec& p : cfg.players)
    if (p.id != self) b.gamma_zero_type_prob[p.id] = rng.next_unit();
  return b;
}

ClaimResult check_belief_invariance() {
  ClaimResult claim{"belief-invariance", false, ""};
  RngStream rng(424242);
  PolicyFn idealist = make_policy(PolicySpec{});
  int checks = 0;
  for (const GameConfig& cfg : scenarios::equilibrium_family()) {
    for (const PlayerSpec& p : cfg.players) {
      GameState state = init_state(cfg);
      auto legal = legal_actions(state, cfg, p.id);
      PolicyContext ctx{&p, &cfg, &rng};
      ActionRecord baseline = idealist(state, legal, ctx).action;
      for (int trial = 0; trial < 10; ++trial) {
        GameState perturbed = init_state(cfg);
        perturbed.beliefs[p.id] = random_belief(rng, cfg, p.id);
        ActionRecord choice = idealist(perturbed, legal, ctx).action;
        ++checks;
        if (choice != baseline) {
          claim.detail = "player " + p.id.value +
                         " changed its round-0 share under a belief perturbation";
          return claim;
        }
      }
    }
  }
  claim.passed = true;
  claim.detail = std::to_string(checks) + " perturbations";
  return claim;
}

bool mutual_engagement(const RoundRecord& r, ActionKind kind) {
  if (r.actions.size() != 2) return false;
  for (const ActionRecord& a : r.actions) {
    if (a.kind != kind) return false;
    if (!a.source || *a.source == a.actor) return false;
  }
  return true;
}

ClaimResult check_reciprocity_cycle() {
  ClaimResult claim{"reciprocity-cycle", false, ""};
  GameConfig cfg = scenarios::two_player_quid_pro_quo(2, false);
  RunTrace trace = run_game(cfg);
  if (!mutual_engagement(trace.rounds.at(1), ActionKind::Like)) {
    claim.detail = "round 1 is not a mutual like";
    return claim;
  }
  if (!mutual_engagement(trace.rounds.at(2), ActionKind::Reshare)) {
    claim.detail = "round 2 is not a mutual reshare";
    return claim;
  }

  NormalFormGame game =
      build_normal_form(cfg, scenarios::quid_pro_quo_menus(cfg));
  double mutual0 = game.payoff({0, 0}, 0);
  double mutual1 = game.payoff({0, 0}, 1);
  double deviate0 = game.payoff({1, 0}, 0);
  double deviate1 = game.payoff({0, 1}, 1);
  if (!(mutual0 > deviate0 && mutual1 > deviate1)) {
    std::ostringstream what;
    what << "mutual payoffs (" << mutual0 << ", " << mutual1
         << ") do not strictly beat unilateral noop deviations (" << deviate0
         << ", " << deviate1 << ")";
    claim.detail = what.str();
    return claim;
  }

  GameConfig fresh = scenarios::two_player_quid_pro_quo(3, true);
  RunTrace long_run = run_game(fresh);
  for (const ActionRecord& a : long_run.rounds.at(3).actions) {
    if (a.kind != ActionKind::Share) {
      claim.detail = "round 3 with fresh content allowed is not a mutual share";
      return claim;
    }
  }
  claim.passed = true;
  claim.detail = "like/reshare cycle and strict deviation gap confirmed";
  return claim;
}

ClaimResult check_majority_dominance() {
  ClaimResult claim{"majority-dominance", false, ""};
  GameConfig sighted = scenarios::majority_dominance(false);
  NormalFormGame game =
      build_normal_form(sighted, scenarios::majority_menus(sighted));
  DominanceRelation rel = weak_dominance(game, 0, 0, 1);
  if (rel.verdict != DominanceVerdict::WeaklyDominates) {
    claim.detail = std::string("sighted reactors: expected weak dominance, got ") +
                   std::string(to_string(rel.verdict));
    return claim;
  }
  if (!rel.strict_witness) {
    claim.detail = "sighted reactors: no strict witness";
    return claim;
  }

  GameConfig blind = scenarios::majority_dominance(true);
  NormalFormGame blind_game =
      build_normal_form(blind, scenarios::majority_menus(blind));
  DominanceRelation blind_rel = weak_dominance(blind_game, 0, 0, 1);
  if (blind_rel.verdict != DominanceVerdict::Incomparable) {
    claim.detail = std::string("blind reactors: expected incomparable, got ") +
                   std::string(to_string(blind_rel.verdict));
    return claim;
  }
  claim.passed = true;
  claim.detail = "weak dominance with strict witness; blind mutation collapses it";
  return claim;
}

ClaimResult check_ledger_conservation(bool tamper) {
  ClaimResult claim{"ledger-conservation", false, ""};
  RunTrace trace = run_game(scenarios::echo_chamber(7));
  if (tamper) {
    ActionRecord& first = trace.rounds.at(0).actions.at(0);
    const PlayerSpec* actor = trace.config.find_player(first.actor);
    first = make_like(0, actor->id, actor->pool.front().id, actor->id);
  }
  GameState final_state;
  try {
    final_state = replay_trace(trace);
  } catch (const EngineError& e) {
    claim.detail = std::string("replay rejected a recorded action: ") + e.what();
    return claim;
  }
  EngagementLedger recounted = rebuild_ledger(final_state.history, trace.config);
  if (!(recounted == final_state.ledger)) {
    claim.detail = "ledger recount from history disagrees with incremental ledger";
    return claim;
  }
  std::size_t recorded = 0;
  for (const RoundRecord& r : trace.rounds) recorded += r.actions.size();
  if (recorded != final_state.history.size()) {
    claim.detail = "replayed history length disagrees with the trace";
    return claim;
  }
  claim.passed = true;
  claim.detail = std::to_string(recorded) + " actions replayed, ledgers agree";
  return claim;
}

}  // namespace

std::vector<ClaimResult> run_verification(const VerifyHooks& hooks) {
  Combine combine = hooks.combine ? hooks.combine : contract_combine;
  std::vector<ClaimResult> results;
  auto guarded = [&results](ClaimResult (*fn)(), const char* name) {
    try {
      results.push_back(fn());
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  try {
    results.push_back(check_endpoint_reductions(combine));
  } catch (const std::exception& e) {
    results.push_back(
        {"endpoint-reductions", false, std::string("exception: ") + e.what()});
  }
  guarded(check_idealist_equilibrium, "idealist-equilibrium");
  guarded(check_belief_invariance, "belief-invariance");
  guarded(check_reciprocity_cycle, "reciprocity-cycle");
  guarded(check_majority_dominance, "majority-dominance");
  try {
    results.push_back(check_ledger_conservation(hooks.tamper_self_engagement));
  } catch (const std::exception& e) {
    results.push_back(
        {"ledger-conservation", false, std::string("exception: ") + e.what()});
  }
  return results;
}

}  // namespace likegame::verify

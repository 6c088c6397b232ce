#pragma once

#include <cstdint>
#include <vector>

#include "likegame/oracle.hpp"
#include "likegame/types.hpp"

namespace likegame::scenarios {

// Pure-personal instances (every gamma = 1) with ring ideals: n in {2,3} x
// pool size in {1,2,3} x horizon in {1,2}. Pool item j sits at ideal*(1-0.2j),
// so item 0 is each player's closest.
std::vector<GameConfig> equilibrium_family();

// One script per pool item: share it at round 0, noop afterwards. Menus are
// in player-id order.
std::vector<std::vector<Strategy>> share_noop_menus(const GameConfig& config);

// Two engagement-only players (gamma = 0) with one pool item each; horizon 2,
// or 3 with fresh content allowed for the introduce-like-reshare cycle.
GameConfig two_player_quid_pro_quo(int horizon, bool allow_new_content);

// Per player: the reciprocating policy vs. share-then-noop.
std::vector<std::vector<Strategy>> quid_pro_quo_menus(const GameConfig& config);

// One engagement-seeking focal player whose pool holds a majority-aligned and
// an own-ideal item, plus two reactors that like anything within 0.25 of
// their (majority) ideal. Blind reactors ignore proximity, which collapses
// the focal player's strategy gap.
GameConfig majority_dominance(bool blind_reactors);

// Focal menu {share-majority, share-own}; reactor menus {react, noop-script}.
std::vector<std::vector<Strategy>> majority_menus(const GameConfig& config);

// Twenty engagement-seeking players (14 follow their majority estimate, 6 mix
// uniformly) whose pools pair a salient-type item with an own-ideal item;
// cheap talk makes the salient type everyone's majority estimate while every
// ideal belongs to the other type.
GameConfig false_consensus(std::uint64_t seed);

// Ten majority-followers whose ideals and shared items all sit at the salient
// type; imperfect visibility with a low floor, so engagement concentrates
// exposure on already-engaged (ideal-aligned) content.
GameConfig echo_chamber(std::uint64_t seed);

// A courted reposter with a large audience (multiplier 10 when boosted, 1 in
// the control), one seeker whose item the reposter amplifies, eight like-only
// fans that can only ever engage that item, and a detached high-multiplier
// pair that pins the engagement maximum identically in both runs.
GameConfig signal_boost(std::uint64_t seed, bool boosted);

// The seeker's content item in the signal_boost scenario.
ContentId signal_boost_target();

}  // namespace likegame::scenarios

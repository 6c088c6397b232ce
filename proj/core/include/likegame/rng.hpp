#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace likegame {

// Used both as a bit mixer and as the documented seed-splitting rule for
// sweeps: run seed j is the j-th output of the splitmix sequence started at
// the base config seed.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t splitmix64_mix(std::uint64_t x);

// Maps 64 random bits to a double in [0,1) with 53-bit resolution.
double unit_from_bits(std::uint64_t bits);

// Sequential stream for policy draws. Consumption order is fixed by the
// engine: cheap talk first, then per round every player in id order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  double next_unit() { return unit_from_bits(gen_()); }
  // Uniform index in [0, n) via Lemire's multiply-shift. pre: n >= 1
  std::size_t next_index(std::size_t n);

 private:
  std::mt19937_64 gen_;
};

// Keyed uniform draws for visibility sampling. The draw for a given
// (round, viewer, content, sharer) tuple is a pure function of the run seed
// and that tuple, so it does not depend on how many other pairs exist or on
// evaluation order. Runs that share a seed therefore sample the same variate
// for the same visibility decision, which keeps paired comparison runs
// decision-aligned even after their histories diverge.
class VisibilityDraws {
 public:
  explicit VisibilityDraws(std::uint64_t run_seed);

  double unit(int round, std::string_view viewer, std::string_view content,
              std::string_view sharer) const;

 private:
  std::uint64_t base_;
};

}  // namespace likegame

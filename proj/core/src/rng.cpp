#include "likegame/rng.hpp"

#include <cassert>

namespace likegame {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  return splitmix64_mix(state);
}

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::size_t RngStream::next_index(std::size_t n) {
  assert(n >= 1);
  const unsigned __int128 product =
      static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
  return static_cast<std::size_t>(product >> 64);
}

namespace {

std::uint64_t fnv1a64(std::uint64_t hash, const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::uint64_t fnv1a64_str(std::uint64_t hash, std::string_view s) {
  hash = fnv1a64(hash, s.data(), s.size());
  const unsigned char sep = 0x1F;
  return fnv1a64(hash, &sep, 1);
}

}  // namespace

VisibilityDraws::VisibilityDraws(std::uint64_t run_seed)
    : base_(splitmix64_mix(run_seed ^ 0xA0761D6478BD642FULL)) {}

double VisibilityDraws::unit(int round, std::string_view viewer,
                             std::string_view content,
                             std::string_view sharer) const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  const std::uint64_t r = static_cast<std::uint64_t>(round);
  h = fnv1a64(h, &r, sizeof(r));
  h = fnv1a64_str(h, viewer);
  h = fnv1a64_str(h, content);
  h = fnv1a64_str(h, sharer);
  return unit_from_bits(splitmix64_mix(base_ ^ h));
}

}  // namespace likegame

#pragma once

#include <compare>
#include <string>

namespace likegame {

// Opaque identifiers. Ordering is lexicographic on the raw string; this is the
// canonical tie-break order used by the engine, the policies and the metrics.
struct PlayerId {
  std::string value;
  auto operator<=>(const PlayerId&) const = default;
};

struct ContentId {
  std::string value;
  auto operator<=>(const ContentId&) const = default;
};

}  // namespace likegame

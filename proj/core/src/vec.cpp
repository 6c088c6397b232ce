#include "likegame/vec.hpp"

#include <cassert>
#include <cmath>

namespace likegame {

double distance(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double max_distance(std::size_t k) { return 2.0 * std::sqrt(static_cast<double>(k)); }

double normalized_distance(const Vec& a, const Vec& b) {
  return distance(a, b) / max_distance(a.size());
}

Vec mean_point(const std::vector<Vec>& points) {
  assert(!points.empty());
  Vec out(points.front().size(), 0.0);
  for (const Vec& p : points) {
    assert(p.size() == out.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
  }
  for (double& x : out) x /= static_cast<double>(points.size());
  return out;
}

}  // namespace likegame

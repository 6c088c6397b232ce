#pragma once

#include <cstddef>
#include <vector>

namespace likegame {

// Content and ideal points live in [-1,1]^k.
using Vec = std::vector<double>;

double distance(const Vec& a, const Vec& b);

// Diameter of the [-1,1]^k cube: 2*sqrt(k). Distances are normalized by this
// wherever a dimension-free radius or utility term is needed.
double max_distance(std::size_t k);

double normalized_distance(const Vec& a, const Vec& b);

// pre: points non-empty, equal dimensions
Vec mean_point(const std::vector<Vec>& points);

}  // namespace likegame

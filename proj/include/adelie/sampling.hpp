#pragma once

#include <cstddef>
#include <vector>

#include "adelie/exact.hpp"

namespace adelie {

// All integer vectors with coordinates in [-radius, radius], in odometer
// order. When there are more than cap of them, every k-th one is kept with
// k = ceil(total / cap), so the sample is deterministic.
std::vector<IntVector> coordinate_ball(std::size_t rank, Int radius, std::size_t cap);

}  // namespace adelie

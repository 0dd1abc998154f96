#include "adelie/sampling.hpp"

namespace adelie {

std::vector<IntVector> coordinate_ball(std::size_t rank, Int radius, std::size_t cap) {
  const auto side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t total = 1;
  bool huge = false;
  for (std::size_t i = 0; i < rank; ++i) {
    if (total > (SIZE_MAX / side)) huge = true;
    total = huge ? SIZE_MAX : total * side;
  }
  const std::size_t stride = (cap == 0 || total <= cap) ? 1 : (total + cap - 1) / cap;
  std::vector<IntVector> out;
  for (std::size_t n = 0; n < total; n += stride) {
    IntVector v(rank);
    std::size_t k = n;
    for (std::size_t i = 0; i < rank; ++i) {
      v[i] = static_cast<Int>(k % side) - radius;
      k /= side;
    }
    out.push_back(std::move(v));
    if (cap != 0 && out.size() >= cap) break;
  }
  return out;
}

}  // namespace adelie

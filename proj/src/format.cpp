#include "adelie/format.hpp"

namespace adelie {

std::string format_vector(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace adelie

namespace adelie {

std::string format_combination(const IntVector& v, const std::string& prefix) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Int c = v[i];
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag);
    s += prefix + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace adelie

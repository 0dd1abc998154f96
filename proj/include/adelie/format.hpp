#pragma once

#include <string>

#include "adelie/exact.hpp"

namespace adelie {

// "[1,0,-1]"
std::string format_vector(const IntVector& v);

// Simple-root combination with 1-based labels: [1,2,0] -> "a1+2a2",
// [0,-1] -> "-a2", zero -> "0". The prefix replaces "a" (e.g. "C").
std::string format_combination(const IntVector& v, const std::string& prefix = "a");

}  // namespace adelie

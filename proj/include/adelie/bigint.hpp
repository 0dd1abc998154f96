#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace adelie {

// Weyl-dimension products for E8 exceed 10^100 before the final division.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace adelie

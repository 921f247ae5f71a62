#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xcr {

// Crossing counts and cluster sizes. Weighted counts grow with the square of
// the cluster sizes, so everything that may carry a weight is arbitrary
// precision.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

Count parse_count(const std::string& text);

/// n choose 2 for n >= 0.
inline Count choose2(const Count& n) {
  if (n < 2) return 0;
  return n * (n - 1) / 2;
}

/// Z(m) = floor(m/2) * floor((m-1)/2): forced crossings between two stars of
/// degree m that share their leaves and their rotation.
inline std::int64_t zee(std::int64_t m) {
  if (m < 2) return 0;
  return (m / 2) * ((m - 1) / 2);
}

}  // namespace xcr

#pragma once

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratkey/error.hpp"

namespace ratkey {

/// Keys grow roughly exponentially with tree depth, so all key arithmetic
/// runs on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

/// Checked narrowing; throws errc::overflow instead of wrapping.
inline std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v))
    throw tree_error(errc::overflow, "value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

/// Number of significant bits; 0 for zero.
inline std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

}  // namespace ratkey

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace partequiv {

/// Arbitrary-precision signed integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Integer power with exact arithmetic.
inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// n^e as an unsigned 64-bit value; throws std::overflow_error when it does not fit.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

}  // namespace partequiv

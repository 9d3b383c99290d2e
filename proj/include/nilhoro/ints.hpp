#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace nilhoro {

// All group exponents are arbitrary-precision: central coordinates grow
// quadratically along paths, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline int sign_int(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

/// floor(sqrt(t)), exact; t must be nonnegative.
inline Int isqrt(const Int& t) {
  if (t < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(t);
}

/// ceil(a/b) for a >= 0, b > 0, exact.
inline Int ceil_div(const Int& a, const Int& b) {
  if (a < 0 || b <= 0) throw std::domain_error("ceil_div: need a >= 0, b > 0");
  return (a + b - 1) / b;
}

inline std::size_t hash_int(const Int& v) { return std::hash<Int>{}(v); }

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::string int_str(const Int& v) { return v.str(); }

}  // namespace nilhoro

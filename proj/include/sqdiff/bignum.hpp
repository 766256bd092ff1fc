#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "sqdiff/errors.hpp"

namespace sqdiff {

// Expression templates off so `auto` and member calls on temporaries behave.
using BigNat = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline BigNat isqrt(const BigNat& v) {
  if (v <= 0) return 0;
  return boost::multiprecision::sqrt(v);
}

// Smallest s >= 0 with s*s >= v.
inline BigNat ceil_sqrt(const BigNat& v) {
  if (v <= 0) return 0;
  BigNat s = isqrt(v);
  if (s * s < v) ++s;
  return s;
}

inline std::uint64_t isqrt(std::uint64_t v) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

inline bool fits_u64(const BigNat& v) {
  return v >= 0 && v <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const BigNat& v) {
  if (!fits_u64(v)) throw CapacityError("integer does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

// Decimal natural number, no sign, no leading zeros (except "0").
inline BigNat parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  if (text.size() > 1 && text.front() == '0')
    throw ParseError("leading zero in integer '" + std::string(text) + "'");
  for (char ch : text)
    if (ch < '0' || ch > '9')
      throw ParseError("not a decimal natural: '" + std::string(text) + "'");
  return BigNat(std::string(text));
}

inline std::string to_string(const BigNat& v) { return v.str(); }

}  // namespace sqdiff

#pragma once

#include <cstdint>
#include <vector>

#include "sqdiff/bignum.hpp"
#include "sqdiff/errors.hpp"

namespace sqdiff {

/// (x, y, z) with x - y = z^2.
template <class Int>
struct BasicTriple {
  Int x{};
  Int y{};
  Int z{};

  friend auto operator<=>(const BasicTriple&, const BasicTriple&) = default;
  friend bool operator==(const BasicTriple&, const BasicTriple&) = default;
};

using SolutionTriple = BasicTriple<std::uint64_t>;
using BigTriple = BasicTriple<BigNat>;

/// Triples above this count are refused by enumerate_solutions.
inline constexpr std::uint64_t kMaxEnumeratedTriples = std::uint64_t{1} << 26;

/// True iff x - y = z^2 with x, y, z all in [1, n]. Never throws.
inline bool is_solution(const BigNat& x, const BigNat& y, const BigNat& z, const BigNat& n) {
  if (x < 1 || y < 1 || z < 1) return false;
  if (x > n || y > n || z > n) return false;
  return x - y == z * z;
}

inline bool is_solution(std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t n) {
  if (x < 1 || y < 1 || z < 1 || x > n || y > n || z > n) return false;
  if (x <= y) return false;
  return static_cast<unsigned __int128>(z) * z == x - y;
}

/// Exact count sum_{z : z^2 <= n-1} (n - z^2) of triples in [1, n].
inline BigNat solution_count(const BigNat& n) {
  BigNat total = 0;
  if (n < 2) return total;
  for (BigNat z = 1; z * z <= n - 1; ++z) total += n - z * z;
  return total;
}

/// Calls fn(x, y, z) for every solution in [1, n], in lexicographic order.
template <class Fn>
void for_each_solution(std::uint64_t n, Fn&& fn) {
  for (std::uint64_t x = 2; x <= n; ++x) {
    // z descending gives y ascending.
    for (std::uint64_t z = isqrt(x - 1); z >= 1; --z) fn(x, x - z * z, z);
  }
}

inline std::vector<SolutionTriple> enumerate_solutions(std::uint64_t n) {
  if (n > (std::uint64_t{1} << 32) || solution_count(n) > kMaxEnumeratedTriples)
    throw CapacityError("too many solution triples to enumerate for n = " + std::to_string(n));
  std::vector<SolutionTriple> out;
  out.reserve(static_cast<std::size_t>(solution_count(n)));
  for_each_solution(n, [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    out.push_back({x, y, z});
  });
  return out;
}

}  // namespace sqdiff

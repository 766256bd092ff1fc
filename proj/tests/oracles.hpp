#pragma once

// Brute-force reference computations used only by tests. They share no code
// paths with the library beyond the plain data types.

#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

inline bool is_square(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

// All (x, y, z) in [1, n]^3 with x - y = z^2, by a cubic loop.
inline std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> triples(std::uint64_t n) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t x = 1; x <= n; ++x)
    for (std::uint64_t y = 1; y <= n; ++y)
      for (std::uint64_t z = 1; z <= n; ++z)
        if (x > y && x - y == z * z) out.emplace_back(x, y, z);
  return out;
}

// Lexicographically least monochromatic triple, O(n^2).
inline std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> least_mono(
    const std::vector<std::uint32_t>& col) {
  const std::uint64_t n = col.size();
  for (std::uint64_t x = 1; x <= n; ++x)
    for (std::uint64_t y = 1; y < x; ++y) {
      const auto d = x - y;
      if (!is_square(d)) continue;
      std::uint64_t z = 0;
      while (z * z < d) ++z;
      if (z <= n && col[x - 1] == col[y - 1] && col[y - 1] == col[z - 1]) return std::tuple{x, y, z};
    }
  return std::nullopt;
}

// k-colourability of [1, n] by trying all k^n colourings.
inline bool colourable_by_enumeration(std::uint32_t k, std::uint64_t n) {
  std::vector<std::uint32_t> col(n, 0);
  while (true) {
    if (!least_mono(col)) return true;
    std::size_t i = 0;
    while (i < n && ++col[i] == k) col[i++] = 0;
    if (i == n) return false;
  }
}

// Largest square-difference-free subset of [1, n], over all 2^n subsets.
inline std::uint64_t extremal_by_enumeration(std::uint64_t n) {
  std::uint64_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    for (std::uint64_t a = 0; a < n && ok; ++a)
      for (std::uint64_t b = a + 1; b < n && ok; ++b)
        if ((m >> a & 1) && (m >> b & 1) && is_square(b - a)) ok = false;
    if (ok) best = std::max<std::uint64_t>(best, __builtin_popcountll(m));
  }
  return best;
}

inline std::vector<std::uint32_t> random_colouring(std::mt19937_64& rng, std::size_t n, std::uint32_t k) {
  std::uniform_int_distribution<std::uint32_t> d(0, k - 1);
  std::vector<std::uint32_t> c(n);
  for (auto& v : c) v = d(rng);
  return c;
}

// Random colouring built from a few long blocks; often clean for small n.
inline std::vector<std::uint32_t> random_block_colouring(std::mt19937_64& rng, std::size_t n, std::uint32_t k) {
  std::vector<std::uint32_t> c;
  std::uniform_int_distribution<std::uint32_t> colour(0, k - 1);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, n / 3));
  while (c.size() < n) {
    const auto l = std::min(len(rng), n - c.size());
    c.insert(c.end(), l, colour(rng));
  }
  return c;
}

}  // namespace oracle

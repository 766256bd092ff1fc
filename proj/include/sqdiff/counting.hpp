#pragma once

#include <cstdint>
#include <vector>

#include "sqdiff/colouring.hpp"
#include "sqdiff/integer_set.hpp"
#include "sqdiff/solutions.hpp"

namespace sqdiff {

struct ClassCounts {
  std::vector<std::uint64_t> per_class;  // monochromatic triples of each colour
  std::uint64_t cross_class = 0;         // triples using two or three colours
  std::uint64_t total = 0;
};

inline ClassCounts count_per_class(const Colouring& c) {
  const auto colours = c.to_explicit();
  const std::uint64_t n = colours.size();
  if (solution_count(n) > (std::uint64_t{1} << 40))
    throw CapacityError("too many triples to count for n = " + std::to_string(n));
  ClassCounts out;
  out.per_class.assign(c.k(), 0);
  for_each_solution(n, [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    const Colour cx = colours[x - 1];
    if (colours[y - 1] == cx && colours[z - 1] == cx)
      ++out.per_class[cx];
    else
      ++out.cross_class;
    ++out.total;
  });
  return out;
}

namespace detail {

// Number of a in A with a - s also in A.
inline std::uint64_t pairs_at_difference(const IntegerSet& a, const SetIndex& idx, std::int64_t s) {
  std::uint64_t hits = 0;
  for (auto v : a) hits += idx.contains(v - s);
  return hits;
}

inline std::int64_t span(const IntegerSet& a) { return a.empty() ? 0 : a.back() - a.front(); }

}  // namespace detail

/// #{x in {r, 2r, ..., Lr} : x^2 in A - A}.
inline std::uint64_t sqdiff_count(const IntegerSet& a, std::uint64_t r, std::uint64_t L) {
  if (r < 1) throw DomainError("sqdiff_count needs r >= 1");
  const SetIndex idx(a);
  const auto reach = static_cast<std::uint64_t>(detail::span(a));
  std::uint64_t count = 0;
  for (std::uint64_t t = 1; t <= L; ++t) {
    const auto x = static_cast<unsigned __int128>(r) * t;
    if (x * x > reach) break;
    const auto s = static_cast<std::int64_t>(x * x);
    for (auto v : a)
      if (idx.contains(v - s)) {
        ++count;
        break;
      }
  }
  return count;
}

/// #{(x, y, z) : x, y in A, z in {r, ..., Zr}, x - y = z^2}.
inline std::uint64_t trilinear_count(const IntegerSet& a, std::uint64_t r, std::uint64_t Z) {
  if (r < 1) throw DomainError("trilinear_count needs r >= 1");
  const SetIndex idx(a);
  const auto reach = static_cast<std::uint64_t>(detail::span(a));
  std::uint64_t count = 0;
  for (std::uint64_t t = 1; t <= Z; ++t) {
    const auto z = static_cast<unsigned __int128>(r) * t;
    if (z * z > reach) break;
    count += detail::pairs_at_difference(a, idx, static_cast<std::int64_t>(z * z));
  }
  return count;
}

}  // namespace sqdiff

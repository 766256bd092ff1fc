#pragma once

#include <cassert>
#include <optional>
#include <tuple>
#include <vector>

#include "sqdiff/colouring.hpp"
#include "sqdiff/solutions.hpp"

namespace sqdiff {

struct Violation {
  BigTriple triple;
  Colour colour = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of verify_colouring: clean iff no witness.
struct Verdict {
  std::optional<Violation> witness;

  bool clean() const { return !witness.has_value(); }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Brute force over all triples; O(n^1.5).
inline Verdict verify_explicit(const std::vector<Colour>& colours) {
  const std::uint64_t n = colours.size();
  for (std::uint64_t x = 2; x <= n; ++x) {
    const Colour cx = colours[x - 1];
    for (std::uint64_t z = isqrt(x - 1); z >= 1; --z) {
      const std::uint64_t y = x - z * z;
      if (colours[y - 1] == cx && colours[z - 1] == cx)
        return Verdict{Violation{BigTriple{x, y, z}, cx}};
    }
  }
  return {};
}

namespace detail {

struct Block {
  BigNat lo, hi;
};

// Smallest class element >= v, if any.
inline std::optional<BigNat> first_at_least(const std::vector<Block>& cls, const BigNat& v) {
  std::size_t lo = 0, hi = cls.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cls[mid].hi < v) lo = mid + 1; else hi = mid;
  }
  if (lo == cls.size()) return std::nullopt;
  return cls[lo].lo > v ? cls[lo].lo : v;
}

// Largest class element <= v, if any.
inline std::optional<BigNat> last_at_most(const std::vector<Block>& cls, const BigNat& v) {
  std::size_t lo = 0, hi = cls.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cls[mid].lo <= v) lo = mid + 1; else hi = mid;
  }
  if (lo == 0) return std::nullopt;
  const auto& b = cls[lo - 1];
  return b.hi < v ? b.hi : v;
}

}  // namespace detail

/// Run-based check that never enumerates [1, n].
///
/// For each class and each ordered pair of its runs X = [a, b], Y = [c, d]
/// the achievable differences x - y form [max(1, a - d), b - c]; a solution
/// exists iff some class element z has z^2 in that interval. The least x is
/// reached by the least admissible z, and for that x the least y by the
/// largest admissible z. Cost is O(m^2 log m) per class of m runs.
inline Verdict verify_runs(const Colouring& c) {
  const auto runs = c.to_runs();
  std::vector<std::vector<detail::Block>> classes(c.k());
  for (const auto& r : runs) {
    auto& cls = classes[r.colour];
    if (!cls.empty() && cls.back().hi + 1 == r.lo)
      cls.back().hi = r.hi;
    else
      cls.push_back({r.lo, r.hi});
  }

  std::optional<Violation> best;
  for (Colour colour = 0; colour < classes.size(); ++colour) {
    const auto& cls = classes[colour];
    for (const auto& X : cls) {
      if (best && X.lo > best->triple.x) break;
      for (const auto& Y : cls) {
        if (Y.lo >= X.hi) break;  // no positive difference
        BigNat diff_lo = X.lo - Y.hi;
        if (diff_lo < 1) diff_lo = 1;
        const BigNat& diff_hi = X.hi - Y.lo;
        const BigNat z_from = ceil_sqrt(diff_lo);
        const BigNat z_to = isqrt(diff_hi);
        if (z_from > z_to) continue;
        auto z_min = detail::first_at_least(cls, z_from);
        if (!z_min || *z_min > z_to) continue;
        BigNat x = Y.lo + *z_min * *z_min;
        if (x < X.lo) x = X.lo;
        BigNat cap = isqrt(x - Y.lo);
        if (cap > z_to) cap = z_to;
        auto z = detail::last_at_most(cls, cap);
        assert(z && *z >= *z_min);
        BigNat y = x - *z * *z;
        assert(y >= Y.lo && y <= Y.hi && x <= X.hi);
        if (!best || std::tie(x, y) < std::tie(best->triple.x, best->triple.y))
          best = Violation{BigTriple{x, std::move(y), *z}, colour};
      }
    }
  }
  return Verdict{std::move(best)};
}

/// Clean verdict, or the lexicographically least monochromatic triple.
inline Verdict verify_colouring(const Colouring& c) {
  if (c.is_explicit()) return verify_explicit(c.colours());
  return verify_runs(c);
}

}  // namespace sqdiff

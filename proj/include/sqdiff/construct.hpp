#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "sqdiff/colouring.hpp"

namespace sqdiff {

/// Largest exponent 2^(k-1) (in bits of n) that construct_lower_bound accepts.
inline constexpr std::uint64_t kMaxConstructBits = std::uint64_t{1} << 20;

/// 2^(2^e) as an arbitrary-precision integer.
inline BigNat tower2(unsigned e) {
  BigNat one = 1;
  return one << (std::size_t{1} << e);
}

/// The doubly exponential colouring of [1, 2^(2^(k-1))]: {1} gets colour 0
/// and {2^(2^i), ..., 2^(2^(i+1))} gets colour i + 1 for 0 <= i <= k - 2.
/// Consecutive blocks share an endpoint; it stays with the lower colour.
inline Colouring construct_lower_bound(unsigned k) {
  if (k < 2) throw DomainError("construct_lower_bound needs k >= 2");
  if (k - 1 >= 63 || (std::uint64_t{1} << (k - 1)) > kMaxConstructBits)
    throw CapacityError("2^(2^" + std::to_string(k - 1) + ") exceeds the precision budget");
  std::vector<Run> runs;
  runs.push_back(Run{1, 1, 0});
  for (unsigned i = 0; i + 2 <= k; ++i) {
    BigNat lo = tower2(i);
    if (i > 0) lo += 1;
    runs.push_back(Run{std::move(lo), tower2(i + 1), static_cast<Colour>(i + 1)});
  }
  BigNat n = runs.back().hi;
  return Colouring::run_form(std::move(n), k, std::move(runs));
}

/// A closed interval [lo, hi] used to describe cover classes.
struct Interval {
  BigNat lo, hi;
};

/// Thrown when the cover misses a point; `witness` is the least such point.
class CoverageError : public DomainError {
 public:
  explicit CoverageError(BigNat witness)
      : DomainError("point " + witness.str() + " is not covered by any class"),
        witness_(std::move(witness)) {}
  const BigNat& witness() const { return witness_; }

 private:
  BigNat witness_;
};

/// Assigns each point of [1, n] the lowest-indexed class containing it.
/// Classes are given as interval lists; points outside [1, n] are ignored.
inline Colouring cover_to_partition(const BigNat& n, const std::vector<std::vector<Interval>>& classes) {
  if (classes.empty()) throw DomainError("cover has no classes");
  std::set<BigNat> cuts{BigNat(1), n + 1};
  for (const auto& cls : classes)
    for (const auto& iv : cls) {
      if (iv.hi < iv.lo) continue;
      if (iv.lo >= 1 && iv.lo <= n) cuts.insert(iv.lo);
      if (iv.hi + 1 >= 1 && iv.hi + 1 <= n) cuts.insert(iv.hi + 1);
    }
  auto covers = [](const std::vector<Interval>& cls, const BigNat& p) {
    return std::any_of(cls.begin(), cls.end(),
                       [&](const Interval& iv) { return iv.lo <= p && p <= iv.hi; });
  };
  std::vector<Run> runs;
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    const BigNat& lo = *it;
    BigNat hi = *std::next(it) - 1;
    std::size_t owner = classes.size();
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (covers(classes[c], lo)) { owner = c; break; }
    if (owner == classes.size()) throw CoverageError(lo);
    const auto colour = static_cast<Colour>(owner);
    if (!runs.empty() && runs.back().colour == colour)
      runs.back().hi = hi;
    else
      runs.push_back(Run{lo, std::move(hi), colour});
  }
  return Colouring::run_form(n, classes.size(), std::move(runs));
}

/// Integer-set variant: each class is a set of points.
inline Colouring cover_to_partition(std::uint64_t n, const std::vector<std::vector<std::uint64_t>>& classes) {
  std::vector<std::vector<Interval>> as_intervals;
  for (auto cls : classes) {
    std::sort(cls.begin(), cls.end());
    std::vector<Interval> ivs;
    for (auto p : cls) {
      if (!ivs.empty() && (ivs.back().hi == p || ivs.back().hi + 1 == p))
        ivs.back().hi = p;
      else
        ivs.push_back({p, p});
    }
    as_intervals.push_back(std::move(ivs));
  }
  return cover_to_partition(BigNat(n), as_intervals);
}

}  // namespace sqdiff

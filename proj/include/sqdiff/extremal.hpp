#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sqdiff/bignum.hpp"
#include "sqdiff/budget.hpp"
#include "sqdiff/integer_set.hpp"

namespace sqdiff {

/// Largest n handled by the 64-bit set representation.
inline constexpr std::uint64_t kExtremalExactLimit = 64;

struct ExtremalResult {
  std::uint64_t size = 0;
  IntegerSet witness;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

/// True iff no two distinct elements differ by a positive square.
inline bool is_square_difference_free(const IntegerSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto d = static_cast<std::uint64_t>(s[j] - s[i]);
      const auto r = isqrt(d);
      if (r * r == d) return false;
    }
  return true;
}

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(std::uint64_t v) { return Mask{1} << (v - 1); }

// adj[v] for v in [1, n]: points at a square distance from v.
inline std::vector<Mask> square_graph(std::uint64_t n) {
  std::vector<Mask> adj(n + 1, 0);
  for (std::uint64_t v = 1; v <= n; ++v)
    for (std::uint64_t z = 1; z * z < n; ++z) {
      if (v + z * z <= n) adj[v] |= bit(v + z * z);
      if (v > z * z) adj[v] |= bit(v - z * z);
    }
  return adj;
}

inline IntegerSet mask_to_set(Mask m) {
  IntegerSet out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Consecutive points differ by 1, so a run of m consecutive candidates
// holds at most ceil(m / 2) chosen points.
inline int path_bound(Mask cand) {
  int bound = 0;
  while (cand) {
    const int len = std::countr_one(cand >> std::countr_zero(cand));
    bound += (len + 1) / 2;
    cand &= cand + (cand & (~cand + 1));  // clear the lowest run
  }
  return bound;
}

class BranchAndBound {
 public:
  BranchAndBound(std::uint64_t n, BudgetMeter& meter) : adj_(square_graph(n)), meter_(meter) {}

  void run(Mask cand) { rec(cand, 0, 0); }
  bool aborted() const { return aborted_; }
  Mask best() const { return best_mask_; }
  int best_size() const { return best_size_; }

 private:
  void rec(Mask cand, Mask chosen, int size) {
    if (aborted_) return;
    if (!meter_.charge()) {
      aborted_ = true;
      return;
    }
    if (cand == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_mask_ = chosen;
      }
      return;
    }
    if (size + path_bound(cand) <= best_size_) return;
    const auto v = static_cast<std::uint64_t>(std::countr_zero(cand)) + 1;
    rec(cand & ~adj_[v] & ~bit(v), chosen | bit(v), size + 1);
    rec(cand & ~bit(v), chosen, size);
  }

  std::vector<Mask> adj_;
  BudgetMeter& meter_;
  Mask best_mask_ = 0;
  int best_size_ = -1;
  bool aborted_ = false;
};

}  // namespace detail

/// Largest B in [1, n] with no two distinct elements a square apart.
/// Branch and bound, include-first, so the first leaf is the greedy set.
inline ExtremalResult fs_extremal(std::uint64_t n, const Budget& budget = {}) {
  if (n > kExtremalExactLimit)
    throw CapacityError("fs_extremal supports n <= " + std::to_string(kExtremalExactLimit));
  ExtremalResult out;
  if (n == 0) {
    out.optimal = true;
    return out;
  }
  BudgetMeter meter(budget);
  if (meter.exhausted_up_front()) return out;
  detail::BranchAndBound bb(n, meter);
  const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;
  bb.run(all);
  out.nodes = meter.nodes();
  out.optimal = !bb.aborted();
  if (bb.best_size() >= 0) {
    out.size = static_cast<std::uint64_t>(bb.best_size());
    out.witness = detail::mask_to_set(bb.best());
  }
  return out;
}

/// Independent exact route: the low points [1, h] are tabulated by a
/// subset DP, best[m] = largest admissible subset of m; the high points are
/// enumerated as admissible sets S and matched with best[low \ N(S)].
inline ExtremalResult fs_extremal_split(std::uint64_t n, unsigned max_table_bits = 24) {
  if (n > kExtremalExactLimit)
    throw CapacityError("fs_extremal_split supports n <= " + std::to_string(kExtremalExactLimit));
  using detail::Mask;
  const auto adj = detail::square_graph(n);
  const unsigned h = static_cast<unsigned>(std::min<std::uint64_t>(n / 2, max_table_bits));
  const Mask low_all = (Mask{1} << h) - 1;

  std::vector<std::uint8_t> best(std::size_t{1} << h, 0);
  for (Mask m = 1; m <= low_all; ++m) {
    const auto v = static_cast<std::uint64_t>(std::countr_zero(m)) + 1;
    const Mask rest = m & (m - 1);
    const Mask with = rest & ~adj[v] & low_all;
    best[m] = std::max<std::uint8_t>(best[rest], static_cast<std::uint8_t>(1 + best[with]));
  }

  ExtremalResult out;
  Mask best_high = 0;
  int best_total = -1;
  std::uint64_t visited = 0;
  // Every node of this recursion is a distinct admissible subset of [h+1, n].
  auto walk = [&](auto&& self, std::uint64_t from, Mask chosen, Mask blocked, int size) -> void {
    ++visited;
    const int total = size + best[low_all & ~blocked];
    if (total > best_total) {
      best_total = total;
      best_high = chosen;
    }
    for (std::uint64_t v = from; v <= n; ++v)
      if (!(blocked & detail::bit(v)))
        self(self, v + 1, chosen | detail::bit(v), blocked | adj[v] | detail::bit(v), size + 1);
  };
  walk(walk, h + 1, 0, 0, 0);

  Mask low = 0;
  Mask avail = low_all;
  for (const auto v : detail::mask_to_set(best_high)) avail &= ~adj[static_cast<std::uint64_t>(v)];
  // Trace the DP back to a concrete low set.
  while (avail) {
    const auto v = static_cast<std::uint64_t>(std::countr_zero(avail)) + 1;
    const Mask rest = avail & (avail - 1);
    if (best[avail] == best[rest]) {
      avail = rest;
    } else {
      low |= detail::bit(v);
      avail = rest & ~adj[v];
    }
  }
  out.size = static_cast<std::uint64_t>(best_total);
  out.witness = detail::mask_to_set(low | best_high);
  out.optimal = true;
  out.nodes = visited;
  return out;
}

}  // namespace sqdiff

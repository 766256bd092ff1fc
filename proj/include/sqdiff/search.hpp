#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqdiff/budget.hpp"
#include "sqdiff/colouring.hpp"
#include "sqdiff/construct.hpp"
#include "sqdiff/verify.hpp"

namespace sqdiff {

enum class SearchStatus { Colourable, NotColourable, Unknown };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Colourable: return "colourable";
    case SearchStatus::NotColourable: return "not-colourable";
    case SearchStatus::Unknown: return "unknown";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Colouring> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

struct SearchOptions {
  /// Point 1 gets colour 0 and colour c + 1 only after colour c is used.
  bool symmetry_breaking = true;
};

namespace detail {

// Depth-first colouring of 1, 2, ..., n with forward checking: forbid[w][c]
// counts the triples (w, y, z) whose y and z are already coloured c, so the
// forbidden colours of the next point are known without rescanning, and a
// future point with every colour forbidden prunes immediately.
class Backtracker {
 public:
  Backtracker(std::uint64_t n, std::size_t k, const SearchOptions& opts, BudgetMeter& meter)
      : n_(n), k_(k), opts_(opts), meter_(meter),
        colour_(n + 1, kNone), forbid_((n + 1) * k, 0), blocked_(n + 1, 0) {}

  // true: found; false with aborted(): budget; false otherwise: refuted.
  bool run() { return dfs(1, 0); }
  bool aborted() const { return aborted_; }

  std::vector<Colour> colours() const {
    return {colour_.begin() + 1, colour_.end()};
  }

 private:
  static constexpr Colour kNone = ~Colour{0};

  bool dfs(std::uint64_t x, std::size_t used) {
    if (x > n_) return true;
    std::size_t limit = k_;
    if (opts_.symmetry_breaking) limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbid_[x * k_ + c]) continue;
      if (!meter_.charge()) {
        aborted_ = true;
        return false;
      }
      const bool ok = assign(x, static_cast<Colour>(c), +1);
      if (ok && dfs(x + 1, std::max(used, c + 1))) return true;
      assign(x, static_cast<Colour>(c), -1);
      colour_[x] = kNone;
      if (aborted_) return false;
    }
    return false;
  }

  // Adds (sign = +1) or removes (sign = -1) the constraints that colouring
  // p with c places on later points. Returns false if some later point has
  // lost every colour.
  bool assign(std::uint64_t p, Colour c, int sign) {
    colour_[p] = c;
    bool ok = true;
    auto touch = [&](std::uint64_t w) {
      auto& cell = forbid_[w * k_ + c];
      if (sign > 0) {
        if (cell++ == 0 && ++blocked_[w] == k_) ok = false;
      } else {
        if (--cell == 0) --blocked_[w];
      }
    };
    // p plays y: w = p + z^2 with z <= p coloured c.
    for (std::uint64_t z = 1; z <= p && p + z * z <= n_; ++z)
      if (colour_[z] == c) touch(p + z * z);
    // p plays z: w = y + p^2 with y < p coloured c.
    if (p * p < n_)
      for (std::uint64_t y = 1; y < p && y + p * p <= n_; ++y)
        if (colour_[y] == c) touch(y + p * p);
    return ok;
  }

  std::uint64_t n_;
  std::size_t k_;
  SearchOptions opts_;
  BudgetMeter& meter_;
  std::vector<Colour> colour_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::size_t> blocked_;
  bool aborted_ = false;
};

}  // namespace detail

/// Decides whether [1, n] admits a k-colouring with no monochromatic
/// x - y = z^2. The witness is the first colouring in increasing colour
/// order, so results are deterministic under node budgets.
inline SearchOutcome feasible(std::size_t k, std::uint64_t n, const Budget& budget = {},
                              const SearchOptions& opts = {}) {
  if (k < 1) throw DomainError("feasible needs k >= 1");
  if (n > kDefaultExplicitLimit) throw CapacityError("n beyond explicit range");
  BudgetMeter meter(budget);
  SearchOutcome out;
  if (meter.exhausted_up_front()) return out;
  detail::Backtracker bt(n, k, opts, meter);
  const bool found = bt.run();
  out.nodes_explored = meter.nodes();
  out.elapsed = meter.elapsed();
  if (found) {
    out.status = SearchStatus::Colourable;
    out.witness = Colouring::explicit_form(k, bt.colours());
  } else {
    out.status = bt.aborted() ? SearchStatus::Unknown : SearchStatus::NotColourable;
  }
  return out;
}

struct SProbe {
  std::uint64_t n = 0;
  SearchStatus status = SearchStatus::Unknown;
  std::uint64_t nodes = 0;
};

/// S(k) if certified exactly, otherwise the best certified lower bound.
struct SValue {
  std::uint64_t value = 0;
  bool exact = false;
  std::vector<SProbe> probes;
  std::optional<Colouring> witness;
};

/// Ascends n from the construction's 2^(2^(k-1)) (or 1 for k = 1) until a
/// probe refutes, sharing one budget across all probes.
inline SValue compute_S(std::size_t k, const Budget& budget = {}, const SearchOptions& opts = {}) {
  if (k < 1) throw DomainError("compute_S needs k >= 1");
  SValue out;
  std::uint64_t n = 1;
  if (k >= 2 && k - 1 < 6) {
    const std::uint64_t start = std::uint64_t{1} << (std::uint64_t{1} << (k - 1));
    if (start <= kDefaultExplicitLimit) {
      n = start;
      out.value = start;  // certified by construct_lower_bound(k)
      out.witness = construct_lower_bound(static_cast<unsigned>(k));
    }
  }
  BudgetMeter meter(budget);
  for (;; ++n) {
    auto res = feasible(k, n, meter.remaining(), opts);
    meter.add(res.nodes_explored);
    out.probes.push_back({n, res.status, res.nodes_explored});
    if (res.status == SearchStatus::Colourable) {
      out.value = n;
      out.witness = std::move(res.witness);
      continue;
    }
    out.exact = res.status == SearchStatus::NotColourable && out.value + 1 == n;
    return out;
  }
}

}  // namespace sqdiff

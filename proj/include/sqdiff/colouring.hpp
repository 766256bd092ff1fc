#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sqdiff/bignum.hpp"
#include "sqdiff/errors.hpp"

namespace sqdiff {

using Colour = std::uint32_t;

/// Largest n accepted for the explicit (one entry per point) representation.
inline constexpr std::uint64_t kDefaultExplicitLimit = std::uint64_t{1} << 28;

/// A maximal block [lo, hi] of consecutive points sharing one colour.
struct Run {
  BigNat lo;
  BigNat hi;
  Colour colour = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// colours[i] is the colour of point i + 1.
struct ExplicitAssignment {
  std::vector<Colour> colours;

  friend bool operator==(const ExplicitAssignment&, const ExplicitAssignment&) = default;
};

struct IntervalRuns {
  std::vector<Run> runs;

  friend bool operator==(const IntervalRuns&, const IntervalRuns&) = default;
};

/// A partition of [1, n] into k colour classes.
///
/// The body is either an explicit colour per point or a sorted list of
/// runs. Run endpoints are arbitrary precision so colourings of intervals
/// such as [1, 2^(2^20)] stay representable.
class Colouring {
 public:
  using Body = std::variant<ExplicitAssignment, IntervalRuns>;

  Colouring(BigNat n, std::size_t k, Body body)
      : n_(std::move(n)), k_(k), body_(std::move(body)) {
    validate();
  }

  static Colouring explicit_form(std::size_t k, std::vector<Colour> colours) {
    BigNat n = colours.size();
    return Colouring(std::move(n), k, ExplicitAssignment{std::move(colours)});
  }

  static Colouring run_form(BigNat n, std::size_t k, std::vector<Run> runs) {
    return Colouring(std::move(n), k, IntervalRuns{std::move(runs)});
  }

  const BigNat& n() const { return n_; }
  std::size_t k() const { return k_; }
  const Body& body() const { return body_; }

  bool is_explicit() const { return std::holds_alternative<ExplicitAssignment>(body_); }
  bool is_runs() const { return std::holds_alternative<IntervalRuns>(body_); }

  const std::vector<Colour>& colours() const {
    return std::get<ExplicitAssignment>(body_).colours;
  }
  const std::vector<Run>& runs() const { return std::get<IntervalRuns>(body_).runs; }

  /// Run-form view; explicit colourings are compressed into maximal runs.
  std::vector<Run> to_runs() const {
    if (is_runs()) return runs();
    std::vector<Run> out;
    const auto& cs = colours();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!out.empty() && out.back().colour == cs[i]) {
        out.back().hi = i + 1;
      } else {
        out.push_back(Run{BigNat(i + 1), BigNat(i + 1), cs[i]});
      }
    }
    return out;
  }

  /// Explicit view; refuses n above `limit`.
  std::vector<Colour> to_explicit(std::uint64_t limit = kDefaultExplicitLimit) const {
    if (is_explicit()) return colours();
    if (n_ > limit)
      throw CapacityError("n = " + n_.str() + " exceeds the explicit limit " +
                          std::to_string(limit));
    std::vector<Colour> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const auto& r : runs()) {
      const auto lo = static_cast<std::uint64_t>(r.lo);
      const auto hi = static_cast<std::uint64_t>(r.hi);
      out.insert(out.end(), hi - lo + 1, r.colour);
    }
    return out;
  }

  Colouring as_runs() const { return Colouring(n_, k_, IntervalRuns{to_runs()}); }
  Colouring as_explicit(std::uint64_t limit = kDefaultExplicitLimit) const {
    return Colouring(n_, k_, ExplicitAssignment{to_explicit(limit)});
  }

  /// Colour of point x in [1, n].
  Colour colour_of(const BigNat& x) const {
    if (x < 1 || x > n_) throw DomainError("point " + x.str() + " outside [1, n]");
    if (is_explicit()) return colours()[static_cast<std::size_t>(x) - 1];
    const auto& rs = runs();
    std::size_t lo = 0, hi = rs.size();
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (rs[mid].lo <= x) lo = mid; else hi = mid;
    }
    return rs[lo].colour;
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  void validate() const {
    if (k_ == 0) throw InvariantError("colouring needs at least one colour");
    if (n_ < 0) throw InvariantError("negative n");
    if (const auto* e = std::get_if<ExplicitAssignment>(&body_)) {
      if (n_ != e->colours.size())
        throw InvariantError("explicit colouring has " + std::to_string(e->colours.size()) +
                             " entries, expected " + n_.str());
      for (std::size_t i = 0; i < e->colours.size(); ++i)
        if (e->colours[i] >= k_)
          throw InvariantError("point " + std::to_string(i + 1) + " has colour " +
                               std::to_string(e->colours[i]) + " >= k");
      return;
    }
    const auto& rs = std::get<IntervalRuns>(body_).runs;
    if (n_ == 0) {
      if (!rs.empty()) throw InvariantError("runs given for empty interval");
      return;
    }
    BigNat next = 1;
    for (const auto& r : rs) {
      if (r.lo != next)
        throw InvariantError("run starting at " + r.lo.str() + " but expected " + next.str());
      if (r.hi < r.lo) throw InvariantError("run [" + r.lo.str() + ", " + r.hi.str() + "] is empty");
      if (r.colour >= k_) throw InvariantError("run colour " + std::to_string(r.colour) + " >= k");
      next = r.hi + 1;
    }
    if (next != n_ + 1)
      throw InvariantError("runs end at " + (next - 1).str() + " but n = " + n_.str());
  }

  BigNat n_;
  std::size_t k_;
  Body body_;
};

}  // namespace sqdiff

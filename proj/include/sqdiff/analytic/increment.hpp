#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sqdiff/counting.hpp"
#include "sqdiff/errors.hpp"
#include "sqdiff/integer_set.hpp"

namespace sqdiff::analytic {

/// Concrete stand-ins for the unspecified alpha^O(1) quantities.
struct IncrementParams {
  double threshold_exponent = 3.0;  // N' >= alpha^e N means "further integer too large"
  double increment_exponent = 3.0;  // required density gain alpha^e
  double length_exponent = 3.0;     // N'' = alpha^e N' / max(1, ln N')
  std::uint64_t min_length = 2;     // N'' is never taken below this
  double window_exponent = 6.0;     // iteration picks N'_i = alpha_i^e N_i
  std::uint64_t max_stages = 1000;  // hard cap for the density increment loop
};

struct FurtherTooLarge {
  double limit = 0;  // alpha^e N
};

struct ManySolutions {
  std::uint64_t count = 0;
  double threshold = 0;  // alpha^2 N sqrt(N') / 2
};

/// A in x0 + q^2 [len] has density new_density > alpha + alpha^e.
struct Increment {
  std::uint64_t q = 0;
  std::uint64_t length = 0;
  std::int64_t offset = 0;
  std::uint64_t count = 0;
  double new_density = 0;
};

/// None of the three branches could be certified at this size.
struct NoBranch {
  double best_density = 0;
  double target_density = 0;
};

using IncrementOutcome = std::variant<FurtherTooLarge, ManySolutions, Increment, NoBranch>;

inline const char* branch_name(const IncrementOutcome& o) {
  switch (o.index()) {
    case 0: return "further-too-large";
    case 1: return "many-solutions";
    case 2: return "increment";
    default: return "no-branch";
  }
}

inline std::uint64_t progression_length(double alpha, std::uint64_t n_prime, const IncrementParams& p) {
  const double log_n = std::max(1.0, std::log(static_cast<double>(n_prime)));
  const double raw = std::pow(alpha, p.length_exponent) * static_cast<double>(n_prime) / log_n;
  return std::max<std::uint64_t>(p.min_length, static_cast<std::uint64_t>(std::floor(raw)));
}

/// Best window x0 + q^2 [len] inside [1, N] for each q <= q_max, by strided
/// prefix sums. Ties keep the smaller q, then the smaller x0.
inline Increment best_progression(const IntegerSet& a, std::uint64_t n, std::uint64_t q_max,
                                  std::uint64_t len) {
  std::vector<std::uint8_t> in(n + 1, 0);
  for (auto x : a) in[static_cast<std::size_t>(x)] = 1;
  Increment best;
  std::vector<std::uint64_t> prefix(n + 1, 0);
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const std::uint64_t step = q * q;
    if (step * len > n + step - 1) break;  // no offset fits, nor for larger q
    // prefix[m] = in[m] + in[m - step] + ...
    for (std::uint64_t m = 1; m <= n; ++m) prefix[m] = in[m] + (m > step ? prefix[m - step] : 0);
    const auto lo = 1 - static_cast<std::int64_t>(step);
    const auto hi = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(step * len);
    for (std::int64_t x0 = lo; x0 <= hi; ++x0) {
      const auto end = static_cast<std::uint64_t>(x0 + static_cast<std::int64_t>(step * len));
      const std::uint64_t cnt = prefix[end] - (x0 >= 1 ? prefix[static_cast<std::uint64_t>(x0)] : 0);
      if (best.q == 0 || cnt > best.count) best = {q, len, x0, cnt, 0.0};
    }
  }
  if (best.q) best.new_density = static_cast<double>(best.count) / static_cast<double>(len);
  return best;
}

/// Trichotomy for A in [1, N] and a further integer N': N' too large
/// relative to alpha^e N, or many solutions of x - y = z^2 with z^2 <= N',
/// or a denser progression of common difference q^2, q <= q0, found by
/// direct search.
inline IncrementOutcome increment_search(const IntegerSet& a, std::uint64_t n, std::uint64_t n_prime,
                                         std::uint64_t q0, const IncrementParams& p = {}) {
  if (a.empty()) throw PreconditionError("increment_search needs a nonempty set");
  if (n_prime > n) throw PreconditionError("increment_search needs N' <= N");
  if (a.front() < 1 || static_cast<std::uint64_t>(a.back()) > n)
    throw PreconditionError("set must lie in [1, N]");
  const double alpha = static_cast<double>(a.size()) / static_cast<double>(n);
  const double limit = std::pow(alpha, p.threshold_exponent) * static_cast<double>(n);
  if (static_cast<double>(n_prime) >= limit) return FurtherTooLarge{limit};

  const std::uint64_t count = trilinear_count(a, 1, isqrt(n_prime));
  const double threshold = 0.5 * alpha * alpha * static_cast<double>(n) *
                           std::sqrt(static_cast<double>(n_prime));
  if (static_cast<double>(count) >= threshold) return ManySolutions{count, threshold};

  const double target = alpha + std::pow(alpha, p.increment_exponent);
  const auto len = progression_length(alpha, n_prime, p);
  const Increment best = best_progression(a, n, q0, len);
  if (best.q && best.new_density > target) return best;
  return NoBranch{best.new_density, target};
}

struct IncrementStage {
  std::uint64_t index = 0;
  std::uint64_t d = 1;         // window step is d^2
  std::uint64_t size = 0;      // N_i
  std::int64_t offset = 0;     // x_i
  std::uint64_t count = 0;     // |A in x_i + d^2 [N_i]|
  double alpha = 0;            // count / N_i
  std::uint64_t n_prime = 0;   // N'_i
  std::string outcome;         // branch name, or "degenerate"
};

struct DensityIncrementResult {
  std::uint64_t r = 1;
  std::uint64_t L = 0;
  std::uint64_t L_prime = 0;
  std::int64_t offset = 0;
  IntegerSet restricted;  // A' = A in offset + r^2 [L]
  std::vector<IncrementStage> trace;
  std::string terminal;
};

namespace detail {

inline std::uint64_t count_window(const SetIndex& idx, std::int64_t offset, std::uint64_t step,
                                  std::uint64_t len) {
  std::uint64_t c = 0;
  for (std::uint64_t t = 1; t <= len; ++t)
    c += idx.contains(offset + static_cast<std::int64_t>(step * t));
  return c;
}

}  // namespace detail

/// Iterates increment_search on the rescaled sets
/// S_i = {t in [N_i] : x_i + d_i^2 t in A} until many solutions appear or
/// no branch applies, moving to the densest window after each increment.
inline DensityIncrementResult density_increment_iterate(const IntegerSet& a, std::uint64_t n,
                                                        const IncrementParams& p = {}) {
  if (a.empty()) throw PreconditionError("density_increment_iterate needs a nonempty set");
  if (a.front() < 1 || static_cast<std::uint64_t>(a.back()) > n)
    throw PreconditionError("set must lie in [1, N]");
  const SetIndex idx(a);
  const double alpha0 = static_cast<double>(a.size()) / static_cast<double>(n);
  const auto cap = std::min<std::uint64_t>(
      p.max_stages,
      static_cast<std::uint64_t>(std::ceil(1.0 / std::pow(alpha0, p.increment_exponent))) + 1);

  DensityIncrementResult res;
  std::uint64_t d = 1, size = n;
  std::int64_t offset = 0;
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t step = d * d;
    IntegerSet s;
    for (std::uint64_t t = 1; t <= size; ++t)
      if (idx.contains(offset + static_cast<std::int64_t>(step * t))) s.push_back(static_cast<std::int64_t>(t));
    IncrementStage st;
    st.index = i;
    st.d = d;
    st.size = size;
    st.offset = offset;
    st.count = s.size();
    st.alpha = static_cast<double>(s.size()) / static_cast<double>(size);
    st.n_prime = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::floor(std::pow(st.alpha, p.window_exponent) * size)));
    st.n_prime = std::min(st.n_prime, size);

    res.r = d;
    res.L = size;
    res.L_prime = st.n_prime;
    res.offset = offset;

    if (size < 4 || s.empty()) {
      st.outcome = "degenerate";
      res.trace.push_back(st);
      res.terminal = "degenerate-window";
      break;
    }
    const auto q0 = std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(1.0 / (st.alpha * st.alpha))),
                                   isqrt(size)));
    const auto outcome = increment_search(s, size, st.n_prime, q0, p);
    st.outcome = branch_name(outcome);
    res.trace.push_back(st);
    const auto* inc = std::get_if<Increment>(&outcome);
    if (!inc) {
      res.terminal = st.outcome;
      break;
    }
    if (i + 1 >= cap) {
      res.terminal = "stage-cap";
      break;
    }
    // Move to the densest translate of the new step, starting from the
    // window the increment certified.
    const std::uint64_t next_d = d * inc->q;
    const std::uint64_t next_step = next_d * next_d;
    const std::uint64_t next_size = inc->length;
    std::int64_t best_offset = offset + static_cast<std::int64_t>(step) * inc->offset;
    std::uint64_t best_count = detail::count_window(idx, best_offset, next_step, next_size);
    const auto span = static_cast<std::int64_t>(next_step * next_size);
    for (std::int64_t x = a.front() - span; x <= a.back() - static_cast<std::int64_t>(next_step); ++x) {
      const auto c = detail::count_window(idx, x, next_step, next_size);
      if (c > best_count) {
        best_count = c;
        best_offset = x;
      }
    }
    d = next_d;
    size = next_size;
    offset = best_offset;
  }
  for (std::uint64_t t = 1; t <= res.L; ++t) {
    const auto v = res.offset + static_cast<std::int64_t>(res.r * res.r * t);
    if (idx.contains(v)) res.restricted.push_back(v);
  }
  return res;
}

}  // namespace sqdiff::analytic

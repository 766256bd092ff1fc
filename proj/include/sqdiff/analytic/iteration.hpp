#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqdiff/analytic/increment.hpp"
#include "sqdiff/colouring.hpp"
#include "sqdiff/verify.hpp"

namespace sqdiff::analytic {

/// One stage of the colour elimination replay.
struct IterationStage {
  std::uint64_t index = 0;
  std::vector<Colour> J;        // classes already used, in order of selection
  std::uint64_t d = 1;
  std::uint64_t size = 0;       // N_i
  std::int64_t offset = 0;      // x_i
  std::uint64_t count = 0;      // #{t in [N_i] : x_i + d_i^2 t in S_i}
  double alpha = 0;             // count / N_i
  // Square-difference step; absent when the stage terminated before it.
  std::uint64_t r = 0;
  std::uint64_t L = 0;
  std::uint64_t witnesses = 0;  // |{d_i x : x in r[L], x^2 in A - A} in [1, n]|
  std::optional<Colour> chosen;
  std::uint64_t coverage = 0;   // witnesses lying in the chosen class
};

struct IterationTrace {
  std::vector<IterationStage> stages;
  std::string terminal;
};

/// Replays the colour elimination on a clean colouring of [1, n].
///
/// Stage i keeps classes J_i with shifts o_C and the set
/// S_i = {p : p + o_C in C for all C in J_i}; its density alpha_i is taken on
/// x_i + d_i^2 [N_i]. The rescaled set A_i gets a step r_i from
/// density_increment_iterate and the longest L_i >= N_i^(1/4) with
/// sqdiff_count(A_i, r_i, L_i) >= alpha_i L_i / 2. The class outside J_i
/// holding most of the witnesses d_i x becomes C_i, and the next window pair
/// (x_{i+1}, shift of C_i) maximises the joint count on d_{i+1}^2 [N_{i+1}].
/// A state with every class in J ends the replay without a further stage.
inline IterationTrace iteration_trace(const Colouring& c, const IncrementParams& p = {}) {
  if (!verify_colouring(c).clean())
    throw PreconditionError("iteration_trace needs a colouring without monochromatic solutions");
  const auto col = c.to_explicit();
  const auto n = static_cast<std::int64_t>(col.size());
  const std::size_t k = c.k();

  std::vector<Colour> J;
  std::vector<std::int64_t> shift(k, 0);
  auto in_class = [&](std::int64_t point, Colour cls) {
    return point >= 1 && point <= n && col[static_cast<std::size_t>(point - 1)] == cls;
  };
  auto in_S = [&](std::int64_t point) {
    for (auto cls : J)
      if (!in_class(point + shift[cls], cls)) return false;
    return true;
  };

  IterationTrace out;
  std::uint64_t d = 1, size = col.size();
  std::int64_t x = 0;
  for (std::uint64_t i = 0;; ++i) {
    if (J.size() == k) {
      out.terminal = "all-classes-used";
      break;
    }
    const auto step = static_cast<std::int64_t>(d * d);
    IntegerSet A;
    for (std::uint64_t t = 1; t <= size; ++t)
      if (in_S(x + step * static_cast<std::int64_t>(t))) A.push_back(static_cast<std::int64_t>(t));
    if (A.empty()) {
      out.terminal = "empty-intersection";
      break;
    }
    IterationStage st;
    st.index = i;
    st.J = J;
    st.d = d;
    st.size = size;
    st.offset = x;
    st.count = A.size();
    st.alpha = static_cast<double>(A.size()) / static_cast<double>(size);

    st.r = density_increment_iterate(A, size, p).r;
    const auto reach = static_cast<std::uint64_t>(A.back() - A.front());
    const std::uint64_t l_max = isqrt(reach) / st.r;
    const auto l_min = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(size), 0.25))));
    std::vector<std::uint64_t> hits(l_max + 1, 0);  // prefix counts of x in r[t] with x^2 in A - A
    for (std::uint64_t t = 1; t <= l_max; ++t)
      hits[t] = hits[t - 1] + (sqdiff_count(A, st.r * t, 1) > 0 ? 1 : 0);
    for (std::uint64_t L = l_max; L >= l_min && L >= 1; --L)
      if (static_cast<double>(hits[L]) >= 0.5 * st.alpha * static_cast<double>(L)) {
        st.L = L;
        break;
      }
    if (st.L == 0) {
      out.stages.push_back(st);
      out.terminal = "corollary-failed";
      break;
    }

    std::vector<std::uint64_t> cover(k, 0);
    for (std::uint64_t t = 1; t <= st.L; ++t) {
      if (hits[t] == hits[t - 1]) continue;
      const auto w = static_cast<std::int64_t>(d * st.r * t);
      if (w > n) break;
      ++st.witnesses;
      ++cover[col[static_cast<std::size_t>(w - 1)]];
    }
    for (Colour cls = 0; cls < k; ++cls) {
      if (std::find(J.begin(), J.end(), cls) != J.end()) continue;
      if (cover[cls] > st.coverage) {
        st.coverage = cover[cls];
        st.chosen = cls;
      }
    }
    out.stages.push_back(st);
    if (!st.chosen) {
      out.terminal = "no-free-class";
      break;
    }

    const std::uint64_t next_d = d * st.r;
    const std::uint64_t next_size = std::max<std::uint64_t>(1, st.L / (st.r * next_d));
    const auto next_step = static_cast<std::int64_t>(next_d * next_d);
    const auto reach_window = next_step * static_cast<std::int64_t>(next_size);

    // Candidate x_{i+1}: with J empty S is all of Z and the shift is moot.
    std::int64_t s_lo = 0, s_hi = 0;
    if (!J.empty()) {
      s_lo = std::numeric_limits<std::int64_t>::min();
      s_hi = std::numeric_limits<std::int64_t>::max();
      for (auto cls : J) {
        s_lo = std::max(s_lo, 1 - shift[cls]);
        s_hi = std::min(s_hi, n - shift[cls]);
      }
      s_lo -= reach_window;
      s_hi -= next_step;
    }
    const std::int64_t v_lo = 1 - reach_window, v_hi = n - next_step;
    const double work = static_cast<double>(std::max<std::int64_t>(0, s_hi - s_lo + 1)) *
                        static_cast<double>(std::max<std::int64_t>(0, v_hi - v_lo + 1)) *
                        static_cast<double>(next_size);
    if (work > 4e9) throw CapacityError("iteration_trace window search too large for this n");

    const Colour chosen = *st.chosen;
    std::int64_t best_s = s_lo, best_v = v_lo;
    std::uint64_t best = 0;
    bool have = false;
    std::vector<std::int64_t> ts;
    for (std::int64_t s = s_lo; s <= s_hi; ++s) {
      ts.clear();
      for (std::uint64_t t = 1; t <= next_size; ++t)
        if (in_S(s + next_step * static_cast<std::int64_t>(t))) ts.push_back(static_cast<std::int64_t>(t));
      if (ts.size() < best || ts.empty()) continue;
      for (std::int64_t v = v_lo; v <= v_hi; ++v) {
        std::uint64_t cnt = 0;
        for (auto t : ts) cnt += in_class(v + next_step * t, chosen);
        if (!have || cnt > best) {
          have = true;
          best = cnt;
          best_s = s;
          best_v = v;
        }
      }
    }
    J.push_back(chosen);
    shift[chosen] = best_v - best_s;
    x = best_s;
    d = next_d;
    size = next_size;
  }
  return out;
}

}  // namespace sqdiff::analytic

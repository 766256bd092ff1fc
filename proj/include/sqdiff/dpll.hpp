#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "sqdiff/budget.hpp"
#include "sqdiff/cnf.hpp"

namespace sqdiff {

enum class SatStatus { Sat, Unsat, Unknown };

struct DpllResult {
  SatStatus status = SatStatus::Unknown;
  std::vector<bool> model;  // indexed by variable, [0] unused
  std::uint64_t nodes = 0;
};

/// Plain DPLL: unit propagation plus branching on the first unassigned
/// variable, true first. No learning, no heuristics; used as an oracle.
class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), value_(cnf.num_vars + 1, kFree), occurs_(2 * (cnf.num_vars + 1)) {
    for (std::size_t i = 0; i < cnf_.clauses.size(); ++i)
      for (auto lit : cnf_.clauses[i]) occurs_[slot(lit)].push_back(i);
  }

  DpllResult solve(const Budget& budget = {}) {
    BudgetMeter meter(budget);
    DpllResult out;
    if (meter.exhausted_up_front()) return out;
    bool empty_clause = false;
    for (const auto& cl : cnf_.clauses) empty_clause |= cl.empty();
    bool sat = false;
    if (!empty_clause) {
      // Seed propagation with all unit clauses.
      bool ok = true;
      for (const auto& cl : cnf_.clauses)
        if (cl.size() == 1 && ok) ok = enqueue(cl[0]) && propagate();
      sat = ok && search(meter);
    }
    out.nodes = meter.nodes();
    if (aborted_) return out;
    out.status = sat ? SatStatus::Sat : SatStatus::Unsat;
    if (sat) {
      out.model.assign(value_.size(), false);
      for (std::size_t v = 1; v < value_.size(); ++v) out.model[v] = value_[v] == kTrue;
    }
    return out;
  }

 private:
  static constexpr std::int8_t kFree = -1, kFalse = 0, kTrue = 1;

  static std::size_t slot(std::int32_t lit) {
    return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0);
  }

  std::int8_t lit_value(std::int32_t lit) const {
    auto v = value_[std::abs(lit)];
    if (v == kFree) return kFree;
    return (lit > 0) == (v == kTrue) ? kTrue : kFalse;
  }

  bool enqueue(std::int32_t lit) {
    auto cur = lit_value(lit);
    if (cur == kTrue) return true;
    if (cur == kFalse) return false;
    value_[std::abs(lit)] = lit > 0 ? kTrue : kFalse;
    trail_.push_back(lit);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      const auto falsified = -trail_[head_++];
      for (auto ci : occurs_[slot(falsified)]) {
        std::int32_t unit = 0;
        int free = 0;
        bool satisfied = false;
        for (auto lit : cnf_.clauses[ci]) {
          auto v = lit_value(lit);
          if (v == kTrue) { satisfied = true; break; }
          if (v == kFree) { ++free; unit = lit; }
        }
        if (satisfied) continue;
        if (free == 0) return false;
        if (free == 1 && !enqueue(unit)) return false;
      }
    }
    return true;
  }

  void backtrack(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[std::abs(trail_.back())] = kFree;
      trail_.pop_back();
    }
    head_ = mark;
  }

  bool search(BudgetMeter& meter) {
    std::int32_t var = 0;
    for (std::size_t v = 1; v < value_.size(); ++v)
      if (value_[v] == kFree) { var = static_cast<std::int32_t>(v); break; }
    if (var == 0) return true;
    for (auto lit : {var, -var}) {
      if (!meter.charge()) {
        aborted_ = true;
        return false;
      }
      const auto mark = trail_.size();
      if (enqueue(lit) && propagate() && search(meter)) return true;
      backtrack(mark);
      if (aborted_) return false;
    }
    return false;
  }

  const Cnf& cnf_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<std::int32_t> trail_;
  std::size_t head_ = 0;
  bool aborted_ = false;
};

inline DpllResult dpll_solve(const Cnf& cnf, const Budget& budget = {}) {
  return Dpll(cnf).solve(budget);
}

}  // namespace sqdiff

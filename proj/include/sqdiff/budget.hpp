#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace sqdiff {

/// Resource limits for exhaustive searches. Node limits are reproducible;
/// wall-clock limits are not.
struct Budget {
  std::optional<std::uint64_t> nodes;
  std::optional<std::chrono::milliseconds> wall;

  static Budget unlimited() { return {}; }
  static Budget node_limit(std::uint64_t n) { return {n, std::nullopt}; }
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Charges one node; false once the budget is spent.
  bool charge() {
    if (budget_.nodes && nodes_ >= *budget_.nodes) return false;
    ++nodes_;
    if (budget_.wall && (nodes_ & 1023) == 0 && elapsed() > *budget_.wall) {
      wall_hit_ = true;
      return false;
    }
    return true;
  }

  /// Accounts for nodes spent by a nested search.
  void add(std::uint64_t n) { nodes_ += n; }

  bool exhausted_up_front() const { return budget_.nodes && *budget_.nodes == 0; }

  std::uint64_t nodes() const { return nodes_; }
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

  /// Budget left for a follow-up search sharing this meter's limits.
  Budget remaining() const {
    Budget b;
    if (budget_.nodes) b.nodes = *budget_.nodes > nodes_ ? *budget_.nodes - nodes_ : 0;
    if (budget_.wall) {
      auto left = *budget_.wall - elapsed();
      b.wall = left.count() > 0 ? left : std::chrono::milliseconds(0);
      if (left.count() <= 0) b.nodes = 0;
    }
    return b;
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool wall_hit_ = false;
};

}  // namespace sqdiff

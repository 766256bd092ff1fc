#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "sqdiff/errors.hpp"

namespace sqdiff {

/// Finite set of integers, sorted ascending without repeats.
using IntegerSet = std::vector<std::int64_t>;

inline IntegerSet make_set(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline IntegerSet interval_set(std::int64_t lo, std::int64_t hi) {
  IntegerSet s;
  for (auto x = lo; x <= hi; ++x) s.push_back(x);
  return s;
}

/// Membership bitmap over [min, max] of a set.
class SetIndex {
 public:
  explicit SetIndex(const IntegerSet& s) {
    if (s.empty()) return;
    base_ = s.front();
    bits_.assign(static_cast<std::size_t>(s.back() - s.front() + 1), false);
    for (auto x : s) bits_[static_cast<std::size_t>(x - base_)] = true;
  }
  bool contains(std::int64_t x) const {
    if (x < base_) return false;
    const auto off = static_cast<std::uint64_t>(x - base_);
    return off < bits_.size() && bits_[off];
  }

 private:
  std::int64_t base_ = 0;
  std::vector<bool> bits_;
};

// Set files: one decimal integer per line, strictly ascending.
inline IntegerSet read_set(std::istream& is) {
  IntegerSet out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
    if (!out.empty() && v <= out.back()) throw ParseError("set file must be strictly ascending");
    out.push_back(v);
  }
  return out;
}

inline void write_set(std::ostream& os, const IntegerSet& s) {
  for (auto x : s) os << x << '\n';
}

}  // namespace sqdiff

#pragma once

#include <fftw3.h>

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "sqdiff/errors.hpp"
#include "sqdiff/integer_set.hpp"

namespace sqdiff::analytic {

/// f = 1_A - alpha 1_[N] with alpha = |A| / N, so f sums to zero.
class BalancedIndicator {
 public:
  BalancedIndicator(IntegerSet a, std::uint64_t n) : a_(std::move(a)), n_(n) {
    if (n_ == 0) throw DomainError("balanced indicator needs N >= 1");
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] < 1 || static_cast<std::uint64_t>(a_[i]) > n_)
        throw DomainError("set element outside [1, N]");
      if (i && a_[i] <= a_[i - 1]) throw DomainError("set must be strictly ascending");
    }
  }

  const IntegerSet& set() const { return a_; }
  std::uint64_t N() const { return n_; }
  double alpha() const { return static_cast<double>(a_.size()) / static_cast<double>(n_); }

  /// Values f(1), ..., f(N).
  std::vector<double> values() const {
    std::vector<double> f(n_, -alpha());
    for (auto x : a_) f[static_cast<std::size_t>(x - 1)] += 1.0;
    return f;
  }

 private:
  IntegerSet a_;
  std::uint64_t n_;
};

struct ParsevalSides {
  double lhs = 0;  // sum_n f(n)^2
  double rhs = 0;  // (1/M) sum_j |f^(j/M)|^2

  double relative_gap() const {
    const double scale = lhs > 1.0 ? lhs : 1.0;
    return (lhs > rhs ? lhs - rhs : rhs - lhs) / scale;
  }
};

namespace detail {

// FFTW's planner is not thread safe.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace detail

/// |f^(j/M)|^2 for j = 0..M-1 where f^(theta) = sum_n f(n) e(-theta n),
/// computed with a real-to-complex FFT of length M.
inline std::vector<double> power_spectrum(const std::vector<double>& f_from_1, std::uint64_t M) {
  if (M < f_from_1.size() + 1) throw PreconditionError("grid too small for signal");
  const auto m = static_cast<int>(M);
  std::unique_ptr<double, detail::FftwFree> in(fftw_alloc_real(M));
  std::unique_ptr<fftw_complex, detail::FftwFree> out(fftw_alloc_complex(M / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(m, in.get(), out.get(), FFTW_ESTIMATE);
  }
  std::fill(in.get(), in.get() + M, 0.0);
  for (std::size_t i = 0; i < f_from_1.size(); ++i) in.get()[i + 1] = f_from_1[i];
  fftw_execute(plan);
  std::vector<double> power(M);
  for (std::uint64_t j = 0; j <= M / 2; ++j) {
    const double re = out.get()[j][0], im = out.get()[j][1];
    power[j] = re * re + im * im;
    if (j != 0) power[M - j] = power[j];  // f is real: f^(-theta) = conj f^(theta)
  }
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return power;
}

/// Both sides of the discrete Parseval identity on the grid j/M. Requires
/// M >= 2N so the grid sum has no wraparound.
inline ParsevalSides parseval_check(const BalancedIndicator& f, std::uint64_t M) {
  if (M < 2 * f.N()) throw PreconditionError("parseval_check needs M >= 2N");
  const auto vals = f.values();
  ParsevalSides s;
  for (double v : vals) s.lhs += v * v;
  const auto power = power_spectrum(vals, M);
  long double acc = 0;
  for (double p : power) acc += p;
  s.rhs = static_cast<double>(acc / static_cast<long double>(M));
  return s;
}

/// Smallest power of two >= v.
inline std::uint64_t next_pow2(std::uint64_t v) {
  std::uint64_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

}  // namespace sqdiff::analytic

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "sqdiff/bignum.hpp"
#include "sqdiff/errors.hpp"

namespace sqdiff::analytic {

/// The rational angle j / M on the circle R/Z.
struct GridAngle {
  std::int64_t j = 0;
  std::uint64_t M = 1;

  /// j mod M as a value in [0, M).
  std::uint64_t residue() const {
    const auto m = static_cast<std::int64_t>(M);
    return static_cast<std::uint64_t>(((j % m) + m) % m);
  }
  long double value() const { return static_cast<long double>(j) / static_cast<long double>(M); }
};

/// e(-t) = exp(-2 pi i t) for t given as a fraction of a turn in [0, 1).
inline std::complex<double> e_minus(long double turns) {
  const long double a = -2.0L * std::numbers::pi_v<long double> * turns;
  return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

struct WeylEvaluation {
  GridAngle theta;
  std::uint64_t n_prime = 0;
  std::complex<double> value;
};

/// T(theta) = sum_{1 <= z^2 <= N'} e(-theta z^2), by direct summation.
inline std::complex<double> weyl_sum(long double theta, std::uint64_t n_prime) {
  if (n_prime < 1) throw DomainError("weyl_sum needs N' >= 1");
  const std::uint64_t zmax = isqrt(n_prime);
  const long double base = theta - std::floor(theta);
  std::complex<long double> acc = 0;
  for (std::uint64_t z = 1; z <= zmax; ++z) {
    long double t = base * static_cast<long double>(z * z);
    t -= std::floor(t);
    const auto term = e_minus(t);
    acc += std::complex<long double>(term.real(), term.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// Same sum with the phase j z^2 mod M reduced exactly.
inline std::complex<double> weyl_sum(const GridAngle& theta, std::uint64_t n_prime) {
  if (n_prime < 1) throw DomainError("weyl_sum needs N' >= 1");
  if (theta.M == 0) throw DomainError("grid denominator must be positive");
  const std::uint64_t zmax = isqrt(n_prime);
  const auto j = static_cast<unsigned __int128>(theta.residue());
  std::complex<long double> acc = 0;
  for (std::uint64_t z = 1; z <= zmax; ++z) {
    const auto u = static_cast<std::uint64_t>((j * z % theta.M) * z % theta.M);
    const auto term = e_minus(static_cast<long double>(u) / static_cast<long double>(theta.M));
    acc += std::complex<long double>(term.real(), term.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

inline WeylEvaluation evaluate_weyl(const GridAngle& theta, std::uint64_t n_prime) {
  return {theta, n_prime, weyl_sum(theta, n_prime)};
}

/// Shape of the Weyl bound for the square sum at denominator q:
/// sqrt(N'/q) + (sqrt(N') log(q+1))^(1/2) + (q log(q+1))^(1/2), without
/// its constant.
inline double weyl_envelope(std::uint64_t n_prime, std::uint64_t q) {
  const double np = static_cast<double>(n_prime);
  const double qq = static_cast<double>(q);
  const double lg = std::log(qq + 1.0);
  return std::sqrt(np / qq) + std::sqrt(std::sqrt(np) * lg) + std::sqrt(qq * lg);
}

}  // namespace sqdiff::analytic

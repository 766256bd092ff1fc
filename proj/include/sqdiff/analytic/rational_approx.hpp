#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>

#include "sqdiff/analytic/weyl.hpp"
#include "sqdiff/errors.hpp"

namespace sqdiff::analytic {

struct Approximation {
  std::int64_t a = 0;
  std::uint64_t q = 1;

  friend bool operator==(const Approximation&, const Approximation&) = default;
};

/// Last continued-fraction convergent a/q of j/M with q <= Q. Exact.
/// Since the next denominator exceeds Q, |j/M - a/q| < 1/(qQ).
inline Approximation diophantine_approx(const GridAngle& theta, std::uint64_t Q) {
  if (Q < 1) throw DomainError("diophantine_approx needs Q >= 1");
  if (theta.M == 0) throw DomainError("grid denominator must be positive");
  using I = __int128;
  I num = theta.j, den = static_cast<I>(theta.M);
  // h/k convergents: h_{-1} = 1, k_{-1} = 0, h_{-2} = 0, k_{-2} = 1.
  I h_prev = 0, h = 1, k_prev = 1, k = 0;
  while (den != 0) {
    I a = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --a;  // floor
    const I h_next = a * h + h_prev;
    const I k_next = a * k + k_prev;
    if (k_next > static_cast<I>(Q)) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
    const I rem = num - a * den;
    num = den;
    den = rem;
  }
  return {static_cast<std::int64_t>(h), static_cast<std::uint64_t>(k)};
}

/// Floating-point variant of the convergent walk. The result is checked
/// against |theta - a/q| <= 1/(qQ) and, if rounding spoiled it, replaced by
/// the smallest q that satisfies the bound.
inline Approximation diophantine_approx(long double theta, std::uint64_t Q) {
  if (Q < 1) throw DomainError("diophantine_approx needs Q >= 1");
  auto ok = [&](std::int64_t a, std::uint64_t q) {
    const long double err = std::fabs(theta - static_cast<long double>(a) / q);
    return err <= 1.0L / (static_cast<long double>(q) * Q);
  };
  long double x = theta;
  long double h_prev = 0, h = 1, k_prev = 1, k = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a = std::floor(x);
    const long double h_next = a * h + h_prev;
    const long double k_next = a * k + k_prev;
    if (k_next > static_cast<long double>(Q)) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
    const long double frac = x - a;
    if (frac < 1e-18L) break;
    x = 1.0L / frac;
  }
  Approximation res{static_cast<std::int64_t>(h), static_cast<std::uint64_t>(k)};
  if (res.q >= 1 && ok(res.a, res.q)) return res;
  for (std::uint64_t q = 1; q <= Q; ++q) {
    const auto a = static_cast<std::int64_t>(std::llround(theta * q));
    if (std::gcd(a, static_cast<std::int64_t>(q)) == 1 && ok(a, q)) return {a, q};
  }
  throw InvariantError("no rational approximation found");  // unreachable by Dirichlet
}

}  // namespace sqdiff::analytic

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "sqdiff/analytic/weyl.hpp"

namespace sqdiff::analytic {

/// theta in M_q: some a coprime to q has |theta - a/q| <= 1/(qQ).
inline bool major_arc_membership(const GridAngle& theta, std::uint64_t q, std::uint64_t Q) {
  if (q < 1 || q > Q) throw DomainError("major arc needs 1 <= q <= Q");
  using I = __int128;
  const I j = theta.j, M = static_cast<I>(theta.M);
  // |j/M - a/q| <= 1/(qQ)  <=>  |jq - aM| * Q <= M.
  I a0 = (j * static_cast<I>(q)) / M;
  if ((j * static_cast<I>(q)) % M != 0 && j < 0) --a0;
  for (I a = a0 - 1; a <= a0 + 2; ++a) {
    I diff = j * static_cast<I>(q) - a * M;
    if (diff < 0) diff = -diff;
    if (diff * static_cast<I>(Q) > M) continue;
    const auto aa = static_cast<std::int64_t>(a < 0 ? -a : a);
    if (std::gcd(aa, static_cast<std::int64_t>(q)) == 1) return true;
  }
  return false;
}

inline bool major_arc_membership(long double theta, std::uint64_t q, std::uint64_t Q) {
  if (q < 1 || q > Q) throw DomainError("major arc needs 1 <= q <= Q");
  const long double radius = 1.0L / (static_cast<long double>(q) * Q);
  const auto centre = static_cast<std::int64_t>(std::floor(theta * q));
  for (std::int64_t a = centre - 1; a <= centre + 2; ++a) {
    if (std::gcd(a < 0 ? -a : a, static_cast<std::int64_t>(q)) != 1) continue;
    if (std::fabs(theta - static_cast<long double>(a) / q) <= radius) return true;
  }
  return false;
}

/// Fourier transform at theta of the uniform probability measure on
/// {t q^2 : -Q <= t <= Q}: the normalised Dirichlet kernel
/// sin((2Q+1) pi q^2 theta) / ((2Q+1) sin(pi q^2 theta)), equal to 1 when
/// q^2 theta is an integer (decided exactly from the residue).
inline std::complex<double> progression_measure_hat(const GridAngle& theta, std::uint64_t q,
                                                    std::uint64_t Q) {
  if (q < 1 || Q < 1) throw DomainError("progression needs q, Q >= 1");
  using U = unsigned __int128;
  const U M = theta.M;
  const U u = (static_cast<U>(theta.residue()) * q % M) * q % M;
  if (u == 0) return 1.0;
  const U len = 2 * static_cast<U>(Q) + 1;
  const U top = (len * u) % (2 * M);  // sin(pi * len * u / M) has period 2M in len*u
  const long double pi = std::numbers::pi_v<long double>;
  const long double numer = std::sin(pi * static_cast<long double>(top) / static_cast<long double>(M));
  const long double denom = static_cast<long double>(len) *
                            std::sin(pi * static_cast<long double>(u) / static_cast<long double>(M));
  return static_cast<double>(numer / denom);
}

inline std::complex<double> progression_measure_hat(long double theta, std::uint64_t q,
                                                    std::uint64_t Q) {
  if (q < 1 || Q < 1) throw DomainError("progression needs q, Q >= 1");
  const long double pi = std::numbers::pi_v<long double>;
  long double phase = theta * static_cast<long double>(q) * q;
  phase -= std::floor(phase);
  const long double len = 2.0L * Q + 1;
  const long double s = std::sin(pi * phase);
  if (std::fabs(s) > 1e-9L) return static_cast<double>(std::sin(pi * len * phase) / (len * s));
  // Near the removable singularity the direct sum is the stable form.
  long double acc = 1;
  for (std::uint64_t t = 1; t <= Q; ++t) acc += 2 * std::cos(2 * pi * phase * t);
  return static_cast<double>(acc / len);
}

}  // namespace sqdiff::analytic

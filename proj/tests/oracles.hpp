#pragma once

// Test-only reference computations. Nothing here calls into the library's
// Möbius, transform or coefficient code.

#include <cstdint>
#include <random>
#include <vector>

#include "mobius/rational.hpp"

namespace mobius::oracle {

/// Classical Möbius function by trial-division factorization.
inline int classical_mu(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Gaussian binomial by the Pascal-type recurrence
/// C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q; q = 1 gives ordinary binomials.
inline Integer pascal_qbinomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Integer>> t(n + 1, std::vector<Integer>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      Integer qj = 1;
      for (int e = 0; e < j; ++e) qj *= q;
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? qj * t[i - 1][j] : Integer(0));
    }
  }
  return t[n][k];
}

/// Number of k-dimensional subspaces of GF(p)^n for prime p, counted as
/// ordered bases of k independent vectors modulo GL_k.
inline Integer count_subspaces(int n, int k, int p) {
  Integer bases = 1, gl = 1;
  Integer pn = 1, pk = 1;
  for (int e = 0; e < n; ++e) pn *= p;
  for (int e = 0; e < k; ++e) pk *= p;
  Integer pi = 1;
  for (int i = 0; i < k; ++i) {
    bases *= pn - pi;
    gl *= pk - pi;
    pi *= p;
  }
  return bases / gl;
}

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace mobius::oracle

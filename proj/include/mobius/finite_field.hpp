#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mobius/errors.hpp"

namespace mobius {

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
inline std::optional<std::pair<int, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair<int, int>{static_cast<int>(q), 1};
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), e};
}

inline void require_prime_power(std::int64_t q) {
  if (!prime_power(q))
    throw InputError("q = " + std::to_string(q) + " is not a prime power");
}

// GF(p^e) with elements 0..q-1 read as base-p digit vectors of polynomials
// modulo a fixed monic irreducible of degree e. Table driven; q is small.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 256;

  explicit FiniteField(int q) : q_(q) {
    auto pp = prime_power(q);
    if (!pp) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    if (q > kMaxOrder)
      throw InputError("q = " + std::to_string(q) + " exceeds supported field order " +
                       std::to_string(kMaxOrder));
    p_ = pp->first;
    e_ = pp->second;
    build_tables();
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(q)");
    return inv_[a];
  }

 private:
  using Poly = std::vector<int>;  // ascending coefficients mod p

  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

  Poly digits(int v) const {
    Poly out(e_, 0);
    for (int i = 0; i < e_; ++i) {
      out[i] = v % p_;
      v /= p_;
    }
    return out;
  }

  int number(const Poly& c) const {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
  }

  // Remainder of a modulo monic m, coefficients mod p.
  Poly poly_mod(Poly a, const Poly& m) const {
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
      int c = a[i];
      if (c == 0) continue;
      for (int j = 0; j <= dm; ++j)
        a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p_ + p_) % p_;
    }
    a.resize(std::max(dm, 1));
    return a;
  }

  static bool is_zero(const Poly& a) {
    for (int c : a)
      if (c != 0) return false;
    return true;
  }

  // Monic polynomial of degree `deg` indexed by its low coefficients.
  Poly monic(int deg, int low) const {
    Poly m(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
      m[i] = low % p_;
      low /= p_;
    }
    m[deg] = 1;
    return m;
  }

  bool irreducible(const Poly& m) const {
    const int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (int low = 0; low < count; ++low)
        if (is_zero(poly_mod(m, monic(d, low)))) return false;
    }
    return true;
  }

  void build_tables() {
    Poly modulus;
    if (e_ == 1) {
      modulus = {0, 1};
    } else {
      int count = 1;
      for (int i = 0; i < e_; ++i) count *= p_;
      for (int low = 0; low < count; ++low) {
        Poly m = monic(e_, low);
        if (m[0] != 0 && irreducible(m)) {
          modulus = m;
          break;
        }
      }
    }
    const std::size_t n = static_cast<std::size_t>(q_) * q_;
    add_.assign(n, 0);
    mul_.assign(n, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      Poly da = digits(a);
      Poly na(e_);
      for (int i = 0; i < e_; ++i) na[i] = (p_ - da[i]) % p_;
      neg_[a] = number(na);
      for (int b = 0; b < q_; ++b) {
        Poly db = digits(b);
        Poly s(e_);
        for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[idx(a, b)] = number(s);
        Poly prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        Poly r = e_ == 1 ? Poly{prod[0] % p_} : poly_mod(prod, modulus);
        r.resize(e_, 0);
        mul_[idx(a, b)] = number(r);
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[idx(a, b)] == 1) inv_[a] = b;
  }

  int q_;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace mobius

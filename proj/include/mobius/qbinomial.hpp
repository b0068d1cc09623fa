#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/rational.hpp"

namespace mobius {

namespace detail {

inline void require_q(std::int64_t q) {
  if (q < 2) throw InputError("q must be at least 2, got " + std::to_string(q));
}

// [d]_q = (q^d - 1) / (q - 1)
inline Integer q_bracket(std::int64_t d, std::int64_t q) {
  return (pow(Integer(q), static_cast<unsigned long>(d)) - 1) / (q - 1);
}

}  // namespace detail

/// [n]!_q = prod_{d=1}^{n} (q^d - 1)/(q - 1).
inline Integer qfactorial(std::int64_t n, std::int64_t q) {
  if (n < 0) throw InputError("q-factorial of a negative number");
  detail::require_q(q);
  Integer r = 1;
  for (std::int64_t d = 1; d <= n; ++d) r *= detail::q_bracket(d, q);
  return r;
}

/// Gaussian binomial [n]!_q / ([k]!_q [n-k]!_q); 0 when k > n.
inline Integer qbinomial(std::int64_t n, std::int64_t k, std::int64_t q) {
  if (n < 0 || k < 0) throw InputError("q-binomial arguments must be nonnegative");
  detail::require_q(q);
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1); the quotient is exact.
  Integer num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= pow(Integer(q), static_cast<unsigned long>(n - i)) - 1;
    den *= pow(Integer(q), static_cast<unsigned long>(i + 1)) - 1;
  }
  return num / den;
}

/// Dense polynomial in u with exact rational coefficients, degree ascending.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial constant(const Rational& c) { return QPolynomial({c}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& u) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return QPolynomial(std::move(c));
  }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(c));
  }

  friend QPolynomial operator*(const Rational& s, const QPolynomial& p) {
    return QPolynomial::constant(s) * p;
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// P_k(u) = prod_{d=1}^{k} (1 - q^{1-d} u) / (1 - q^d), so P_k(q^n) is the
/// Gaussian binomial C(n, k)_q.
inline QPolynomial pk_polynomial(std::int64_t k, std::int64_t q) {
  if (k < 0) throw InputError("P_k needs k >= 0");
  detail::require_q(q);
  QPolynomial p = QPolynomial::constant(1);
  for (std::int64_t d = 1; d <= k; ++d) {
    const Rational denom = Rational(1) - Rational(pow(Integer(q), static_cast<unsigned long>(d)));
    // q^{1-d} = 1 / q^{d-1}
    const Rational slope(Integer(1), pow(Integer(q), static_cast<unsigned long>(d - 1)));
    QPolynomial factor({Rational(1) / denom, Rational(-slope / denom)});
    p = p * factor;
  }
  return p;
}

inline Rational pk_evaluate(const QPolynomial& poly, const Rational& u) { return poly(u); }

}  // namespace mobius

#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/finite_field.hpp"
#include "mobius/qbinomial.hpp"
#include "mobius/rational.hpp"

namespace mobius {

/// The four reduced incidence algebras, named by their structure
/// coefficients c(n; d, k):
///   Dirichlet    1[n = dk]                          (divisibility, t = m/n)
///   LinearOrder  1[n = d + k - 1]                   (usual order, t = m - n + 1)
///   Binomial     1[n = d + k - 1] C(n-1, k-1)       (finite subsets, t = |T| - |S| + 1)
///   QBinomial    1[n = d + k - 1] C(n-1, k-1)_q     (subspaces, t = dim V - dim U + 1)
struct CoefficientFamily {
  enum class Kind { Dirichlet, LinearOrder, Binomial, QBinomial };
  Kind kind = Kind::Dirichlet;
  int q = 0;

  static CoefficientFamily dirichlet() { return {Kind::Dirichlet, 0}; }
  static CoefficientFamily linear_order() { return {Kind::LinearOrder, 0}; }
  static CoefficientFamily binomial() { return {Kind::Binomial, 0}; }
  static CoefficientFamily qbinomial(int q) {
    require_prime_power(q);
    return {Kind::QBinomial, q};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Dirichlet: return "dirichlet";
      case Kind::LinearOrder: return "linear";
      case Kind::Binomial: return "binomial";
      case Kind::QBinomial: return "qbinomial:q=" + std::to_string(q);
    }
    return "?";
  }

  friend bool operator==(const CoefficientFamily&, const CoefficientFamily&) = default;
};

inline CoefficientFamily parse_coefficient_family(std::string_view text, std::optional<int> q) {
  if (text == "dirichlet") return CoefficientFamily::dirichlet();
  if (text == "linear" || text == "linear-order") return CoefficientFamily::linear_order();
  if (text == "binomial") return CoefficientFamily::binomial();
  if (text == "qbinomial") {
    if (!q) throw InputError("qbinomial family needs --q");
    return CoefficientFamily::qbinomial(*q);
  }
  throw InputError("unknown coefficient family '" + std::string(text) + "'");
}

/// Finitely supported sequence on the positive integers; absent indices are 0.
class ReducedSequence {
 public:
  ReducedSequence() = default;
  ReducedSequence(std::initializer_list<std::pair<std::int64_t, Rational>> entries) {
    for (const auto& [n, v] : entries) set(n, v);
  }

  void set(std::int64_t n, const Rational& v) {
    if (n < 1) throw InputError("reduced sequences are indexed from 1, got " + std::to_string(n));
    if (v == 0) values_.erase(n);
    else values_[n] = v;
  }
  Rational at(std::int64_t n) const {
    auto it = values_.find(n);
    return it == values_.end() ? Rational(0) : it->second;
  }
  Rational operator()(std::int64_t n) const { return at(n); }

  bool empty() const { return values_.empty(); }
  std::vector<std::int64_t> support() const {
    std::vector<std::int64_t> out;
    for (const auto& [n, v] : values_) out.push_back(n);
    return out;
  }
  std::optional<std::int64_t> max_index() const {
    if (values_.empty()) return std::nullopt;
    return values_.rbegin()->first;
  }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const ReducedSequence&, const ReducedSequence&) = default;

 private:
  std::map<std::int64_t, Rational> values_;
};

template <class F>
concept SequenceFunction = requires(const F& f, std::int64_t n) {
  { f(n) } -> std::convertible_to<Rational>;
};

struct ZetaSequence {
  Rational operator()(std::int64_t) const { return 1; }
};

struct DeltaSequence {
  Rational operator()(std::int64_t n) const { return n == 1 ? 1 : 0; }
};

inline Integer structure_coefficient(const CoefficientFamily& fam, std::int64_t n, std::int64_t d,
                                     std::int64_t k) {
  if (n < 1 || d < 1 || k < 1) throw InputError("structure coefficients need n, d, k >= 1");
  switch (fam.kind) {
    case CoefficientFamily::Kind::Dirichlet: return n == d * k ? 1 : 0;
    case CoefficientFamily::Kind::LinearOrder: return n == d + k - 1 ? 1 : 0;
    case CoefficientFamily::Kind::Binomial:
      return n == d + k - 1 ? binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k - 1))
                            : Integer(0);
    case CoefficientFamily::Kind::QBinomial:
      return n == d + k - 1 ? qbinomial(n - 1, k - 1, fam.q) : Integer(0);
  }
  return 0;
}

/// Calls visit(d, k, c) for every split of n with c(n; d, k) != 0.
template <class Visit>
void for_each_split(const CoefficientFamily& fam, std::int64_t n, Visit&& visit) {
  if (n < 1) throw InputError("reduced index must be >= 1");
  if (fam.kind == CoefficientFamily::Kind::Dirichlet) {
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) visit(d, n / d, Integer(1));
    return;
  }
  for (std::int64_t d = 1; d <= n; ++d) visit(d, n + 1 - d, structure_coefficient(fam, n, d, n + 1 - d));
}

/// (f * g)(n) = sum over d, k of c(n; d, k) f(d) g(k).
template <SequenceFunction F, SequenceFunction G>
Rational reduced_convolve(const CoefficientFamily& fam, const F& f, const G& g, std::int64_t n) {
  Rational sum = 0;
  for_each_split(fam, n, [&](std::int64_t d, std::int64_t k, const Integer& c) {
    Rational fd = f(d);
    if (fd == 0) return;
    sum += Rational(c) * fd * Rational(g(k));
  });
  return sum;
}

/// g(n) = (zeta * f)(n) = sum over d, k of c(n; d, k) f(k).
template <SequenceFunction F>
Rational reduced_zeta_transform(const CoefficientFamily& fam, const F& f, std::int64_t n) {
  Rational sum = 0;
  for_each_split(fam, n, [&](std::int64_t, std::int64_t k, const Integer& c) {
    Rational fk = f(k);
    if (fk != 0) sum += Rational(c) * fk;
  });
  return sum;
}

/// The reduced Möbius function on {1..N}, by triangular solve of
/// zeta * mu = delta. The k = n term always has coefficient c(n; 1, n) = 1.
inline ReducedSequence reduced_mobius(const CoefficientFamily& fam, std::int64_t N) {
  if (N < 1) throw InputError("reduced Möbius bound must be >= 1");
  ReducedSequence mu;
  for (std::int64_t n = 1; n <= N; ++n) {
    Rational rest = 0;
    for_each_split(fam, n, [&](std::int64_t, std::int64_t k, const Integer& c) {
      if (k < n) rest += Rational(c) * mu.at(k);
    });
    mu.set(n, (n == 1 ? Rational(1) : Rational(0)) - rest);
  }
  return mu;
}

}  // namespace mobius

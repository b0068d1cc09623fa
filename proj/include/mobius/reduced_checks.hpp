#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/errors.hpp"
#include "mobius/families.hpp"
#include "mobius/poset_core.hpp"
#include "mobius/poset_view.hpp"
#include "mobius/qbinomial.hpp"
#include "mobius/reduced.hpp"

namespace mobius {

/// The natural typing t(x, y) of the poset underlying `fam`; 0 when x is not
/// below y. Dirichlet: y/x. LinearOrder: y - x + 1. Binomial: |T| - |S| + 1.
/// QBinomial: dim V - dim U + 1.
inline std::int64_t type_of(const CoefficientFamily& fam, const PosetView& poset,
                            const ElementKey& x, const ElementKey& y) {
  if (!poset.leq(x, y)) return 0;
  switch (fam.kind) {
    case CoefficientFamily::Kind::Dirichlet: return y.value() / x.value();
    case CoefficientFamily::Kind::LinearOrder: return y.value() - x.value() + 1;
    case CoefficientFamily::Kind::Binomial:
      return static_cast<std::int64_t>(y.members().size()) -
             static_cast<std::int64_t>(x.members().size()) + 1;
    case CoefficientFamily::Kind::QBinomial: return y.dimension() - x.dimension() + 1;
  }
  return 0;
}

inline void require_matching_poset(const CoefficientFamily& fam, const PosetView& poset) {
  auto b = poset.bottom();
  Family expected = Family::Divisibility;
  switch (fam.kind) {
    case CoefficientFamily::Kind::Dirichlet: expected = Family::Divisibility; break;
    case CoefficientFamily::Kind::LinearOrder: expected = Family::LinearOrder; break;
    case CoefficientFamily::Kind::Binomial: expected = Family::FiniteSubsets; break;
    case CoefficientFamily::Kind::QBinomial: expected = Family::Subspaces; break;
  }
  bool ok = b && b->family() == expected;
  if (ok && expected == Family::Subspaces) ok = b->subspace_q() == fam.q;
  if (!ok)
    throw InputError("poset " + poset.name() + " does not carry the typing of family " +
                     fam.to_string());
}

struct CoefficientMismatch {
  ElementKey x, y;
  std::int64_t d = 0, k = 0;
  Integer expected, observed;
};

struct StructureReport {
  std::string family;
  std::string poset;
  std::int64_t frontier = 0;
  std::int64_t n_max = 0;
  std::size_t pairs_checked = 0;         // typing axiom: t != 0 iff x <= y
  std::size_t intervals_checked = 0;     // intervals with 1 <= t <= n_max
  std::size_t coefficients_checked = 0;  // (interval, d, k) triples
  std::vector<std::pair<ElementKey, ElementKey>> typing_violations;
  std::vector<CoefficientMismatch> mismatches;

  bool all_match() const { return typing_violations.empty() && mismatches.empty(); }
  const char* verdict() const { return all_match() ? "all-match" : "mismatch"; }
};

/// Brute-force count of z in [x, y] splitting it into types (d, k), compared
/// with the closed-form structure coefficient for every interval of
/// frontier(n) whose type is at most n_max. Agreement on every interval also
/// witnesses the typing's closure axiom: the split counts depend on the type
/// alone.
inline StructureReport verify_structure_coefficients(const CoefficientFamily& fam,
                                                     const PosetView& poset, std::int64_t frontier,
                                                     std::int64_t n_max) {
  require_matching_poset(fam, poset);
  StructureReport out{fam.to_string(), poset.name(), frontier, n_max};
  const auto elements = poset.frontier(frontier);
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      ++out.pairs_checked;
      const std::int64_t t = type_of(fam, poset, x, y);
      if ((t != 0) != poset.leq(x, y) || (poset.leq(x, y) && t < 1)) {
        out.typing_violations.emplace_back(x, y);
        continue;
      }
      if (t == 0 || t > n_max) continue;
      ++out.intervals_checked;
      std::map<std::pair<std::int64_t, std::int64_t>, Integer> counts;
      for (const auto& z : interval_elements(poset, x, y))
        counts[{type_of(fam, poset, x, z), type_of(fam, poset, z, y)}] += 1;
      for (std::int64_t d = 1; d <= t; ++d) {
        for (std::int64_t k = 1; k <= t; ++k) {
          ++out.coefficients_checked;
          auto it = counts.find({d, k});
          Integer observed = it == counts.end() ? Integer(0) : it->second;
          Integer expected = structure_coefficient(fam, t, d, k);
          if (observed != expected) out.mismatches.push_back({x, y, d, k, expected, observed});
        }
      }
      for (const auto& [dk, c] : counts)
        if (dk.first < 1 || dk.second < 1 || dk.first > t || dk.second > t)
          out.mismatches.push_back({x, y, dk.first, dk.second, Integer(0), c});
    }
  }
  return out;
}

struct Prop7Report {
  ReducedSequence f;
  std::int64_t N = 0;
  std::int64_t k1 = 0;                 // largest index in supp f
  std::optional<std::int64_t> n0;      // g != 0 on [n0, N]
  std::vector<std::int64_t> zeros;     // n in (k1, N] with g(n) = 0
  Rational ratio;                      // g(N) / C(N-1, k1-1)
  Rational leading;                    // f(k1)
  bool ratio_within_tolerance = false; // |ratio - f(k1)| <= 1/100
  bool pass = false;
};

/// Binomial family: g(n) = sum_k C(n-1, k-1) f(k) for n in (max supp f, N].
/// g eventually never vanishes and g(n)/C(n-1, k1-1) tends to f(k1).
inline Prop7Report prop7_check(const ReducedSequence& f, std::int64_t N) {
  if (f.empty()) throw InputError("the binomial growth check needs a nonzero f");
  Prop7Report out{f, N};
  out.k1 = *f.max_index();
  out.leading = f.at(out.k1);
  if (N <= out.k1) throw InputError("bound N must exceed the largest support index");
  const auto fam = CoefficientFamily::binomial();
  Rational last = 0;
  for (std::int64_t n = out.k1 + 1; n <= N; ++n) {
    Rational g = reduced_zeta_transform(fam, f, n);
    if (g == 0) out.zeros.push_back(n);
    last = g;
  }
  if (last != 0) out.n0 = out.zeros.empty() ? out.k1 + 1 : out.zeros.back() + 1;
  out.ratio = last / Rational(binomial(static_cast<unsigned long>(N - 1),
                                       static_cast<unsigned long>(out.k1 - 1)));
  Rational diff = out.ratio - out.leading;
  out.ratio_within_tolerance = abs(diff) <= Rational(1, 100);
  out.pass = out.n0.has_value() && out.ratio_within_tolerance;
  return out;
}

struct Prop8Report {
  ReducedSequence f;
  int q = 0;
  std::int64_t N = 0;
  QPolynomial polynomial;            // sum_k f(k) P_{k-1}(u)
  bool zero_iff_f_zero = false;
  std::size_t compared = 0;          // n > max supp f where both routes were evaluated
  std::vector<std::int64_t> route_mismatches;
  std::vector<std::int64_t> zeros;   // n in (max supp f, N] with g(n) = 0
  bool zero_count_within_degree = false;
  bool pass = false;
};

/// Subspace family: g(n) = sum_k C(n-1, k-1)_q f(k), computed directly and as
/// the polynomial sum_k f(k) P_{k-1}(u) evaluated at u = q^{n-1}.
inline Prop8Report prop8_check(const ReducedSequence& f, int q, std::int64_t N) {
  detail::require_q(q);
  Prop8Report out{f, q, N};
  for (const auto& [k, v] : f) out.polynomial = out.polynomial + v * pk_polynomial(k - 1, q);
  out.zero_iff_f_zero = out.polynomial.is_zero() == f.empty();
  const std::int64_t start = f.empty() ? 1 : *f.max_index() + 1;
  const auto fam = CoefficientFamily{CoefficientFamily::Kind::QBinomial, q};
  for (std::int64_t n = start; n <= N; ++n) {
    Rational direct = reduced_zeta_transform(fam, f, n);
    Rational via_poly = pk_evaluate(out.polynomial, Rational(pow(Integer(q), static_cast<unsigned long>(n - 1))));
    ++out.compared;
    if (direct != via_poly) out.route_mismatches.push_back(n);
    if (direct == 0) out.zeros.push_back(n);
  }
  if (out.polynomial.is_zero())
    out.zero_count_within_degree = true;  // g vanishes identically, nothing to bound
  else
    out.zero_count_within_degree =
        out.zeros.size() <= static_cast<std::size_t>(out.polynomial.degree());
  out.pass = out.zero_iff_f_zero && out.route_mismatches.empty() && out.zero_count_within_degree;
  return out;
}

struct LinearOrderPair {
  std::int64_t bound = 0;
  ReducedSequence mu;
  ReducedSequence zeta_mu;
  bool both_finite = false;  // supports {1, 2} and {1} on {1..bound}
  bool violates_R = false;
};

/// In the linear-order algebra mu = (1, -1, 0, ...) and zeta * mu = delta:
/// a nonzero Möbius pair with both supports finite.
inline LinearOrderPair linear_order_counterexample(std::int64_t bound = 16) {
  const auto fam = CoefficientFamily::linear_order();
  LinearOrderPair out;
  out.bound = bound;
  out.mu = reduced_mobius(fam, bound);
  for (std::int64_t n = 1; n <= bound; ++n)
    out.zeta_mu.set(n, reduced_convolve(fam, ZetaSequence{}, out.mu, n));
  out.both_finite = out.mu.support() == std::vector<std::int64_t>{1, 2} &&
                    out.zeta_mu.support() == std::vector<std::int64_t>{1};
  out.violates_R = out.both_finite && !out.mu.empty();
  return out;
}

}  // namespace mobius

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/poset_view.hpp"
#include "mobius/rational.hpp"

namespace mobius {

/// A finitely supported function P -> Q, read as an element of the algebra
/// of functions supported on intervals [bottom, x]. Zero values are never
/// stored.
class SupportedFunction {
 public:
  SupportedFunction() = default;
  SupportedFunction(std::initializer_list<std::pair<ElementKey, Rational>> entries) {
    for (const auto& [k, v] : entries) add(k, v);
  }

  void set(const ElementKey& key, const Rational& value) {
    if (value == 0) values_.erase(key);
    else values_[key] = value;
  }

  void add(const ElementKey& key, const Rational& delta) { set(key, at(key) + delta); }

  Rational at(const ElementKey& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? Rational(0) : it->second;
  }
  Rational operator()(const ElementKey& key) const { return at(key); }

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  std::vector<ElementKey> support() const {
    std::vector<ElementKey> out;
    out.reserve(values_.size());
    for (const auto& [k, v] : values_) out.push_back(k);
    return out;
  }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const SupportedFunction&, const SupportedFunction&) = default;

 private:
  std::map<ElementKey, Rational> values_;
};

template <class F>
concept PointFunction = requires(const F& f, const ElementKey& x) {
  { f(x) } -> std::convertible_to<Rational>;
};

template <class F>
concept IntervalFunction = requires(const F& f, const ElementKey& x, const ElementKey& y) {
  { f(x, y) } -> std::convertible_to<Rational>;
};

inline void require_all(const PosetView& poset, const SupportedFunction& f) {
  for (const auto& [k, v] : f) poset.require(k);
}

/// {z : x <= z <= y} in key order; empty when x is not below y.
inline std::vector<ElementKey> interval_elements(const PosetView& poset, const ElementKey& x,
                                                 const ElementKey& y) {
  poset.require(x);
  poset.require(y);
  if (!poset.leq(x, y)) return {};
  std::vector<ElementKey> out;
  for (auto& z : poset.down_set(y))
    if (poset.leq(x, z)) out.push_back(std::move(z));
  return out;
}

enum class MobiusMode { cached, uncached };

namespace detail {

inline Integer mobius_recursive(const PosetView& poset, const ElementKey& x, const ElementKey& y) {
  if (x == y) return 1;
  if (!poset.leq(x, y)) return 0;
  auto& cache = poset.mobius_cache();
  if (auto hit = cache.find(x, y)) return *hit;
  Integer sum = 0;
  for (const auto& z : poset.down_set(y))
    if (z != y && poset.leq(x, z)) sum += mobius_recursive(poset, x, z);
  Integer value = -sum;
  cache.insert(x, y, value);
  return value;
}

// Triangular solve over a linear extension of [x, y]; touches no cache.
inline Integer mobius_triangular(const PosetView& poset, const ElementKey& x, const ElementKey& y) {
  if (!poset.leq(x, y)) return 0;
  std::vector<ElementKey> interval;
  for (auto& z : poset.down_set(y))
    if (poset.leq(x, z)) interval.push_back(std::move(z));
  const std::size_t n = interval.size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.leq(interval[j], interval[i])) ++below[i];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<Integer> mu(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    if (interval[i] == x) {
      mu[i] = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t j = order[b];
      if (poset.leq(interval[j], interval[i])) sum += mu[j];
    }
    mu[i] = -sum;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (interval[i] == y) return mu[i];
  return 0;
}

}  // namespace detail

/// Möbius function of the poset. Cached values live in the view's memo.
inline Integer mobius_value(const PosetView& poset, const ElementKey& x, const ElementKey& y,
                      MobiusMode mode = MobiusMode::cached) {
  poset.require(x);
  poset.require(y);
  if (mode == MobiusMode::uncached) return detail::mobius_triangular(poset, x, y);
  return detail::mobius_recursive(poset, x, y);
}

// Interval functions on comparable pairs.

struct ZetaFunction {
  Rational operator()(const ElementKey&, const ElementKey&) const { return 1; }
};

struct DeltaFunction {
  Rational operator()(const ElementKey& x, const ElementKey& y) const { return x == y ? 1 : 0; }
};

class MobiusIntervalFunction {
 public:
  explicit MobiusIntervalFunction(const PosetView& poset) : poset_(&poset) {}
  Rational operator()(const ElementKey& x, const ElementKey& y) const {
    return Rational(mobius_value(*poset_, x, y));
  }

 private:
  const PosetView* poset_;
};

/// f(x, y) = f(y) on intervals starting at the bottom, 0 elsewhere.
class LiftedFunction {
 public:
  LiftedFunction(const PosetView& poset, const SupportedFunction& f) : f_(&f) {
    auto b = poset.bottom();
    if (!b) throw InputError("poset " + poset.name() + " has no minimum element to lift from");
    bottom_ = *b;
  }
  Rational operator()(const ElementKey& x, const ElementKey& y) const {
    return x == *bottom_ ? f_->at(y) : Rational(0);
  }

 private:
  const SupportedFunction* f_;
  std::optional<ElementKey> bottom_;
};

/// (f * g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y).
template <IntervalFunction F, IntervalFunction G>
Rational convolve_at(const PosetView& poset, const F& f, const G& g, const ElementKey& x,
                     const ElementKey& y) {
  Rational sum = 0;
  for (const auto& z : interval_elements(poset, x, y)) sum += Rational(f(x, z)) * Rational(g(z, y));
  return sum;
}

/// g(x) = sum over z <= x of f(z).
inline Rational zeta_transform(const PosetView& poset, const SupportedFunction& f,
                               const ElementKey& x) {
  poset.require(x);
  require_all(poset, f);
  Rational sum = 0;
  if (f.empty()) return sum;
  for (const auto& z : poset.down_set(x)) sum += f.at(z);
  return sum;
}

/// f(x) = sum over z <= x of mu(z, x) g(z), evaluated pointwise.
template <PointFunction G>
Rational mobius_invert(const PosetView& poset, const G& g, const ElementKey& x) {
  poset.require(x);
  Rational sum = 0;
  for (const auto& z : poset.down_set(x)) {
    Rational gz = g(z);
    if (gz != 0) sum += Rational(mobius_value(poset, z, x)) * gz;
  }
  return sum;
}

inline Rational mobius_invert(const PosetView& poset, const SupportedFunction& g,
                              const ElementKey& x) {
  require_all(poset, g);
  return mobius_invert(poset, [&g](const ElementKey& z) { return g.at(z); }, x);
}

/// {x in frontier(n) : h(x) != 0}, in key order.
template <PointFunction H>
std::vector<ElementKey> support_on_frontier(const PosetView& poset, const H& h, std::int64_t n) {
  std::vector<ElementKey> out;
  for (auto& x : poset.frontier(n))
    if (Rational(h(x)) != 0) out.push_back(std::move(x));
  return out;
}

/// Zeta transform of f on every element of `elements`, computed from the
/// support of f rather than from down-sets. Used by the experiment drivers;
/// agrees pointwise with zeta_transform.
inline std::map<ElementKey, Rational> zeta_transform_on(const PosetView& poset,
                                                        const SupportedFunction& f,
                                                        const std::vector<ElementKey>& elements) {
  require_all(poset, f);
  std::map<ElementKey, Rational> g;
  for (const auto& x : elements) {
    Rational sum = 0;
    for (const auto& [z, v] : f)
      if (poset.leq(z, x)) sum += v;
    if (sum != 0) g.emplace(x, sum);
  }
  return g;
}

}  // namespace mobius

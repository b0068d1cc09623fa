#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/errors.hpp"
#include "mobius/rational.hpp"

namespace mobius {

struct KeyPairHash {
  std::size_t operator()(const std::pair<ElementKey, ElementKey>& p) const {
    return p.first.hash() * 31 + p.second.hash();
  }
};

// Memo table for mu(x, y). Readers share the lock; inserts take it
// exclusively. A nonzero capacity bounds the entry count by flushing the
// table when it fills, which never changes returned values.
class MobiusCache {
 public:
  std::optional<Integer> find(const ElementKey& x, const ElementKey& y) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({x, y});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const ElementKey& x, const ElementKey& y, const Integer& value) {
    std::unique_lock lock(mutex_);
    if (capacity_ != 0 && table_.size() >= capacity_) table_.clear();
    table_.emplace(std::pair{x, y}, value);
  }

  void set_capacity(std::size_t entries) {
    std::unique_lock lock(mutex_);
    capacity_ = entries;
    if (capacity_ != 0 && table_.size() > capacity_) table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<ElementKey, ElementKey>, Integer, KeyPairHash> table_;
  std::size_t capacity_ = 0;
};

/// An explorable locally finite poset.
///
/// `down_set(x)` is the primitive order access: it must return exactly the
/// finite set {z : z <= x}. `frontier(n)` is a finite down-closed truncation,
/// nested in n and exhausting the poset. Both return keys in key order.
/// Views are immutable after construction apart from the Möbius memo cache.
class PosetView {
 public:
  PosetView() = default;
  PosetView(const PosetView&) = delete;
  PosetView& operator=(const PosetView&) = delete;
  virtual ~PosetView() = default;

  /// Canonical family spec string, e.g. "div" or "prod(antichain,div)".
  virtual std::string name() const = 0;
  virtual bool admits(const ElementKey& key) const = 0;
  virtual bool leq(const ElementKey& x, const ElementKey& y) const = 0;
  /// The minimum element, when the poset has one (antichains do not).
  virtual std::optional<ElementKey> bottom() const = 0;
  virtual std::vector<ElementKey> down_set(const ElementKey& x) const = 0;
  virtual std::vector<ElementKey> frontier(std::int64_t n) const = 0;

  /// Parses an element in the context of this poset. Families override this
  /// to accept shorthand (bare `z1`, bare integers, ...).
  virtual ElementKey parse_element(std::string_view text) const {
    ElementKey k = parse_key(text);
    require(k);
    return k;
  }

  void require(const ElementKey& key) const {
    if (!admits(key))
      throw FamilyMismatch("element " + to_string(key) + " does not belong to poset " + name());
  }

  MobiusCache& mobius_cache() const { return cache_; }

 private:
  mutable MobiusCache cache_;
};

}  // namespace mobius

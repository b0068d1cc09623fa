#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/finite_field.hpp"
#include "mobius/poset_view.hpp"
#include "mobius/rref.hpp"

namespace mobius {

namespace detail {

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Accepts the canonical form or a bare integer.
inline ElementKey parse_natural(Family family, std::string_view text) {
  if (!text.empty() && text.find(':') == std::string_view::npos)
    return ElementKey::natural(family, parse_int(text, text));
  return parse_key(text);
}

}  // namespace detail

/// Positive integers ordered by divisibility; frontier(n) = {1..n}.
class DivisibilityPoset final : public PosetView {
 public:
  std::string name() const override { return "div"; }
  bool admits(const ElementKey& k) const override { return k.family() == Family::Divisibility; }
  bool leq(const ElementKey& x, const ElementKey& y) const override {
    return y.value() % x.value() == 0;
  }
  std::optional<ElementKey> bottom() const override { return ElementKey::divisor(1); }
  std::vector<ElementKey> down_set(const ElementKey& x) const override {
    std::vector<ElementKey> out;
    for (auto d : detail::divisors(x.value())) out.push_back(ElementKey::divisor(d));
    return out;
  }
  std::vector<ElementKey> frontier(std::int64_t n) const override {
    std::vector<ElementKey> out;
    for (std::int64_t i = 1; i <= n; ++i) out.push_back(ElementKey::divisor(i));
    return out;
  }
  ElementKey parse_element(std::string_view text) const override {
    ElementKey k = detail::parse_natural(Family::Divisibility, text);
    require(k);
    return k;
  }
};

/// Positive integers, pairwise incomparable. Has no minimum element.
class AntichainPoset final : public PosetView {
 public:
  std::string name() const override { return "antichain"; }
  bool admits(const ElementKey& k) const override { return k.family() == Family::Antichain; }
  bool leq(const ElementKey& x, const ElementKey& y) const override { return x == y; }
  std::optional<ElementKey> bottom() const override { return std::nullopt; }
  std::vector<ElementKey> down_set(const ElementKey& x) const override { return {x}; }
  std::vector<ElementKey> frontier(std::int64_t n) const override {
    std::vector<ElementKey> out;
    for (std::int64_t i = 1; i <= n; ++i) out.push_back(ElementKey::natural(Family::Antichain, i));
    return out;
  }
  ElementKey parse_element(std::string_view text) const override {
    ElementKey k = detail::parse_natural(Family::Antichain, text);
    require(k);
    return k;
  }
};

class LinearOrderPoset final : public PosetView {
 public:
  std::string name() const override { return "linear"; }
  bool admits(const ElementKey& k) const override { return k.family() == Family::LinearOrder; }
  bool leq(const ElementKey& x, const ElementKey& y) const override {
    return x.value() <= y.value();
  }
  std::optional<ElementKey> bottom() const override {
    return ElementKey::natural(Family::LinearOrder, 1);
  }
  std::vector<ElementKey> down_set(const ElementKey& x) const override { return frontier(x.value()); }
  std::vector<ElementKey> frontier(std::int64_t n) const override {
    std::vector<ElementKey> out;
    for (std::int64_t i = 1; i <= n; ++i) out.push_back(ElementKey::natural(Family::LinearOrder, i));
    return out;
  }
  ElementKey parse_element(std::string_view text) const override {
    ElementKey k = detail::parse_natural(Family::LinearOrder, text);
    require(k);
    return k;
  }
};

/// Finite subsets of the positive integers under inclusion;
/// frontier(n) = all subsets of {1..n}.
class FiniteSubsetsPoset final : public PosetView {
 public:
  std::string name() const override { return "subsets"; }
  bool admits(const ElementKey& k) const override { return k.family() == Family::FiniteSubsets; }
  bool leq(const ElementKey& x, const ElementKey& y) const override {
    auto a = x.members();
    auto b = y.members();
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  std::optional<ElementKey> bottom() const override { return ElementKey::subset({}); }
  std::vector<ElementKey> down_set(const ElementKey& x) const override {
    auto m = x.members();
    return all_subsets(std::vector<std::int64_t>(m.begin(), m.end()));
  }
  std::vector<ElementKey> frontier(std::int64_t n) const override {
    if (n > 20) throw InputError("subset frontier " + std::to_string(n) + " is too large (max 20)");
    std::vector<std::int64_t> ground;
    for (std::int64_t i = 1; i <= n; ++i) ground.push_back(i);
    return all_subsets(ground);
  }

 private:
  static std::vector<ElementKey> all_subsets(const std::vector<std::int64_t>& ground) {
    std::vector<ElementKey> out;
    const std::size_t count = std::size_t{1} << ground.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<std::int64_t> s;
      for (std::size_t i = 0; i < ground.size(); ++i)
        if (mask >> i & 1) s.push_back(ground[i]);
      out.push_back(ElementKey::subset(std::move(s)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Finite-dimensional subspaces of GF(q)^infinity under inclusion, keyed by
/// trimmed reduced echelon matrices; frontier(n) = all subspaces of GF(q)^n.
class SubspacePoset final : public PosetView {
 public:
  explicit SubspacePoset(int q) : field_(q) {}

  int q() const { return field_.order(); }
  const FiniteField& field() const { return field_; }

  std::string name() const override { return "subspaces:q=" + std::to_string(q()); }
  bool admits(const ElementKey& k) const override {
    return k.family() == Family::Subspaces && k.subspace_q() == q();
  }
  bool leq(const ElementKey& x, const ElementKey& y) const override {
    if (x.dimension() > y.dimension()) return false;
    const Matrix basis = y.rows();
    for (const auto& row : x.rows())
      if (!in_row_space(field_, basis, row)) return false;
    return true;
  }
  std::optional<ElementKey> bottom() const override { return ElementKey::subspace(field_, {}); }

  std::vector<ElementKey> down_set(const ElementKey& x) const override {
    const Matrix basis = x.rows();
    const int k = x.dimension();
    const std::size_t width = basis.empty() ? 0 : basis[0].size();
    std::vector<ElementKey> out;
    for (int j = 0; j <= k; ++j) {
      for (const auto& coeffs : enumerate_rref(q(), k, j)) {
        Matrix span(coeffs.size(), std::vector<int>(width, 0));
        for (std::size_t r = 0; r < coeffs.size(); ++r)
          for (int i = 0; i < k; ++i) {
            if (coeffs[r][i] == 0) continue;
            for (std::size_t c = 0; c < width; ++c)
              span[r][c] = field_.add(span[r][c], field_.mul(coeffs[r][i], basis[i][c]));
          }
        out.push_back(ElementKey::subspace(field_, std::move(span)));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElementKey> frontier(std::int64_t n) const override {
    if (n > 8) throw InputError("subspace frontier " + std::to_string(n) + " is too large (max 8)");
    std::vector<ElementKey> out;
    for (int k = 0; k <= n; ++k)
      for (auto& m : enumerate_rref(q(), static_cast<int>(n), k))
        out.push_back(ElementKey::subspace(field_, std::move(m)));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  FiniteField field_;
};

/// Componentwise order on a product of two posets.
class ProductPoset final : public PosetView {
 public:
  ProductPoset(std::shared_ptr<const PosetView> first, std::shared_ptr<const PosetView> second)
      : first_(std::move(first)), second_(std::move(second)) {}

  const PosetView& first() const { return *first_; }
  const PosetView& second() const { return *second_; }

  std::string name() const override {
    return "prod(" + first_->name() + "," + second_->name() + ")";
  }
  bool admits(const ElementKey& k) const override {
    if (k.family() != Family::Product) return false;
    auto [a, b] = k.components();
    return first_->admits(a) && second_->admits(b);
  }
  bool leq(const ElementKey& x, const ElementKey& y) const override {
    auto [x1, x2] = x.components();
    auto [y1, y2] = y.components();
    return first_->leq(x1, y1) && second_->leq(x2, y2);
  }
  std::optional<ElementKey> bottom() const override {
    auto a = first_->bottom();
    auto b = second_->bottom();
    if (!a || !b) return std::nullopt;
    return ElementKey::product(*a, *b);
  }
  std::vector<ElementKey> down_set(const ElementKey& x) const override {
    auto [a, b] = x.components();
    return combine(first_->down_set(a), second_->down_set(b));
  }
  std::vector<ElementKey> frontier(std::int64_t n) const override {
    return combine(first_->frontier(n), second_->frontier(n));
  }
  ElementKey parse_element(std::string_view text) const override {
    std::string_view body = text.starts_with("prod:") ? text.substr(5) : text;
    if (body.starts_with("(") && body.ends_with(")")) {
      auto parts = detail::split_top(body.substr(1, body.size() - 2));
      if (parts.size() == 2) {
        ElementKey k = ElementKey::product(first_->parse_element(parts[0]),
                                           second_->parse_element(parts[1]));
        require(k);
        return k;
      }
    }
    return PosetView::parse_element(text);
  }

 private:
  static std::vector<ElementKey> combine(const std::vector<ElementKey>& as,
                                         const std::vector<ElementKey>& bs) {
    std::vector<ElementKey> out;
    out.reserve(as.size() * bs.size());
    for (const auto& a : as)
      for (const auto& b : bs) out.push_back(ElementKey::product(a, b));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::shared_ptr<const PosetView> first_;
  std::shared_ptr<const PosetView> second_;
};

}  // namespace mobius

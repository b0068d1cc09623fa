#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/families.hpp"
#include "mobius/poset_view.hpp"

namespace mobius {

namespace detail {

// Elements of the counterexample posets, by region:
//   u                  bottom, below everything
//   minimal letters    z1, z2 (P) or a, b, c (Q)
//   block (tag, l, d)  a copy of A x D; (l, d) <= (l', d') iff l = l' and d | d'
//   D0 element d >= 2  divisibility, with u playing the role of 1
//
// The two posets differ only in which letters sit below which blocks.
class AttachedPoset : public PosetView {
 public:
  AttachedPoset(Family family, int letters, int copies)
      : family_(family), letters_(letters), copies_(copies) {}

  bool admits(const ElementKey& k) const override {
    if (k.family() != family_) return false;
    auto r = k.region();
    switch (r.region) {
      case Region::Bottom: return r.tag == 0 && r.ell == 0 && r.d == 0;
      case Region::Minimal: return letter_index_valid(r.tag) && r.ell == 0 && r.d == 0;
      case Region::Block: return r.tag >= 0 && r.tag < copies_ && r.ell >= 1 && r.d >= 1;
      case Region::Divisor: return r.tag == 0 && r.ell == 0 && r.d >= 2;
    }
    return false;
  }

  bool leq(const ElementKey& x, const ElementKey& y) const override {
    auto a = x.region();
    auto b = y.region();
    switch (a.region) {
      case Region::Bottom: return true;
      case Region::Minimal:
        if (b.region == Region::Minimal) return a.tag == b.tag;
        return b.region == Region::Block && letter_below_copy(a.tag, b.tag);
      case Region::Block:
        return b.region == Region::Block && a.tag == b.tag && a.ell == b.ell && b.d % a.d == 0;
      case Region::Divisor:
        return b.region == Region::Divisor && b.d % a.d == 0;
    }
    return false;
  }

  std::optional<ElementKey> bottom() const override { return make(Region::Bottom); }

  std::vector<ElementKey> down_set(const ElementKey& x) const override {
    auto r = x.region();
    std::vector<ElementKey> out{make(Region::Bottom)};
    switch (r.region) {
      case Region::Bottom: break;
      case Region::Minimal: out.push_back(x); break;
      case Region::Block:
        for (int t : letters())
          if (letter_below_copy(t, r.tag)) out.push_back(make(Region::Minimal, t));
        for (auto d : divisors(r.d)) out.push_back(make(Region::Block, r.tag, r.ell, d));
        break;
      case Region::Divisor:
        for (auto d : divisors(r.d))
          if (d >= 2) out.push_back(make(Region::Divisor, 0, 0, d));
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// {u} and the letters, the block coordinates (l, d) with l, d <= n in
  /// every copy, and D0 intersected with [2, n].
  std::vector<ElementKey> frontier(std::int64_t n) const override {
    std::vector<ElementKey> out{make(Region::Bottom)};
    for (int t : letters()) out.push_back(make(Region::Minimal, t));
    for (int c = 0; c < copies_; ++c)
      for (std::int64_t ell = 1; ell <= n; ++ell)
        for (std::int64_t d = 1; d <= n; ++d) out.push_back(make(Region::Block, c, ell, d));
    for (std::int64_t d = 2; d <= n; ++d) out.push_back(make(Region::Divisor, 0, 0, d));
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementKey make(Region region, int tag = 0, std::int64_t ell = 0, std::int64_t d = 0) const {
    return ElementKey::special(family_, region, tag, ell, d);
  }

 protected:
  virtual std::vector<int> letters() const = 0;
  virtual bool letter_index_valid(int tag) const = 0;
  virtual bool letter_below_copy(int letter, int copy) const = 0;

  // Shorthand accepted on top of the canonical form: the body without the
  // family prefix, `div:d` for D0, and `prod:(l,d)` for block elements.
  std::optional<ElementKey> parse_shorthand(std::string_view text) const {
    const std::string prefix = std::string(family_prefix(family_)) + ":";
    if (text.starts_with(prefix)) return std::nullopt;
    if (text.starts_with("div:")) return make(Region::Divisor, 0, 0, parse_int(text.substr(4), text));
    try {
      return parse_key(prefix + std::string(text));
    } catch (const InputError&) {
      // A well-formed key of another family is a mismatch, not a syntax error.
      try {
        return parse_key(text);
      } catch (const InputError&) {
      }
      throw;
    }
  }

  Family family_;
  int letters_;
  int copies_;
};

}  // namespace detail

/// Counterexample P: u < z1, z2 < every element of A x D, plus D0 above u.
/// Has property G but not H2.
class CounterexampleP final : public detail::AttachedPoset {
 public:
  CounterexampleP() : AttachedPoset(Family::CounterexampleP, 2, 1) {}

  std::string name() const override { return "counterexample-p"; }

  ElementKey u() const { return make(Region::Bottom); }
  ElementKey z(int index) const { return make(Region::Minimal, index); }
  /// (l, d) in P1 = A x D.
  ElementKey block(std::int64_t ell, std::int64_t d) const { return make(Region::Block, 0, ell, d); }
  ElementKey d0(std::int64_t d) const { return make(Region::Divisor, 0, 0, d); }

  ElementKey parse_element(std::string_view text) const override {
    std::optional<ElementKey> k;
    if (text.starts_with("prod:(")) k = make_block(text.substr(5), text);
    else k = parse_shorthand(text);
    if (!k) k = parse_key(text);
    require(*k);
    return *k;
  }

 protected:
  std::vector<int> letters() const override { return {1, 2}; }
  bool letter_index_valid(int tag) const override { return tag == 1 || tag == 2; }
  bool letter_below_copy(int, int) const override { return true; }

 private:
  ElementKey make_block(std::string_view pair, std::string_view text) const {
    auto [ell, d] = detail::parse_pair(pair, text);
    return block(ell, d);
  }
};

/// Counterexample Q: letters a, b, c above u; copy Q_y of A x D sits above
/// every letter except y. Has property M but not H3.
class CounterexampleQ final : public detail::AttachedPoset {
 public:
  CounterexampleQ() : AttachedPoset(Family::CounterexampleQ, 3, 3) {}

  std::string name() const override { return "counterexample-q"; }

  ElementKey u() const { return make(Region::Bottom); }
  /// Letter 0, 1, 2 for a, b, c.
  ElementKey letter(int index) const { return make(Region::Minimal, index); }
  /// (l, d) in the copy Q_y with y = letter index `copy`.
  ElementKey block(int copy, std::int64_t ell, std::int64_t d) const {
    return make(Region::Block, copy, ell, d);
  }
  ElementKey d0(std::int64_t d) const { return make(Region::Divisor, 0, 0, d); }

  ElementKey parse_element(std::string_view text) const override {
    std::optional<ElementKey> k = parse_shorthand(text);
    if (!k) k = parse_key(text);
    require(*k);
    return *k;
  }

 protected:
  std::vector<int> letters() const override { return {0, 1, 2}; }
  bool letter_index_valid(int tag) const override { return tag >= 0 && tag < 3; }
  bool letter_below_copy(int letter, int copy) const override { return letter != copy; }
};

/// Applies a permutation of {a, b, c} (perm[i] is the image of letter i) to
/// a key of counterexample Q, moving letters and copy tags together.
inline ElementKey relabel_q(const ElementKey& key, const std::array<int, 3>& perm) {
  if (key.family() != Family::CounterexampleQ)
    throw FamilyMismatch("relabeling applies to counterexample Q keys only");
  auto r = key.region();
  if (r.region == Region::Minimal || r.region == Region::Block)
    return ElementKey::special(Family::CounterexampleQ, r.region, perm.at(r.tag), r.ell, r.d);
  return key;
}

}  // namespace mobius

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/finite_field.hpp"
#include "mobius/rref.hpp"

namespace mobius {

enum class Family : std::uint8_t {
  Divisibility,
  Antichain,
  LinearOrder,
  FiniteSubsets,
  Subspaces,
  Product,
  CounterexampleP,
  CounterexampleQ,
  FiniteExplicit,
};

/// Region of a counterexample poset an element belongs to.
enum class Region : std::int64_t {
  Bottom = 0,  // u
  Minimal = 1, // z1, z2 in P; a, b, c in Q
  Block = 2,   // (l, d) in a copy of A x D
  Divisor = 3, // d in D0
};

struct RegionView {
  Region region;
  int tag;           // z-index (1, 2) or letter/copy index (0, 1, 2 for a, b, c)
  std::int64_t ell;  // antichain coordinate of a block element
  std::int64_t d;    // divisor coordinate of a block or D0 element
};

/// Canonical, totally ordered, hashable name of one poset element.
///
/// The payload is a flat integer encoding chosen so that equal keys denote the
/// same element: naturals store the value, subsets store strictly increasing
/// members, subspaces store q and a reduced echelon matrix trimmed of zero
/// columns, products concatenate their length-prefixed components. The key
/// order (family, then payload lexicographically) is for deterministic output
/// only and is unrelated to the poset order.
class ElementKey {
 public:
  static ElementKey natural(Family family, std::int64_t value) {
    if (family != Family::Divisibility && family != Family::Antichain &&
        family != Family::LinearOrder)
      throw InputError("natural keys exist only for div, anti and lin");
    if (value < 1) throw InputError("natural key must be positive, got " + std::to_string(value));
    return ElementKey(family, {value});
  }

  static ElementKey divisor(std::int64_t n) { return natural(Family::Divisibility, n); }

  static ElementKey subset(std::vector<std::int64_t> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw InputError("subset key has a repeated member");
    if (!members.empty() && members.front() < 1)
      throw InputError("subset members must be positive");
    return ElementKey(Family::FiniteSubsets, std::move(members));
  }

  /// Any spanning matrix is accepted; it is reduced and trimmed here.
  static ElementKey subspace(const FiniteField& field, Matrix rows) {
    for (const auto& r : rows)
      for (int v : r)
        if (v < 0 || v >= field.order())
          throw InputError("subspace entry " + std::to_string(v) + " outside GF(" +
                           std::to_string(field.order()) + ")");
    Matrix m = trim_columns(rref(field, std::move(rows)));
    std::vector<std::int64_t> data{field.order(), static_cast<std::int64_t>(m.size()),
                                   m.empty() ? 0 : static_cast<std::int64_t>(m[0].size())};
    for (const auto& r : m) data.insert(data.end(), r.begin(), r.end());
    return ElementKey(Family::Subspaces, std::move(data));
  }

  static ElementKey product(const ElementKey& first, const ElementKey& second) {
    std::vector<std::int64_t> data;
    for (const ElementKey* k : {&first, &second}) {
      data.push_back(static_cast<std::int64_t>(k->family_));
      data.push_back(static_cast<std::int64_t>(k->data_.size()));
      data.insert(data.end(), k->data_.begin(), k->data_.end());
    }
    return ElementKey(Family::Product, std::move(data));
  }

  static ElementKey special(Family family, Region region, int tag = 0, std::int64_t ell = 0,
                            std::int64_t d = 0) {
    if (family != Family::CounterexampleP && family != Family::CounterexampleQ)
      throw InputError("region keys exist only for the counterexample posets");
    return ElementKey(family, {static_cast<std::int64_t>(region), tag, ell, d});
  }

  static ElementKey finite(std::string_view label) {
    std::vector<std::int64_t> data(label.begin(), label.end());
    return ElementKey(Family::FiniteExplicit, std::move(data));
  }

  Family family() const { return family_; }
  std::span<const std::int64_t> payload() const { return data_; }

  std::int64_t value() const { return data_.at(0); }

  std::span<const std::int64_t> members() const { return data_; }

  int subspace_q() const { return static_cast<int>(data_.at(0)); }
  int dimension() const { return static_cast<int>(data_.at(1)); }
  Matrix rows() const {
    const auto k = static_cast<std::size_t>(data_.at(1));
    const auto w = static_cast<std::size_t>(data_.at(2));
    Matrix m(k, std::vector<int>(w));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < w; ++j) m[i][j] = static_cast<int>(data_[3 + i * w + j]);
    return m;
  }

  std::pair<ElementKey, ElementKey> components() const {
    std::size_t pos = 0;
    auto take = [&] {
      auto fam = static_cast<Family>(data_.at(pos));
      auto len = static_cast<std::size_t>(data_.at(pos + 1));
      std::vector<std::int64_t> d(data_.begin() + static_cast<std::ptrdiff_t>(pos + 2),
                                  data_.begin() + static_cast<std::ptrdiff_t>(pos + 2 + len));
      pos += 2 + len;
      return ElementKey(fam, std::move(d));
    };
    ElementKey a = take();
    ElementKey b = take();
    return {std::move(a), std::move(b)};
  }

  RegionView region() const {
    return {static_cast<Region>(data_.at(0)), static_cast<int>(data_.at(1)), data_.at(2),
            data_.at(3)};
  }

  std::string label() const { return std::string(data_.begin(), data_.end()); }

  friend bool operator==(const ElementKey&, const ElementKey&) = default;
  friend std::strong_ordering operator<=>(const ElementKey& a, const ElementKey& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(),
                                                  b.data_.begin(), b.data_.end());
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(family_) * 0x9e3779b97f4a7c15ULL;
    for (std::int64_t v : data_)
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  ElementKey(Family family, std::vector<std::int64_t> data)
      : family_(family), data_(std::move(data)) {}

  Family family_;
  std::vector<std::int64_t> data_;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const { return k.hash(); }
};

inline const char* family_prefix(Family f) {
  switch (f) {
    case Family::Divisibility: return "div";
    case Family::Antichain: return "anti";
    case Family::LinearOrder: return "lin";
    case Family::FiniteSubsets: return "set";
    case Family::Subspaces: return "sub";
    case Family::Product: return "prod";
    case Family::CounterexampleP: return "P";
    case Family::CounterexampleQ: return "Q";
    case Family::FiniteExplicit: return "fin";
  }
  return "?";
}

inline std::string letter_name(int tag) { return std::string(1, static_cast<char>('a' + tag)); }

inline std::string to_string(const ElementKey& key) {
  std::string out = family_prefix(key.family());
  out += ':';
  switch (key.family()) {
    case Family::Divisibility:
    case Family::Antichain:
    case Family::LinearOrder:
      out += std::to_string(key.value());
      break;
    case Family::FiniteSubsets: {
      out += '{';
      bool first = true;
      for (auto m : key.members()) {
        if (!first) out += ',';
        out += std::to_string(m);
        first = false;
      }
      out += '}';
      break;
    }
    case Family::Subspaces: {
      out += "q=" + std::to_string(key.subspace_q()) + ";rref=[";
      bool first_row = true;
      for (const auto& r : key.rows()) {
        if (!first_row) out += ',';
        out += '[';
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (j) out += ',';
          out += std::to_string(r[j]);
        }
        out += ']';
        first_row = false;
      }
      out += ']';
      break;
    }
    case Family::Product: {
      auto [a, b] = key.components();
      out += '(' + to_string(a) + ',' + to_string(b) + ')';
      break;
    }
    case Family::CounterexampleP:
    case Family::CounterexampleQ: {
      const bool is_p = key.family() == Family::CounterexampleP;
      auto r = key.region();
      switch (r.region) {
        case Region::Bottom: out += 'u'; break;
        case Region::Minimal: out += is_p ? "z" + std::to_string(r.tag) : letter_name(r.tag); break;
        case Region::Block:
          if (!is_p) out += "Q" + letter_name(r.tag) + ':';
          out += '(' + std::to_string(r.ell) + ',' + std::to_string(r.d) + ')';
          break;
        case Region::Divisor: out += "D0:" + std::to_string(r.d); break;
      }
      break;
    }
    case Family::FiniteExplicit:
      out += key.label();
      break;
  }
  return out;
}

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view context) {
  if (s.empty()) throw InputError("expected an integer in '" + std::string(context) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == s.size()) throw InputError("expected an integer in '" + std::string(context) + "'");
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw InputError("expected an integer, got '" + std::string(s) + "' in '" +
                       std::string(context) + "'");
    if (v > (INT64_MAX - (s[i] - '0')) / 10)
      throw InputError("integer overflow in '" + std::string(context) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

/// Splits on commas that sit at bracket depth zero.
inline std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') --depth;
    else if (c == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

inline std::string_view strip(std::string_view s, char open, char close, std::string_view context) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw InputError(std::string("expected ") + open + "..." + close + " in '" +
                     std::string(context) + "'");
  return s.substr(1, s.size() - 2);
}

inline std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view s,
                                                        std::string_view context) {
  auto parts = split_top(strip(s, '(', ')', context));
  if (parts.size() != 2) throw InputError("expected a pair (l,d) in '" + std::string(context) + "'");
  return {parse_int(parts[0], context), parse_int(parts[1], context)};
}

inline bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '{' || c == '}' || c == '(' || c == ')' || c == ',';
    if (!ok) return false;
  }
  return true;
}

inline ElementKey parse_region(Family family, std::string_view body, std::string_view text) {
  const bool is_p = family == Family::CounterexampleP;
  if (body == "u") return ElementKey::special(family, Region::Bottom);
  if (is_p && (body == "z1" || body == "z2"))
    return ElementKey::special(family, Region::Minimal, body[1] - '0');
  if (!is_p && body.size() == 1 && body[0] >= 'a' && body[0] <= 'c')
    return ElementKey::special(family, Region::Minimal, body[0] - 'a');
  if (body.starts_with("D0:")) {
    auto d = parse_int(body.substr(3), text);
    if (d < 2) throw InputError("D0 elements are integers >= 2 in '" + std::string(text) + "'");
    return ElementKey::special(family, Region::Divisor, 0, 0, d);
  }
  int tag = 0;
  std::string_view block = body;
  if (!is_p) {
    if (body.size() < 4 || body[0] != 'Q' || body[1] < 'a' || body[1] > 'c' || body[2] != ':')
      throw InputError("unknown element '" + std::string(text) + "' of counterexample Q");
    tag = body[1] - 'a';
    block = body.substr(3);
  }
  if (!block.starts_with("("))
    throw InputError("unknown element '" + std::string(text) + "' of counterexample " +
                     (is_p ? "P" : "Q"));
  auto [ell, d] = parse_pair(block, text);
  if (ell < 1 || d < 1)
    throw InputError("block coordinates must be positive in '" + std::string(text) + "'");
  return ElementKey::special(family, Region::Block, tag, ell, d);
}

}  // namespace detail

/// Parses the canonical textual form produced by to_string. Subset members
/// may be given in any order and subspace matrices need not be reduced; the
/// result is canonical either way.
inline ElementKey parse_key(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InputError("element key '" + std::string(text) + "' lacks a family prefix");
  std::string_view prefix = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  if (prefix == "div") return ElementKey::natural(Family::Divisibility, detail::parse_int(body, text));
  if (prefix == "anti") return ElementKey::natural(Family::Antichain, detail::parse_int(body, text));
  if (prefix == "lin") return ElementKey::natural(Family::LinearOrder, detail::parse_int(body, text));
  if (prefix == "set") {
    auto inner = detail::strip(body, '{', '}', text);
    std::vector<std::int64_t> members;
    if (!inner.empty())
      for (auto part : detail::split_top(inner)) members.push_back(detail::parse_int(part, text));
    return ElementKey::subset(std::move(members));
  }
  if (prefix == "sub") {
    if (!body.starts_with("q=")) throw InputError("subspace key needs q=: '" + std::string(text) + "'");
    auto semi = body.find(';');
    if (semi == std::string_view::npos || !body.substr(semi + 1).starts_with("rref="))
      throw InputError("subspace key needs ;rref=: '" + std::string(text) + "'");
    auto q = detail::parse_int(body.substr(2, semi - 2), text);
    require_prime_power(q);
    auto inner = detail::strip(body.substr(semi + 6), '[', ']', text);
    Matrix rows;
    if (!inner.empty()) {
      for (auto row_text : detail::split_top(inner)) {
        auto row_inner = detail::strip(row_text, '[', ']', text);
        std::vector<int> row;
        if (!row_inner.empty())
          for (auto v : detail::split_top(row_inner))
            row.push_back(static_cast<int>(detail::parse_int(v, text)));
        rows.push_back(std::move(row));
      }
    }
    return ElementKey::subspace(FiniteField(static_cast<int>(q)), std::move(rows));
  }
  if (prefix == "prod") {
    auto parts = detail::split_top(detail::strip(body, '(', ')', text));
    if (parts.size() != 2) throw InputError("product key needs two components: '" + std::string(text) + "'");
    return ElementKey::product(parse_key(parts[0]), parse_key(parts[1]));
  }
  if (prefix == "P") return detail::parse_region(Family::CounterexampleP, body, text);
  if (prefix == "Q") return detail::parse_region(Family::CounterexampleQ, body, text);
  if (prefix == "fin") {
    if (!detail::valid_label(body)) throw InputError("invalid finite-poset label '" + std::string(body) + "'");
    return ElementKey::finite(body);
  }
  throw InputError("unknown element family prefix '" + std::string(prefix) + "'");
}

}  // namespace mobius

template <>
struct std::hash<mobius::ElementKey> {
  std::size_t operator()(const mobius::ElementKey& k) const { return k.hash(); }
};

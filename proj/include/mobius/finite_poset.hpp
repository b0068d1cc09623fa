#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/errors.hpp"
#include "mobius/poset_view.hpp"

namespace mobius {

/// Parsed contents of a `poset v1` file, before closure.
struct FinitePosetFile {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  std::string bottom;
};

/// Line-oriented format:
///
///     poset v1
///     elem <label>
///     rel <lower> <upper>
///     bottom <label>
///
/// Blank lines and lines starting with '#' are ignored.
inline FinitePosetFile parse_finite_poset(std::string_view text) {
  FinitePosetFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  bool have_bottom = false;
  auto fail = [&](const std::string& msg) {
    throw InputError("poset file line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "poset" || tok[1] != "v1") fail("expected header 'poset v1'");
      header = true;
      continue;
    }
    auto check_label = [&](const std::string& label) {
      if (!detail::valid_label(label)) fail("invalid label '" + label + "'");
    };
    if (tok[0] == "elem") {
      if (tok.size() != 2) fail("expected 'elem <label>'");
      check_label(tok[1]);
      out.elements.push_back(tok[1]);
    } else if (tok[0] == "rel") {
      if (tok.size() != 3) fail("expected 'rel <label> <label>'");
      check_label(tok[1]);
      check_label(tok[2]);
      out.relations.emplace_back(tok[1], tok[2]);
    } else if (tok[0] == "bottom") {
      if (tok.size() != 2) fail("expected 'bottom <label>'");
      if (have_bottom) fail("bottom given twice");
      check_label(tok[1]);
      out.bottom = tok[1];
      have_bottom = true;
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (!header) throw InputError("poset file is empty (missing 'poset v1' header)");
  if (!have_bottom) throw InputError("poset file has no 'bottom' line");
  return out;
}

inline std::string write_finite_poset(const FinitePosetFile& file) {
  std::string out = "poset v1\n";
  for (const auto& e : file.elements) out += "elem " + e + "\n";
  for (const auto& [a, b] : file.relations) out += "rel " + a + " " + b + "\n";
  out += "bottom " + file.bottom + "\n";
  return out;
}

/// A user-supplied finite poset. Relations are closed transitively on load;
/// the frontier is the whole poset at every rank bound.
class FinitePoset final : public PosetView {
 public:
  FinitePoset(const FinitePosetFile& file, std::string source)
      : source_(std::move(source)), labels_(file.elements) {
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (!index_.emplace(labels_[i], i).second)
        throw InputError("duplicate element label '" + labels_[i] + "'");
    auto lookup = [&](const std::string& label) {
      auto it = index_.find(label);
      if (it == index_.end()) throw InputError("relation mentions unknown element '" + label + "'");
      return it->second;
    };
    leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = 1;
    for (const auto& [a, b] : file.relations) leq_[lookup(a)][lookup(b)] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k][j]) leq_[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq_[i][j] && leq_[j][i])
          throw InputError("relations are not a partial order: " + labels_[i] + " <= " +
                           labels_[j] + " and " + labels_[j] + " <= " + labels_[i]);
    auto it = index_.find(file.bottom);
    if (it == index_.end()) throw InputError("bottom '" + file.bottom + "' is not an element");
    bottom_ = it->second;
    for (std::size_t i = 0; i < n; ++i)
      if (!leq_[bottom_][i])
        throw InputError("bottom " + file.bottom + " is not below element " + labels_[i]);
  }

  static std::shared_ptr<const FinitePoset> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open poset file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return std::make_shared<const FinitePoset>(parse_finite_poset(buf.str()), path);
  }

  std::string name() const override { return "file:" + source_; }
  bool admits(const ElementKey& k) const override {
    return k.family() == Family::FiniteExplicit && index_.contains(k.label());
  }
  bool leq(const ElementKey& x, const ElementKey& y) const override {
    return leq_[index_.at(x.label())][index_.at(y.label())];
  }
  std::optional<ElementKey> bottom() const override { return ElementKey::finite(labels_[bottom_]); }
  std::vector<ElementKey> down_set(const ElementKey& x) const override {
    const std::size_t j = index_.at(x.label());
    std::vector<ElementKey> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (leq_[i][j]) out.push_back(ElementKey::finite(labels_[i]));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<ElementKey> frontier(std::int64_t) const override {
    std::vector<ElementKey> out;
    for (const auto& l : labels_) out.push_back(ElementKey::finite(l));
    std::sort(out.begin(), out.end());
    return out;
  }
  ElementKey parse_element(std::string_view text) const override {
    ElementKey k = text.starts_with("fin:") ? parse_key(text) : ElementKey::finite(text);
    require(k);
    return k;
  }

  std::size_t size() const { return labels_.size(); }

 private:
  std::string source_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<char>> leq_;
  std::size_t bottom_ = 0;
};

}  // namespace mobius

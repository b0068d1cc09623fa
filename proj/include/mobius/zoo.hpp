#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/counterexamples.hpp"
#include "mobius/element_key.hpp"
#include "mobius/families.hpp"
#include "mobius/finite_field.hpp"
#include "mobius/finite_poset.hpp"
#include "mobius/poset_view.hpp"

namespace mobius {

/// Which poset to build. Spelled on the command line as
///   div | antichain | linear | subsets | subspaces:q=Q
///   prod(SPEC,SPEC) | counterexample-p | counterexample-q | file:PATH
struct FamilySpec {
  Family kind = Family::Divisibility;
  int q = 0;
  std::vector<FamilySpec> components;
  std::string file;

  static FamilySpec subspaces(int q) { return {Family::Subspaces, q, {}, {}}; }
  static FamilySpec product(FamilySpec a, FamilySpec b) {
    return {Family::Product, 0, {std::move(a), std::move(b)}, {}};
  }
  static FamilySpec finite(std::string path) { return {Family::FiniteExplicit, 0, {}, std::move(path)}; }

  std::string to_string() const {
    switch (kind) {
      case Family::Divisibility: return "div";
      case Family::Antichain: return "antichain";
      case Family::LinearOrder: return "linear";
      case Family::FiniteSubsets: return "subsets";
      case Family::Subspaces: return "subspaces:q=" + std::to_string(q);
      case Family::Product:
        return "prod(" + components.at(0).to_string() + "," + components.at(1).to_string() + ")";
      case Family::CounterexampleP: return "counterexample-p";
      case Family::CounterexampleQ: return "counterexample-q";
      case Family::FiniteExplicit: return "file:" + file;
    }
    return "?";
  }

  void validate() const {
    if (kind == Family::Subspaces) {
      require_prime_power(q);
      if (q > FiniteField::kMaxOrder) throw InputError("q = " + std::to_string(q) + " is too large");
    }
    if (kind == Family::Product) {
      if (components.size() != 2) throw InputError("a product needs exactly two components");
      for (const auto& c : components) c.validate();
    }
    if (kind == Family::FiniteExplicit && file.empty()) throw InputError("file spec without a path");
  }
};

/// `default_q` fills in a bare "subspaces" (the CLI's --q flag).
inline FamilySpec parse_family_spec(std::string_view text, std::optional<int> default_q = std::nullopt) {
  if (text == "div" || text == "divisibility") return {Family::Divisibility};
  if (text == "antichain" || text == "anti") return {Family::Antichain};
  if (text == "linear" || text == "lin" || text == "linear-order") return {Family::LinearOrder};
  if (text == "subsets" || text == "set") return {Family::FiniteSubsets};
  if (text == "counterexample-p" || text == "P") return {Family::CounterexampleP};
  if (text == "counterexample-q" || text == "Q") return {Family::CounterexampleQ};
  if (text == "subspaces" || text == "sub") {
    if (!default_q) throw InputError("subspaces needs q (write subspaces:q=Q or pass --q)");
    FamilySpec s = FamilySpec::subspaces(*default_q);
    s.validate();
    return s;
  }
  if (text.starts_with("subspaces:q=")) {
    FamilySpec s = FamilySpec::subspaces(static_cast<int>(detail::parse_int(text.substr(12), text)));
    s.validate();
    return s;
  }
  if (text.starts_with("prod(") && text.ends_with(")")) {
    auto parts = detail::split_top(text.substr(5, text.size() - 6));
    if (parts.size() != 2) throw InputError("product spec needs two components: '" + std::string(text) + "'");
    return FamilySpec::product(parse_family_spec(parts[0], default_q),
                               parse_family_spec(parts[1], default_q));
  }
  if (text.starts_with("file:")) return FamilySpec::finite(std::string(text.substr(5)));
  throw InputError("unknown poset family '" + std::string(text) + "'");
}

inline std::shared_ptr<const PosetView> build(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case Family::Divisibility: return std::make_shared<const DivisibilityPoset>();
    case Family::Antichain: return std::make_shared<const AntichainPoset>();
    case Family::LinearOrder: return std::make_shared<const LinearOrderPoset>();
    case Family::FiniteSubsets: return std::make_shared<const FiniteSubsetsPoset>();
    case Family::Subspaces: return std::make_shared<const SubspacePoset>(spec.q);
    case Family::Product:
      return std::make_shared<const ProductPoset>(build(spec.components[0]), build(spec.components[1]));
    case Family::CounterexampleP: return std::make_shared<const CounterexampleP>();
    case Family::CounterexampleQ: return std::make_shared<const CounterexampleQ>();
    case Family::FiniteExplicit: return FinitePoset::load(spec.file);
  }
  throw InputError("unknown family");
}

inline std::vector<ElementKey> frontier_policy(const FamilySpec& spec, std::int64_t n) {
  if (n < 0) throw InputError("frontier bound must be nonnegative");
  return build(spec)->frontier(n);
}

struct ZooEntry {
  std::string spec;
  std::string description;
  std::string frontier;
};

inline std::vector<ZooEntry> zoo_entries() {
  return {
      {"div", "positive integers under divisibility", "{1..n}"},
      {"antichain", "positive integers, pairwise incomparable (no minimum)", "{1..n}"},
      {"linear", "positive integers under the usual order", "{1..n}"},
      {"subsets", "finite subsets of the positive integers under inclusion", "subsets of {1..n}"},
      {"subspaces:q=Q", "finite-dimensional subspaces of GF(Q)^inf, Q a prime power",
       "subspaces of GF(Q)^n"},
      {"prod(A,B)", "componentwise product of two families", "product of frontiers"},
      {"counterexample-p", "u < z1, z2 < A x D, plus D0 above u: has G, lacks H2",
       "u, z1, z2, (l,d) with l,d <= n, D0 in [2,n]"},
      {"counterexample-q", "u < a, b, c; Q_y above every letter but y; plus D0: has M, lacks H3",
       "u, a, b, c, three copies of (l,d) with l,d <= n, D0 in [2,n]"},
      {"file:PATH", "finite poset from a 'poset v1' file", "all elements"},
  };
}

}  // namespace mobius

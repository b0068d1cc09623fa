#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "mobius/mobius.hpp"
#include "oracles.hpp"

using namespace mobius;

namespace {

// Reflexive, antisymmetric and transitive on the given elements.
void expect_partial_order(const PosetView& p, const std::vector<ElementKey>& els) {
  for (const auto& x : els) {
    ASSERT_TRUE(p.leq(x, x)) << to_string(x);
    for (const auto& y : els) {
      if (x != y && p.leq(x, y)) { ASSERT_FALSE(p.leq(y, x)) << to_string(x) << " " << to_string(y); }
      if (!p.leq(x, y)) continue;
      for (const auto& z : els)
        if (p.leq(y, z)) { ASSERT_TRUE(p.leq(x, z)) << to_string(x) << " " << to_string(z); }
    }
  }
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("mobius_zoo_" + name + ".poset");
  std::ofstream(path) << text;
  return path.string();
}

std::string load_error(const std::string& text) {
  try {
    FinitePoset p(parse_finite_poset(text), "inline");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Families, AreLocallyPartialOrders) {
  for (const char* spec : {"div", "antichain", "linear", "subsets", "subspaces:q=2", "subspaces:q=3",
                           "prod(antichain,div)", "prod(div,linear)", "counterexample-p",
                           "counterexample-q"}) {
    SCOPED_TRACE(spec);
    auto fs = parse_family_spec(spec);
    auto p = build(fs);
    const std::int64_t n = fs.kind == Family::Subspaces ? 2 : 4;
    expect_partial_order(*p, p->frontier(n));
  }
}

TEST(Families, BottomIsBelowTheFrontier) {
  for (const char* spec : {"div", "linear", "subsets", "subspaces:q=2", "prod(div,subsets)",
                           "counterexample-p", "counterexample-q"}) {
    auto p = build(parse_family_spec(spec));
    auto b = p->bottom();
    ASSERT_TRUE(b) << spec;
    for (const auto& x : p->frontier(3)) EXPECT_TRUE(p->leq(*b, x)) << spec << " " << to_string(x);
  }
  EXPECT_FALSE(AntichainPoset{}.bottom());
  EXPECT_FALSE(build(parse_family_spec("prod(antichain,div)"))->bottom());
}

TEST(Families, SubsetInclusion) {
  FiniteSubsetsPoset s;
  EXPECT_TRUE(s.leq(ElementKey::subset({1}), ElementKey::subset({1, 3})));
  EXPECT_FALSE(s.leq(ElementKey::subset({2}), ElementKey::subset({1, 3})));
  EXPECT_EQ(s.frontier(2).size(), 4u);
  EXPECT_EQ(s.down_set(ElementKey::subset({1, 2, 5})).size(), 8u);
}

TEST(Families, OneDimensionalSubspacesOfF2Cubed) {
  FiniteField f(2);
  auto lines = enumerate_rref(2, 3, 1);
  EXPECT_EQ(lines.size(), 7u);
  // Brute force: nonzero vectors up to scalars.
  std::set<ElementKey> seen;
  for (int v = 1; v < 8; ++v) seen.insert(ElementKey::subspace(f, {{v & 1, (v >> 1) & 1, (v >> 2) & 1}}));
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(Integer(seen.size()), oracle::count_subspaces(3, 1, 2));
}

TEST(Families, SubspaceCountsMatchOracle) {
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        if (p == 5 && n == 4) continue;
        EXPECT_EQ(Integer(enumerate_rref(p, n, k).size()), oracle::count_subspaces(n, k, p))
            << "p=" << p << " n=" << n << " k=" << k;
      }
}

TEST(Families, SubspaceInclusion) {
  SubspacePoset s(2);
  auto line = s.parse_element("sub:q=2;rref=[[1,1,0]]");
  auto plane = s.parse_element("sub:q=2;rref=[[1,0,1],[0,1,1]]");
  auto other = s.parse_element("sub:q=2;rref=[[1,0,0]]");
  EXPECT_TRUE(s.leq(line, plane));
  EXPECT_FALSE(s.leq(other, plane));
  EXPECT_FALSE(s.leq(plane, line));
  // [0, plane] in GF(2)^3: 1 + 3 + 1 subspaces.
  EXPECT_EQ(s.down_set(plane).size(), 5u);
  EXPECT_THROW(SubspacePoset(6), InputError);
  EXPECT_THROW(s.parse_element("sub:q=3;rref=[[1]]"), FamilyMismatch);
}

TEST(Families, ProductOrderIsComponentwise) {
  auto p = build(parse_family_spec("prod(antichain,div)"));
  EXPECT_TRUE(p->leq(p->parse_element("(anti:3,div:2)"), p->parse_element("(anti:3,div:6)")));
  EXPECT_FALSE(p->leq(p->parse_element("(anti:3,div:2)"), p->parse_element("(anti:4,div:6)")));
  EXPECT_EQ(p->frontier(3).size(), 9u);
}

TEST(CounterexampleP, Order) {
  CounterexampleP p;
  EXPECT_TRUE(p.leq(p.u(), p.z(1)));
  EXPECT_FALSE(p.leq(p.z(1), p.z(2)));
  EXPECT_FALSE(p.leq(p.z(2), p.z(1)));
  EXPECT_FALSE(p.leq(p.z(1), p.d0(6)));
  EXPECT_TRUE(p.leq(p.u(), p.d0(6)));
  EXPECT_TRUE(p.leq(p.z(2), p.block(7, 3)));
  EXPECT_TRUE(p.leq(p.block(7, 3), p.block(7, 12)));
  EXPECT_FALSE(p.leq(p.block(7, 3), p.block(8, 12)));
  EXPECT_TRUE(interval_elements(p, p.z(1), p.block(5, 1)).size() == 2u);
  EXPECT_EQ(p.parse_element("z1"), p.z(1));
  EXPECT_EQ(p.parse_element("prod:(7,1)"), p.block(7, 1));
  EXPECT_EQ(p.parse_element("(7,1)"), p.block(7, 1));
  EXPECT_EQ(p.parse_element("div:6"), p.d0(6));
  EXPECT_EQ(p.parse_element("D0:6"), p.d0(6));
  EXPECT_EQ(p.parse_element("P:D0:6"), p.d0(6));
  EXPECT_THROW(p.parse_element("D0:1"), InputError);
  EXPECT_THROW(p.parse_element("Q:a"), FamilyMismatch);
}

TEST(CounterexampleP, DivisorPartIsIsomorphicToDivisibility) {
  CounterexampleP p;
  DivisibilityPoset d;
  auto lift = [&](std::int64_t n) { return n == 1 ? p.u() : p.d0(n); };
  for (std::int64_t a = 1; a <= 30; ++a)
    for (std::int64_t b = 1; b <= 30; ++b) {
      ASSERT_EQ(p.leq(lift(a), lift(b)), d.leq(ElementKey::divisor(a), ElementKey::divisor(b)));
      ASSERT_EQ(mobius_value(p, lift(a), lift(b)),
                mobius_value(d, ElementKey::divisor(a), ElementKey::divisor(b)));
    }
}

TEST(CounterexampleQ, Order) {
  CounterexampleQ q;
  EXPECT_TRUE(q.leq(q.letter(0), q.block(1, 2, 3)));   // a below Q_b
  EXPECT_FALSE(q.leq(q.letter(0), q.block(0, 2, 3)));  // a not below Q_a
  EXPECT_TRUE(q.leq(q.u(), q.letter(2)));
  EXPECT_FALSE(q.leq(q.block(0, 1, 1), q.block(1, 1, 1)));
  EXPECT_EQ(q.parse_element("a"), q.letter(0));
  EXPECT_EQ(q.parse_element("Qa:(7,1)"), q.block(0, 7, 1));
  EXPECT_EQ(q.parse_element("D0:6"), q.d0(6));
  EXPECT_EQ(q.frontier(2).size(), 1u + 3u + 3u * 4u + 1u);
}

TEST(CounterexampleQ, RelabelIsAnAutomorphism) {
  CounterexampleQ q;
  const auto els = q.frontier(3);
  for (auto perm : {std::array{1, 0, 2}, std::array{2, 0, 1}, std::array{0, 2, 1}})
    for (const auto& x : els)
      for (const auto& y : els)
        ASSERT_EQ(q.leq(x, y), q.leq(relabel_q(x, perm), relabel_q(y, perm)));
}

TEST(Frontier, PolicyExamples) {
  EXPECT_EQ(frontier_policy(parse_family_spec("div"), 6).size(), 6u);
  EXPECT_EQ(frontier_policy(parse_family_spec("subsets"), 2).size(), 4u);
  EXPECT_EQ(frontier_policy(parse_family_spec("subspaces:q=2"), 2).size(), 5u);
  EXPECT_EQ(frontier_policy(parse_family_spec("subspaces", 3), 2).size(), 6u);
  EXPECT_THROW(frontier_policy(parse_family_spec("div"), -1), InputError);
}

TEST(Frontier, NestedAndDownClosed) {
  for (const char* spec : {"div", "linear", "subsets", "subspaces:q=2", "prod(div,linear)",
                           "counterexample-p", "counterexample-q"}) {
    SCOPED_TRACE(spec);
    auto p = build(parse_family_spec(spec));
    for (std::int64_t n = 0; n < 4; ++n) {
      auto small = p->frontier(n), large = p->frontier(n + 1);
      std::set<ElementKey> big(large.begin(), large.end()), here(small.begin(), small.end());
      for (const auto& x : small) ASSERT_TRUE(big.count(x)) << to_string(x);
      for (const auto& x : small)
        for (const auto& z : p->down_set(x)) ASSERT_TRUE(here.count(z)) << to_string(z);
    }
  }
}

TEST(FamilySpec, ParseAndPrint) {
  EXPECT_EQ(parse_family_spec("prod(anti,subspaces:q=4)").to_string(), "prod(antichain,subspaces:q=4)");
  EXPECT_EQ(parse_family_spec("P").to_string(), "counterexample-p");
  EXPECT_THROW(parse_family_spec("subspaces:q=6"), InputError);
  EXPECT_THROW(parse_family_spec("subspaces:q=1"), InputError);
  EXPECT_THROW(parse_family_spec("subspaces"), InputError);
  EXPECT_THROW(parse_family_spec("prod(div)"), InputError);
  EXPECT_THROW(parse_family_spec("lattice"), InputError);
  EXPECT_FALSE(zoo_entries().empty());
}

TEST(FinitePoset, LoadsAndClosesTransitively) {
  const std::string text =
      "poset v1\n# a chain with a side branch\nelem 0\nelem a\nelem b\nelem c\n"
      "rel 0 a\nrel a b\nrel 0 c\nbottom 0\n";
  auto path = write_temp("chain", text);
  auto p = build(parse_family_spec("file:" + path));
  EXPECT_EQ(p->name(), "file:" + path);
  EXPECT_TRUE(p->leq(p->parse_element("0"), p->parse_element("b")));
  EXPECT_FALSE(p->leq(p->parse_element("c"), p->parse_element("b")));
  EXPECT_EQ(p->frontier(0).size(), 4u);
  EXPECT_EQ(mobius_value(*p, p->parse_element("0"), p->parse_element("b")), 0);
  EXPECT_EQ(mobius_value(*p, p->parse_element("a"), p->parse_element("b")), -1);
  auto round = parse_finite_poset(write_finite_poset(parse_finite_poset(text)));
  EXPECT_EQ(round.elements.size(), 4u);
  EXPECT_EQ(round.relations.size(), 3u);
  EXPECT_EQ(round.bottom, "0");
}

TEST(FinitePoset, Diagnostics) {
  EXPECT_NE(load_error("poset v1\nelem a\nelem a\nbottom a\n").find("duplicate"), std::string::npos);
  const auto cyc = load_error("poset v1\nelem 0\nelem x\nelem y\nrel x y\nrel y x\nbottom 0\n");
  EXPECT_NE(cyc.find("x"), std::string::npos);
  EXPECT_NE(cyc.find("y"), std::string::npos);
  EXPECT_NE(load_error("poset v1\nelem 0\nrel 0 q\nbottom 0\n").find("unknown"), std::string::npos);
  EXPECT_NE(load_error("poset v2\n").find("line 1"), std::string::npos);
  EXPECT_NE(load_error("poset v1\nelem 0\nelem a\nbottom a\n").find("not below"), std::string::npos);
  EXPECT_NE(load_error("poset v1\nelem 0\nfrob 0\nbottom 0\n").find("line 3"), std::string::npos);
  EXPECT_THROW(FinitePoset::load("/nonexistent/file.poset"), InputError);
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mobius/mobius.hpp"
#include "oracles.hpp"

using namespace mobius;

TEST(ElementKey, CanonicalTextForms) {
  EXPECT_EQ(to_string(ElementKey::divisor(12)), "div:12");
  EXPECT_EQ(to_string(ElementKey::subset({3, 1})), "set:{1,3}");
  EXPECT_EQ(to_string(ElementKey::subset({})), "set:{}");
  FiniteField f2(2);
  EXPECT_EQ(to_string(ElementKey::subspace(f2, {{1, 0, 1}, {0, 1, 1}})),
            "sub:q=2;rref=[[1,0,1],[0,1,1]]");
  EXPECT_EQ(to_string(ElementKey::subspace(f2, {})), "sub:q=2;rref=[]");
  CounterexampleP p;
  EXPECT_EQ(to_string(p.z(1)), "P:z1");
  EXPECT_EQ(to_string(p.block(7, 1)), "P:(7,1)");
  EXPECT_EQ(to_string(p.d0(6)), "P:D0:6");
  CounterexampleQ q;
  EXPECT_EQ(to_string(q.block(1, 2, 3)), "Q:Qb:(2,3)");
  EXPECT_EQ(to_string(q.letter(2)), "Q:c");
  EXPECT_EQ(to_string(ElementKey::product(ElementKey::natural(Family::Antichain, 3),
                                          ElementKey::divisor(2))),
            "prod:(anti:3,div:2)");
}

TEST(ElementKey, SubspaceKeyIgnoresSpanningMatrixAndAmbientDimension) {
  FiniteField f2(2);
  auto a = ElementKey::subspace(f2, {{1, 1, 0}, {0, 1, 1}});
  auto b = ElementKey::subspace(f2, {{1, 0, 1, 0, 0}, {1, 1, 0, 0, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_string(a), "sub:q=2;rref=[[1,0,1],[0,1,1]]");
  EXPECT_EQ(ElementKey::subspace(f2, {{0, 0, 0}}), ElementKey::subspace(f2, {}));
}

TEST(ElementKey, ParseAcceptsNonCanonicalInputAndCanonicalizes) {
  EXPECT_EQ(parse_key("set:{3,1,2}"), ElementKey::subset({1, 2, 3}));
  EXPECT_EQ(to_string(parse_key("sub:q=3;rref=[[2,0],[0,0]]")), "sub:q=3;rref=[[1]]");
}

TEST(ElementKey, ParseErrors) {
  EXPECT_THROW(parse_key("12"), InputError);
  EXPECT_THROW(parse_key("div:0"), InputError);
  EXPECT_THROW(parse_key("div:x"), InputError);
  EXPECT_THROW(parse_key("set:{1,1}"), InputError);
  EXPECT_THROW(parse_key("sub:q=6;rref=[]"), InputError);
  EXPECT_THROW(parse_key("sub:q=2;rref=[[2]]"), InputError);
  EXPECT_THROW(parse_key("P:z3"), InputError);
  EXPECT_THROW(parse_key("Q:d"), InputError);
  EXPECT_THROW(parse_key("prod:(div:1)"), InputError);
  EXPECT_THROW(parse_key("zzz:1"), InputError);
  EXPECT_THROW(parse_key("fin:bad label"), InputError);
}

namespace {

ElementKey random_key(std::mt19937_64& rng, int depth = 0) {
  using oracle::draw;
  switch (draw(rng, 0, depth < 2 ? 7 : 6)) {
    case 0: return ElementKey::divisor(draw(rng, 1, 1000));
    case 1: return ElementKey::natural(Family::LinearOrder, draw(rng, 1, 1000));
    case 2: {
      std::set<std::int64_t> s;
      for (auto i = draw(rng, 0, 5); i > 0; --i) s.insert(draw(rng, 1, 9));
      return ElementKey::subset({s.begin(), s.end()});
    }
    case 3: {
      int q = std::array{2, 3, 4, 5}[draw(rng, 0, 3)];
      FiniteField field(q);
      Matrix m(draw(rng, 0, 3), std::vector<int>(draw(rng, 1, 4)));
      for (auto& r : m)
        for (auto& v : r) v = static_cast<int>(draw(rng, 0, q - 1));
      return ElementKey::subspace(field, m);
    }
    case 4: {
      CounterexampleP p;
      switch (draw(rng, 0, 3)) {
        case 0: return p.u();
        case 1: return p.z(static_cast<int>(draw(rng, 1, 2)));
        case 2: return p.block(draw(rng, 1, 50), draw(rng, 1, 50));
        default: return p.d0(draw(rng, 2, 50));
      }
    }
    case 5: {
      CounterexampleQ q;
      switch (draw(rng, 0, 2)) {
        case 0: return q.letter(static_cast<int>(draw(rng, 0, 2)));
        case 1: return q.block(static_cast<int>(draw(rng, 0, 2)), draw(rng, 1, 50), draw(rng, 1, 50));
        default: return q.d0(draw(rng, 2, 50));
      }
    }
    case 6: return ElementKey::finite("x" + std::to_string(draw(rng, 0, 99)) + "_{a,(b)}");
    default: return ElementKey::product(random_key(rng, depth + 1), random_key(rng, depth + 1));
  }
}

}  // namespace

TEST(ElementKeyProperty, TextRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    ElementKey k = random_key(rng);
    std::string text = to_string(k);
    ElementKey back = parse_key(text);
    ASSERT_EQ(back, k) << text;
    ASSERT_EQ(to_string(back), text);
    ASSERT_EQ(back.hash(), k.hash());
  }
}

TEST(ElementKeyProperty, OrderIsTotalAndConsistentWithEquality) {
  std::mt19937_64 rng(5);
  std::vector<ElementKey> keys;
  for (int i = 0; i < 300; ++i) keys.push_back(random_key(rng));
  for (const auto& a : keys)
    for (const auto& b : keys) {
      const bool lt = a < b, gt = b < a, eq = a == b;
      ASSERT_EQ(int(lt) + int(gt) + int(eq), 1);
    }
}

TEST(FiniteField, FieldAxiomsOnSmallOrders) {
  for (int q : {2, 3, 4, 5, 8, 9, 16, 25, 27}) {
    FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a) { EXPECT_EQ(f.mul(a, f.inv(a)), 1) << "q=" << q << " a=" << a; }
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < q; c += 3)
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  EXPECT_THROW(FiniteField(6), InputError);
  EXPECT_THROW(FiniteField(1), InputError);
}

TEST(FiniteField, PrimePowerValidation) {
  EXPECT_EQ(prime_power(8), (std::pair<int, int>{2, 3}));
  EXPECT_EQ(prime_power(49), (std::pair<int, int>{7, 2}));
  EXPECT_FALSE(prime_power(12));
  EXPECT_FALSE(prime_power(1));
}

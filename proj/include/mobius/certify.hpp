#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mobius/counterexamples.hpp"
#include "mobius/errors.hpp"
#include "mobius/poset_core.hpp"
#include "mobius/properties.hpp"

namespace mobius {

struct RegionGrowth {
  std::string region;
  ElementKey x;
  std::vector<std::size_t> counts;
  bool strictly_increasing = false;
};

struct RungWitnesses {
  std::int64_t frontier = 0;
  std::vector<std::size_t> counts;  // per candidate, in candidate order
  std::vector<bool> stabilized;     // against frontier(n - 1)
};

struct BatteryCase {
  std::string kind;
  SupportedFunction f;
  std::vector<std::size_t> support_counts;
  bool strictly_increasing = false;
};

struct CertificationReport {
  std::string theorem;  // "theorem4" | "theorem5"
  std::string poset;
  std::vector<std::int64_t> frontier_ladder;
  std::vector<ElementKey> candidates;
  std::vector<RungWitnesses> witnesses;
  std::vector<RegionGrowth> g_growth;  // counterexample P
  std::vector<BatteryCase> battery;    // counterexample Q
  bool witnesses_ok = false;
  bool growth_ok = false;
  bool pass = false;
};

namespace detail {

inline bool strictly_increasing(const std::vector<std::size_t>& v) {
  return classify(v) == Verdict::growth_observed;
}

inline void require_certify_ladder(const std::vector<std::int64_t>& ladder) {
  require_ladder(ladder);
  if (ladder.front() < 3)
    throw InputError("certification needs every frontier bound >= 3 to contain the named elements");
  if (ladder.size() < 2) throw InputError("certification needs at least two ladder rungs");
}

// Each candidate must have exactly one witness (itself) on every rung, with
// the count unchanged against frontier(n - 1).
inline bool witness_rungs(const PosetView& poset, const std::vector<ElementKey>& S,
                          const std::vector<std::int64_t>& ladder, std::vector<RungWitnesses>& out) {
  bool ok = true;
  for (std::int64_t n : ladder) {
    auto r = hk_witnesses(poset, S, n);
    RungWitnesses rung{n, {}, {}};
    for (const auto& c : r.per_candidate) {
      rung.counts.push_back(c.count);
      rung.stabilized.push_back(c.stabilized);
      ok = ok && c.count == 1 && c.stabilized;
    }
    out.push_back(std::move(rung));
  }
  return ok;
}

// Deterministic draws; std distributions are implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::int64_t nonzero_value() {
    std::int64_t v = uniform(1, 3);
    return uniform(0, 1) ? v : -v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Counterexample P at each rung: mu(x, .) keeps finding new nonzero values
/// for x in every region (property G), while {z1, z2} has exactly one H2
/// witness per candidate on every rung (H2 fails).
inline CertificationReport certify_theorem4(const std::vector<std::int64_t>& ladder) {
  detail::require_certify_ladder(ladder);
  CounterexampleP poset;
  CertificationReport out{"theorem4", poset.name(), ladder};
  out.candidates = {poset.z(1), poset.z(2)};
  out.witnesses_ok = detail::witness_rungs(poset, out.candidates, ladder, out.witnesses);

  const std::vector<std::pair<std::string, ElementKey>> regions = {
      {"u", poset.u()},         {"D0", poset.d0(2)}, {"P1", poset.block(1, 1)},
      {"z1", poset.z(1)},       {"z2", poset.z(2)},
  };
  out.growth_ok = true;
  for (const auto& [name, x] : regions) {
    RegionGrowth g{name, x};
    for (std::int64_t n : ladder) g.counts.push_back(check_G(poset, x, n).count);
    g.strictly_increasing = detail::strictly_increasing(g.counts);
    out.growth_ok = out.growth_ok && g.strictly_increasing;
    out.g_growth.push_back(std::move(g));
  }
  out.pass = out.witnesses_ok && out.growth_ok;
  return out;
}

inline CertificationReport certify_theorem4(std::int64_t n) {
  return certify_theorem4(geometric_ladder(n));
}

/// The finitely supported f battery for counterexample Q, following the
/// three cases of the argument that Q has property M:
///   meets-D1          supp f meets D0 + {u}
///   pair-sum-nonzero  f(x) + f(y) != 0 for some letters x != y, supp f misses D1
///   inside-one-copy   f vanishes on the letters and D1, support in one Q_y
/// Support size <= 5, values in [-3, 3] \ {0}, coordinates small enough to
/// sit inside frontier(3).
inline std::vector<BatteryCase> theorem5_battery(std::uint64_t seed, int per_case = 5) {
  CounterexampleQ q;
  detail::Draw draw(seed);
  std::vector<BatteryCase> out;
  auto block = [&](int copy) { return q.block(copy, draw.uniform(1, 3), draw.uniform(1, 3)); };
  auto any_block = [&] { return block(static_cast<int>(draw.uniform(0, 2))); };

  for (int i = 0; i < per_case; ++i) {
    SupportedFunction f;
    f.set(draw.uniform(0, 1) ? q.u() : q.d0(draw.uniform(2, 3)), draw.nonzero_value());
    const auto extra = draw.uniform(0, 4);
    for (std::int64_t j = 0; j < extra; ++j) {
      switch (draw.uniform(0, 2)) {
        case 0: f.set(q.letter(static_cast<int>(draw.uniform(0, 2))), draw.nonzero_value()); break;
        case 1: f.set(any_block(), draw.nonzero_value()); break;
        default: f.set(q.d0(draw.uniform(2, 3)), draw.nonzero_value()); break;
      }
    }
    out.push_back({"meets-D1", f});
  }

  for (int i = 0; i < per_case; ++i) {
    SupportedFunction f;
    const int x = static_cast<int>(draw.uniform(0, 2));
    const int y = (x + 1 + static_cast<int>(draw.uniform(0, 1))) % 3;
    const auto fx = draw.nonzero_value();
    auto fy = draw.nonzero_value();
    if (fx + fy == 0) fy = -fy;
    f.set(q.letter(x), fx);
    f.set(q.letter(y), fy);
    const auto extra = draw.uniform(0, 3);
    for (std::int64_t j = 0; j < extra; ++j) f.set(any_block(), draw.nonzero_value());
    out.push_back({"pair-sum-nonzero", f});
  }
  {
    // f = 1_b - 1_a: f(a) + f(b) = 0 but f(a) + f(c) != 0.
    SupportedFunction f;
    f.set(q.letter(0), -1);
    f.set(q.letter(1), 1);
    out.push_back({"pair-sum-nonzero", f});
  }

  for (int i = 0; i < per_case; ++i) {
    SupportedFunction f;
    const int copy = static_cast<int>(draw.uniform(0, 2));
    const auto size = draw.uniform(1, 5);
    for (std::int64_t j = 0; j < size; ++j) f.set(block(copy), draw.nonzero_value());
    if (f.empty()) f.set(block(copy), 1);
    out.push_back({"inside-one-copy", f});
  }
  return out;
}

/// Counterexample Q: {a, b, c} has exactly one H3 witness per candidate on
/// every rung, while every battery function has a zeta transform whose
/// support strictly grows along the ladder.
inline CertificationReport certify_theorem5(const std::vector<std::int64_t>& ladder,
                                            std::uint64_t seed = 0, int per_case = 5) {
  detail::require_certify_ladder(ladder);
  CounterexampleQ poset;
  CertificationReport out{"theorem5", poset.name(), ladder};
  out.candidates = {poset.letter(0), poset.letter(1), poset.letter(2)};
  out.witnesses_ok = detail::witness_rungs(poset, out.candidates, ladder, out.witnesses);
  out.growth_ok = true;
  for (auto& c : theorem5_battery(seed, per_case)) {
    auto r = uncertainty_experiment(poset, c.f, ladder);
    c.support_counts = r.counts();
    c.strictly_increasing = detail::strictly_increasing(c.support_counts);
    out.growth_ok = out.growth_ok && c.strictly_increasing;
    out.battery.push_back(std::move(c));
  }
  out.pass = out.witnesses_ok && out.growth_ok;
  return out;
}

inline CertificationReport certify_theorem5(std::int64_t n, std::uint64_t seed = 0) {
  return certify_theorem5(geometric_ladder(n), seed);
}

}  // namespace mobius

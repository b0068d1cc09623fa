#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mobius/element_key.hpp"
#include "mobius/errors.hpp"
#include "mobius/poset_core.hpp"
#include "mobius/poset_view.hpp"
#include "mobius/rational.hpp"

namespace mobius {

inline constexpr std::size_t kSampleSize = 5;

enum class Verdict { growth_observed, stabilized, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::growth_observed: return "growth-observed";
    case Verdict::stabilized: return "stabilized";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Strictly increasing counts signal growth; constant counts signal
/// stabilization. A single rung is inconclusive.
inline Verdict classify(const std::vector<std::size_t>& counts) {
  if (counts.size() < 2) return Verdict::inconclusive;
  bool increasing = true, constant = true;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] <= counts[i - 1]) increasing = false;
    if (counts[i] != counts[i - 1]) constant = false;
  }
  if (increasing) return Verdict::growth_observed;
  if (constant) return Verdict::stabilized;
  return Verdict::inconclusive;
}

inline std::vector<std::int64_t> geometric_ladder(std::int64_t n) {
  return {n, 2 * n, 4 * n};
}

inline void require_ladder(const std::vector<std::int64_t>& ladder) {
  if (ladder.empty()) throw InputError("frontier ladder is empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 0) throw InputError("frontier ladder entries must be nonnegative");
    if (i > 0 && ladder[i] <= ladder[i - 1])
      throw InputError("frontier ladder must be strictly increasing");
  }
}

struct CandidateWitnesses {
  ElementKey z;
  std::size_t count = 0;
  std::size_t previous_count = 0;  // within frontier(n - 1)
  std::vector<ElementKey> samples;
  bool stabilized = false;
};

/// H_k witness counts for one finite S inside frontier(n).
struct WitnessReport {
  std::vector<ElementKey> S;
  std::vector<CandidateWitnesses> per_candidate;  // sorted by z
  std::int64_t frontier = 0;
};

inline bool is_witness(const PosetView& poset, const std::vector<ElementKey>& S, const ElementKey& z,
                       const ElementKey& x) {
  if (!poset.leq(z, x)) return false;
  for (const auto& y : S)
    if (y != z && poset.leq(y, x)) return false;
  return true;
}

/// For each z in S, counts x in frontier(n) with x >= z and x not above any
/// other member of S (x = z itself included when it qualifies).
inline WitnessReport hk_witnesses(const PosetView& poset, std::vector<ElementKey> S, std::int64_t n) {
  if (S.empty()) throw InputError("witness set S must be nonempty");
  for (const auto& s : S) poset.require(s);
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());

  const auto current = poset.frontier(n);
  std::vector<ElementKey> previous;
  if (n > 0) previous = poset.frontier(n - 1);
  auto in_previous = [&](const ElementKey& x) {
    return std::binary_search(previous.begin(), previous.end(), x);
  };

  WitnessReport report{S, {}, n};
  for (const auto& z : S) {
    CandidateWitnesses c{z};
    for (const auto& x : current) {
      if (!is_witness(poset, S, z, x)) continue;
      ++c.count;
      if (in_previous(x)) ++c.previous_count;
      if (c.samples.size() < kSampleSize) c.samples.push_back(x);
    }
    c.stabilized = c.count == c.previous_count;
    report.per_candidate.push_back(std::move(c));
  }
  return report;
}

struct LadderCandidate {
  ElementKey z;
  std::vector<std::size_t> counts;
  bool stabilized = false;  // identical counts on every rung
};

/// Witness counts for S evaluated at each rung of a frontier ladder.
struct WitnessLadderReport {
  std::string property;  // "H_k" with k = |S|
  std::string poset;
  std::vector<std::int64_t> frontier_ladder;
  std::vector<LadderCandidate> per_candidate;
  Verdict verdict = Verdict::inconclusive;
};

inline WitnessLadderReport witness_ladder(const PosetView& poset, const std::vector<ElementKey>& S,
                                          const std::vector<std::int64_t>& ladder) {
  require_ladder(ladder);
  WitnessLadderReport out;
  out.poset = poset.name();
  out.frontier_ladder = ladder;
  for (std::int64_t n : ladder) {
    auto r = hk_witnesses(poset, S, n);
    if (out.per_candidate.empty()) {
      out.property = "H_" + std::to_string(r.S.size());
      for (const auto& c : r.per_candidate) out.per_candidate.push_back({c.z, {}, false});
    }
    for (std::size_t i = 0; i < r.per_candidate.size(); ++i)
      out.per_candidate[i].counts.push_back(r.per_candidate[i].count);
  }
  // H_k holds for S when some candidate keeps growing; it fails when every
  // candidate's count has frozen.
  bool any_growth = false, all_stable = true;
  for (auto& c : out.per_candidate) {
    Verdict v = classify(c.counts);
    c.stabilized = v == Verdict::stabilized;
    any_growth = any_growth || v == Verdict::growth_observed;
    all_stable = all_stable && c.stabilized;
  }
  out.verdict = any_growth ? Verdict::growth_observed
                           : (all_stable ? Verdict::stabilized : Verdict::inconclusive);
  return out;
}

struct GReport {
  ElementKey x;
  std::int64_t frontier = 0;
  std::size_t count = 0;
  std::vector<std::pair<ElementKey, Integer>> samples;
};

/// Counts y in frontier(n) with mu(x, y) != 0.
inline GReport check_G(const PosetView& poset, const ElementKey& x, std::int64_t n) {
  poset.require(x);
  GReport out{x, n};
  for (const auto& y : poset.frontier(n)) {
    if (!poset.leq(x, y)) continue;
    Integer m = mobius_value(poset, x, y);
    if (m == 0) continue;
    ++out.count;
    if (out.samples.size() < kSampleSize) out.samples.emplace_back(y, m);
  }
  return out;
}

struct GLadderReport {
  std::string poset;
  ElementKey x;
  std::vector<std::int64_t> frontier_ladder;
  std::vector<std::size_t> counts;
  Verdict verdict = Verdict::inconclusive;
};

inline GLadderReport check_G_ladder(const PosetView& poset, const ElementKey& x,
                                    const std::vector<std::int64_t>& ladder) {
  require_ladder(ladder);
  GLadderReport out{poset.name(), x, ladder};
  for (std::int64_t n : ladder) out.counts.push_back(check_G(poset, x, n).count);
  out.verdict = classify(out.counts);
  return out;
}

/// Outcome of pushing one finitely supported f through the zeta transform.
struct ExperimentResult {
  std::string poset;
  SupportedFunction f;
  std::map<std::int64_t, std::size_t> g_support_counts;  // frontier -> |supp g within it|
  std::vector<std::pair<ElementKey, Rational>> g_samples;
  Verdict verdict = Verdict::inconclusive;

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto& [n, c] : g_support_counts) out.push_back(c);
    return out;
  }
};

/// g = zeta * f evaluated on the largest rung; support sizes reported for
/// every rung of the ladder.
inline ExperimentResult uncertainty_experiment(const PosetView& poset, const SupportedFunction& f,
                                               const std::vector<std::int64_t>& ladder) {
  if (f.empty()) throw InputError("uncertainty experiment needs a nonzero f");
  require_ladder(ladder);
  require_all(poset, f);
  const auto g = zeta_transform_on(poset, f, poset.frontier(ladder.back()));
  ExperimentResult out{poset.name(), f};
  for (std::int64_t m : ladder) {
    std::size_t count = 0;
    for (const auto& x : poset.frontier(m))
      if (g.contains(x)) ++count;
    out.g_support_counts[m] = count;
  }
  for (const auto& [x, v] : g) {
    if (out.g_samples.size() >= kSampleSize) break;
    out.g_samples.emplace_back(x, v);
  }
  out.verdict = classify(out.counts());
  return out;
}

inline ExperimentResult uncertainty_experiment(const PosetView& poset, const SupportedFunction& f,
                                               std::int64_t n) {
  std::vector<std::int64_t> ladder;
  for (std::int64_t m : {n / 4, n / 2, n})
    if (m >= 1 && (ladder.empty() || m > ladder.back())) ladder.push_back(m);
  if (ladder.empty()) ladder.push_back(n);
  return uncertainty_experiment(poset, f, ladder);
}

/// {y in frontier(n) : y >= z}.
inline std::vector<ElementKey> up_set_on_frontier(const PosetView& poset, const ElementKey& z,
                                                  std::int64_t n) {
  std::vector<ElementKey> out;
  for (auto& y : poset.frontier(n))
    if (poset.leq(z, y)) out.push_back(std::move(y));
  return out;
}

/// The function that defeats the uncertainty property when H1 or H2 fails.
///
/// |S| = 2, S = {z1, z2} in key order: f = 1_{z2} - 1_{z1}.
/// |S| = 1, S = {z}: when U(z) looks finite (identical on frontier(n) and
/// frontier(2n)) z is replaced by a maximal element of U(z) and f is its
/// indicator; otherwise f = 1_z.
inline SupportedFunction necessity_function(const PosetView& poset, std::vector<ElementKey> S,
                                            std::int64_t search_bound = 8) {
  if (S.size() != 1 && S.size() != 2) throw InputError("necessity function needs |S| in {1, 2}");
  for (const auto& s : S) poset.require(s);
  std::sort(S.begin(), S.end());
  SupportedFunction f;
  if (S.size() == 2) {
    if (S[0] == S[1]) throw InputError("necessity function needs two distinct elements");
    f.set(S[0], -1);
    f.set(S[1], 1);
    return f;
  }
  const ElementKey& z = S[0];
  auto near = up_set_on_frontier(poset, z, search_bound);
  auto far = up_set_on_frontier(poset, z, 2 * search_bound);
  if (near.empty() || near != far) {
    f.set(z, 1);
    return f;
  }
  for (const auto& m : near) {
    bool maximal = true;
    for (const auto& y : near)
      if (y != m && poset.leq(m, y)) {
        maximal = false;
        break;
      }
    if (maximal) {
      f.set(m, 1);
      return f;
    }
  }
  f.set(z, 1);
  return f;
}

}  // namespace mobius

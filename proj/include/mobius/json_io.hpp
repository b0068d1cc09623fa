#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mobius/certify.hpp"
#include "mobius/element_key.hpp"
#include "mobius/poset_core.hpp"
#include "mobius/properties.hpp"
#include "mobius/qbinomial.hpp"
#include "mobius/reduced.hpp"
#include "mobius/reduced_checks.hpp"

namespace mobius {

using Json = nlohmann::ordered_json;

inline Json keys_json(const std::vector<ElementKey>& keys) {
  Json a = Json::array();
  for (const auto& k : keys) a.push_back(to_string(k));
  return a;
}

inline Json to_json(const SupportedFunction& f) {
  Json a = Json::array();
  for (const auto& [k, v] : f) a.push_back({{"element", to_string(k)}, {"value", to_string(v)}});
  return a;
}

/// [{n, value: "p/q"}, ...]
inline Json to_json(const ReducedSequence& s) {
  Json a = Json::array();
  for (const auto& [n, v] : s) a.push_back({{"n", n}, {"value", to_string(v)}});
  return a;
}

/// Dense sequence on {1..N}, zeros included.
inline Json dense_json(const ReducedSequence& s, std::int64_t N) {
  Json a = Json::array();
  for (std::int64_t n = 1; n <= N; ++n) a.push_back({{"n", n}, {"value", to_string(s.at(n))}});
  return a;
}

/// Coefficients as rational strings, degree ascending.
inline Json to_json(const QPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

inline Json to_json(const WitnessReport& r) {
  Json per = Json::array();
  for (const auto& c : r.per_candidate)
    per.push_back({{"z", to_string(c.z)},
                   {"count", c.count},
                   {"previous_count", c.previous_count},
                   {"samples", keys_json(c.samples)},
                   {"stabilized", c.stabilized}});
  return {{"S", keys_json(r.S)}, {"frontier", r.frontier}, {"per_candidate", per}};
}

inline Json to_json(const WitnessLadderReport& r) {
  Json per = Json::array();
  for (const auto& c : r.per_candidate)
    per.push_back({{"z", to_string(c.z)}, {"counts", c.counts}, {"stabilized", c.stabilized}});
  return {{"property", r.property},
          {"poset", r.poset},
          {"frontier_ladder", r.frontier_ladder},
          {"per_candidate", per},
          {"verdict", to_string(r.verdict)}};
}

inline Json to_json(const GLadderReport& r) {
  return {{"property", "G"},
          {"poset", r.poset},
          {"frontier_ladder", r.frontier_ladder},
          {"per_candidate", Json::array({{{"z", to_string(r.x)},
                                          {"counts", r.counts},
                                          {"stabilized", r.verdict == Verdict::stabilized}}})},
          {"verdict", to_string(r.verdict)}};
}

inline Json to_json(const ExperimentResult& r) {
  Json ladder = Json::array(), counts = Json::array(), samples = Json::array();
  for (const auto& [n, c] : r.g_support_counts) {
    ladder.push_back(n);
    counts.push_back(c);
  }
  for (const auto& [k, v] : r.g_samples)
    samples.push_back({{"element", to_string(k)}, {"value", to_string(v)}});
  // One pseudo-candidate: the support of g.
  Json per = Json::array({{{"z", "supp(g)"},
                           {"counts", counts},
                           {"stabilized", r.verdict == Verdict::stabilized}}});
  return {{"property", "M"},
          {"poset", r.poset},
          {"frontier_ladder", ladder},
          {"per_candidate", per},
          {"f", to_json(r.f)},
          {"g_support_counts", counts},
          {"g_samples", samples},
          {"verdict", to_string(r.verdict)}};
}

inline Json to_json(const CertificationReport& r) {
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    Json counts = Json::array();
    bool stable = true;
    for (const auto& rung : r.witnesses) {
      counts.push_back(rung.counts.at(i));
      stable = stable && rung.stabilized.at(i);
    }
    witnesses.push_back({{"z", to_string(r.candidates[i])}, {"counts", counts}, {"stabilized", stable}});
  }
  Json out = {{"property", r.theorem == "theorem4" ? "G and not H_2" : "M and not H_3"},
              {"theorem", r.theorem},
              {"poset", r.poset},
              {"frontier_ladder", r.frontier_ladder},
              {"per_candidate", witnesses},
              {"witnesses_ok", r.witnesses_ok}};
  if (!r.g_growth.empty()) {
    Json growth = Json::array();
    for (const auto& g : r.g_growth)
      growth.push_back({{"region", g.region},
                        {"x", to_string(g.x)},
                        {"counts", g.counts},
                        {"strictly_increasing", g.strictly_increasing}});
    out["mobius_nonzero_growth"] = growth;
  }
  if (!r.battery.empty()) {
    Json battery = Json::array();
    for (const auto& c : r.battery)
      battery.push_back({{"case", c.kind},
                         {"f", to_json(c.f)},
                         {"g_support_counts", c.support_counts},
                         {"strictly_increasing", c.strictly_increasing}});
    out["battery"] = battery;
  }
  out["growth_ok"] = r.growth_ok;
  out["verdict"] = r.pass ? "pass" : "fail";
  return out;
}

inline Json to_json(const StructureReport& r) {
  Json mism = Json::array(), typing = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"x", to_string(m.x)},
                    {"y", to_string(m.y)},
                    {"d", m.d},
                    {"k", m.k},
                    {"expected", to_string(m.expected)},
                    {"observed", to_string(m.observed)}});
  for (const auto& [x, y] : r.typing_violations) typing.push_back({to_string(x), to_string(y)});
  return {{"family", r.family},
          {"poset", r.poset},
          {"frontier", r.frontier},
          {"n_max", r.n_max},
          {"pairs_checked", r.pairs_checked},
          {"intervals_checked", r.intervals_checked},
          {"coefficients_checked", r.coefficients_checked},
          {"typing_violations", typing},
          {"mismatches", mism},
          {"verdict", r.verdict()}};
}

inline Json to_json(const Prop7Report& r) {
  Json zeros = r.zeros;
  return {{"check", "prop7"},
          {"f", to_json(r.f)},
          {"N", r.N},
          {"k1", r.k1},
          {"n0", r.n0 ? Json(*r.n0) : Json(nullptr)},
          {"zeros", zeros},
          {"ratio", to_string(r.ratio)},
          {"ratio_approx", r.ratio.get_d()},
          {"leading", to_string(r.leading)},
          {"ratio_within_tolerance", r.ratio_within_tolerance},
          {"verdict", r.pass ? "pass" : "fail"}};
}

inline Json to_json(const Prop8Report& r) {
  return {{"check", "prop8"},
          {"f", to_json(r.f)},
          {"q", r.q},
          {"N", r.N},
          {"polynomial", to_json(r.polynomial)},
          {"degree", r.polynomial.degree()},
          {"zero_iff_f_zero", r.zero_iff_f_zero},
          {"compared", r.compared},
          {"route_mismatches", r.route_mismatches},
          {"zeros", r.zeros},
          {"zero_count_within_degree", r.zero_count_within_degree},
          {"verdict", r.pass ? "pass" : "fail"}};
}

inline Json to_json(const LinearOrderPair& r) {
  return {{"check", "linear-order-non-R"},
          {"bound", r.bound},
          {"mu", to_json(r.mu)},
          {"zeta_mu", to_json(r.zeta_mu)},
          {"both_supports_finite", r.both_finite},
          {"violates_R", r.violates_R},
          {"verdict", r.violates_R ? "pass" : "fail"}};
}

}  // namespace mobius

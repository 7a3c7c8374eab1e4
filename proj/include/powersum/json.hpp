#pragma once

// JSON views of the library's results. Big integers and rationals are
// decimal strings so consumers never truncate them to 64 bits.

#include "search.hpp"

#include <json.hpp>

namespace powersum {

inline nlohmann::json coefficients_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
  return arr;
}

inline nlohmann::json to_json(const ModPoly& p) {
  return {{"modulus", p.modulus()}, {"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

inline nlohmann::json to_json(const MultiplicityProfile& p) { return p.multiplicities(); }

inline nlohmann::json to_json(const Lemma6Report& r) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [p, c] : r.coprime_counts) counts[std::to_string(p)] = c;
  return {{"q", r.q},
          {"l", r.l},
          {"d", to_string(r.d)},
          {"multiplicities", to_json(r.profile)},
          {"odd_multiplicity_zero_count", r.odd_multiplicity_zero_count},
          {"coprime_counts", counts},
          {"mod4_snapshot", to_json(r.mod4_snapshot)},
          {"conclusion_i_exempt", r.exempt_i},
          {"conclusion_i", r.conclusion_i},
          {"conclusion_ii", r.conclusion_ii},
          {"holds", r.holds()}};
}

inline nlohmann::json to_json(const BrindzaAssessment& a) {
  return {{"m", a.m}, {"t_values", a.t_values}, {"exceptional", std::string(to_string(a.exceptional))}};
}

inline nlohmann::json to_json(const SolutionRecord& r) {
  return {{"k", r.k},
          {"l", r.l},
          {"x", std::to_string(r.x)},
          {"y", to_string(r.y)},
          {"n", r.n},
          {"source", std::string(to_string(r.source))}};
}

inline nlohmann::json to_json(const FamilyRecord& r) {
  return {{"k", r.k},
          {"l", r.l},
          {"x", to_string(r.x)},
          {"y", to_string(r.y)},
          {"u", to_string(r.witness.u)},
          {"v", to_string(r.witness.v)},
          {"verified", true},
          {"oracle_checked", r.oracle_checked}};
}

inline nlohmann::json to_json(const PipelineReport& rep) {
  auto entries = nlohmann::json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"n", e.n},
                       {"assessment", to_json(e.assessment)},
                       {"bound_applies", e.assessment.bound_applies()},
                       {"family_available", e.family_available},
                       {"verdict", e.verdict}});
  return {{"k", rep.k},
          {"l", rep.l},
          {"two_distinct_zeros", rep.two_distinct_zeros},
          {"multiplicities", to_json(rep.profile)},
          {"entries", entries}};
}

}  // namespace powersum

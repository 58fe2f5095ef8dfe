#pragma once

// JSON conversions for report records. Field names follow the type
// definitions; every report carries a seed (when randomness was involved)
// and a provenance tag ("exact" or "sampled") per quantity.

#include <nlohmann/json.hpp>

#include "mevcost/bounds_suite.hpp"
#include "mevcost/cfmm.hpp"
#include "mevcost/cost.hpp"
#include "mevcost/spectral.hpp"

namespace mevcost {

inline constexpr const char* kToolVersion = "0.1.0";

inline nlohmann::json to_json(const CostReport& r) {
  return {{"max_value", r.max_value},
          {"mean_value", r.mean_value},
          {"cost", r.cost},
          {"argmax_rank", r.argmax_rank},
          {"n_factorial", r.n_factorial},
          {"stabilizer_size", r.stabilizer_size},
          {"provenance", "exact"}};
}

inline nlohmann::json to_json(const BoundCertificate& c) {
  nlohmann::json j = {{"bound_name", c.bound_name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"satisfied", c.satisfied},
                      {"slack", c.slack}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline nlohmann::json to_json(const CsEstimate& e) {
  return {{"value", e.value},
          {"seed", e.seed},
          {"samples", e.samples},
          {"method", e.method},
          {"provenance", "sampled-lower-estimate"}};
}

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : s.records) {
    auto j = to_json(rec.certificate);
    j["context"] = rec.context;
    records.push_back(std::move(j));
  }
  return {{"n", s.n},
          {"seed", s.seed},
          {"trials", s.trials},
          {"failures", s.failures},
          {"worst_indicator_saturation_slack",
           s.worst_indicator_saturation_slack},
          {"certificates", std::move(records)},
          {"tool_version", kToolVersion}};
}

}  // namespace mevcost

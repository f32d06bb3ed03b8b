#pragma once

// Text and JSON renderings of witnesses and coverage reports. Data lines are
// deterministic: no timestamps, no timing, ordered by lambda.

#include <string>

#include "json.hpp"
#include "stanley/residue_set.hpp"
#include "stanley/witness.hpp"

namespace stanley {

inline std::string describe(const WitnessRecipe& r) {
  return "lambda=" + std::to_string(r.target_lambda) + " strategy=" + std::string(to_string(r.kind)) +
         " base=" + r.label + " shifts=" + std::to_string(r.shift_count) + " t=" + std::to_string(r.expected_t) +
         " N=" + std::to_string(r.expected_N);
}

inline std::string describe(const VerifiedWitness& w) {
  std::string out = describe(w.recipe) + " modular_N=" + std::to_string(w.modular_modulus) +
                    " depth=" + std::string(to_string(w.depth));
  if (w.profile) {
    out += " detected=" + std::to_string(w.profile->lambda) + " kappa=" + std::to_string(w.profile->kappa) +
           " levels=" + std::to_string(w.profile->levels());
  }
  if (w.omitted) out += " omega=" + (w.omitted->omega ? std::to_string(*w.omitted->omega) : std::string("none"));
  return out;
}

inline std::string describe(const CoverageRecord& r) {
  if (r.pass) return describe(*r.witness) + " PASS";
  return "lambda=" + std::to_string(r.lambda) + " FAIL " + r.failure;
}

inline nlohmann::ordered_json to_json(const CoverageRecord& r) {
  nlohmann::ordered_json j;
  j["lambda"] = r.lambda;
  j["pass"] = r.pass;
  if (r.witness) {
    const auto& w = *r.witness;
    j["strategy"] = to_string(w.recipe.kind);
    j["base"] = w.recipe.label;
    j["N"] = w.recipe.expected_N;
    j["t"] = w.recipe.expected_t;
    j["k"] = w.recipe.shift_count;
    j["set"] = format_set(w.set);
    j["modular_N"] = w.modular_modulus;
    j["verified_depth"] = to_string(w.depth);
    if (w.profile) {
      j["detected_lambda"] = w.profile->lambda;
      j["kappa"] = w.profile->kappa;
      j["repeat_factor"] = w.profile->repeat_factor;
      j["levels"] = w.profile->levels();
    }
    if (w.omitted) {
      j["omega"] = w.omitted->omega ? nlohmann::ordered_json(*w.omitted->omega) : nlohmann::ordered_json(nullptr);
      j["omitted_scan_bound"] = w.omitted->scan_bound;
    }
  } else {
    j["error"] = r.failure;
  }
  return j;
}

inline nlohmann::ordered_json to_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["lambda_max"] = report.lambda_max;
  j["deep_cap"] = report.deep_cap;
  j["admissible"] = report.records.size();
  j["passed"] = report.pass_count();
  std::size_t deep = 0;
  for (const auto& r : report.records)
    if (r.witness && r.witness->depth == verification_depth::deep) ++deep;
  j["deep"] = deep;
  j["all_pass"] = report.all_pass();
  auto& records = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return j;
}

}  // namespace stanley

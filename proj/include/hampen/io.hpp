// Copyright 2026 The hampen developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "hampen/analysis.hpp"
#include "hampen/certify.hpp"
#include "hampen/model.hpp"
#include "hampen/profile.hpp"

namespace hampen {

// Model file format:
//   {"kind": "qubo"|"ising", "n": <int>, "offset": "<p/q>",
//    "linear": ["<p/q>", ...],
//    "quadratic": [{"i": <int>, "j": <int>, "value": "<p/q>"}, ...]}
// Rationals are lowest-terms "p/q" strings. Readers reject i >= j,
// out-of-range indices, duplicates and zero denominators.
nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

// Permutation group format: {"n": <int>, "generators": [[<int>, ...], ...]},
// or the shorthand string "S_n" (also "S_<k>" with explicit degree) either
// standalone or in place of the generator list.
PermutationGroup group_from_json(const nlohmann::json& j, int expected_degree);

// Bounds file: {"kind": "qubo", "B": "<p/q>", "C": "<p/q>"} or
// {"kind": "ising", "h_min": "<p/q>", "h_max": "<p/q>", "J_max": "<p/q>"}.
nlohmann::json bounds_to_json(const CoefficientBounds& bounds);
CoefficientBounds bounds_from_json(const nlohmann::json& j);

// Certificate output: {"n":, "r":, "kind":, "bounds": {...}, "lp_gap":
// <float>, "closed_form": "<p/q>", "abs_diff": <float>,
// "verdict": "pass"|"fail"}.
nlohmann::json certificate_to_json(const OptimalityCertificate& cert);

nlohmann::json report_to_json(const PenaltyReport& report);
nlohmann::json scale_to_json(const ScaleResult& scale);

Model read_model_file(const std::string& path);
void write_model_file(const std::string& path, const Model& model);

}  // namespace hampen

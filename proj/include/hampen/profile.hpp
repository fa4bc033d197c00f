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

#include <cstdint>
#include <optional>
#include <vector>

#include "hampen/model.hpp"

namespace hampen {

/// Exhaustive per-weight minima with deterministic (lexicographically
/// smallest) argmin witnesses and minimizer counts per weight class.
struct WeightProfile {
    int n = 0;
    std::vector<Rational> minima;          // indexed by weight 0..n
    std::vector<Bitstring> witnesses;      // one per weight class
    std::vector<std::uint64_t> counts;     // minimizers within each class

    /// Global minimum over all assignments.
    const Rational& ground_energy() const;
    /// Number of assignments attaining the global minimum.
    std::uint64_t ground_set_size() const;
};

/// Minimum-penalty report for a target Hamming weight r.
struct PenaltyReport {
    int target_weight = 0;
    Rational ground_energy;        // min over the weight-r class
    std::uint64_t ground_set_size = 0;  // assignments at that energy, any weight
    Rational gap;                  // min over weight != r, minus ground energy
    Bitstring witness{1, 0};       // weight != r string attaining the gap
    bool exact_penalty = false;    // zero set of (value - ground) == weight-r class
};

/// Enumerates all 2^n assignments (n <= 24). workers = 0 picks the hardware
/// parallelism; results are identical for every worker count.
WeightProfile weight_profile(const Model& model, int workers = 0);

PenaltyReport min_penalty(const Model& model, int r, int workers = 0);

/// Difference between the two smallest distinct energies. Throws DomainError
/// on constant models.
Rational spectral_gap(const Model& model, int workers = 0);

/// Exact values on every string of Hamming weight w, reduced to the minimum.
/// Also reports whether the whole class sits at a single value.
struct WeightClassScan {
    Rational minimum;
    Rational maximum;
    Bitstring argmin{1, 0};
};
WeightClassScan scan_weight_class(const Model& model, int w);

/// All masks attaining the global minimum, sorted ascending.
std::vector<std::uint32_t> ground_set(const Model& model);

}  // namespace hampen

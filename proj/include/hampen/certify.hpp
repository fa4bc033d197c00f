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

#include "hampen/builders.hpp"
#include "hampen/lp.hpp"

namespace hampen {

/// The gap-maximization LP: maximize g over all models of the given kind
/// that vanish on every weight-r string, value at least g elsewhere, under
/// the bound profile. QUBO kind imposes only b_j >= -B and c_jk <= C unless
/// two_sided is set, which adds b_j <= B and c_jk >= -C.
LinearProgram build_gap_lp(int n, int r, const CoefficientBounds& bounds,
                           bool two_sided = false);

/// Comparison of the LP optimum against the closed-form optimal gap, plus
/// exact feasibility/attainment checks of the concrete penalty model at the
/// closed-form scale.
struct OptimalityCertificate {
    int n = 0;
    int r = 0;
    CoefficientBounds bounds;
    double lp_gap = 0.0;
    Rational closed_form;
    double abs_diff = 0.0;
    bool verdict = false;           // abs_diff <= kLpTolerance
    bool builder_feasible = false;  // builder coefficients satisfy the bounds
    bool builder_attains = false;   // builder gap equals the closed form exactly
    int lp_iterations = 0;
};

OptimalityCertificate certify_optimality(int n, int r,
                                         const CoefficientBounds& bounds,
                                         bool two_sided = false);

}  // namespace hampen

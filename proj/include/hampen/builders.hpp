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

#include "hampen/model.hpp"

namespace hampen {

enum class ModelKind { qubo, ising };

/// Coefficient bound profile. For QUBOs the relevant constraints are
/// b_j >= -B and c_jk <= C; for Ising models -h_min <= h_j <= h_max and
/// J_jk <= J_max. All magnitudes must be strictly positive.
struct CoefficientBounds {
    ModelKind kind = ModelKind::qubo;
    Rational B, C;                  // qubo kind
    Rational h_min, h_max, J_max;   // ising kind

    static CoefficientBounds for_qubo(Rational B, Rational C);
    static CoefficientBounds for_ising(Rational h_min, Rational h_max,
                                       Rational J_max);
};

enum class BindingBound { linear, quadratic, tie };

/// Optimal energy scale under a bound profile, with the guaranteed minimum
/// penalty and which bound is active.
struct ScaleResult {
    Rational scale;       // E
    Rational gap;         // E for QUBOs, 2E for Ising models
    BindingBound binding = BindingBound::tie;
};

/// The weight-r penalty QUBO: value E(r - |x|)^2, i.e. coefficients
/// a = r^2 E, b_j = -(2r-1)E, c_jk = 2E. Zero exactly on the weight-r class.
Qubo build_qubo_hamming(int n, int r, const Rational& scale);

/// The weight-r penalty Ising model, equal coefficient-for-coefficient to
/// qubo_to_ising(build_qubo_hamming(n, r, 2E)): h_j = (n-2r)E, J_jk = E,
/// offset E(n + (n-2r)^2)/2. Value 2E(r - |x|)^2; minimum penalty 2E.
IsingModel build_ising_hamming(int n, int r, const Rational& scale);

/// Largest E keeping b_j >= -B and c_jk <= C:
/// E = min(B/(2r-1), C/2), penalty gap E. Interior weights only.
ScaleResult optimal_qubo_scale(int n, int r, const CoefficientBounds& bounds);

/// Largest E keeping -h_min <= h_j <= h_max and J_jk <= J_max:
///   r = n/2: E = J_max
///   r < n/2: E = min(J_max, h_max/(n-2r))
///   r > n/2: E = min(J_max, h_min/(2r-n))
/// Penalty gap 2E. Interior weights only.
ScaleResult optimal_ising_scale(int n, int r, const CoefficientBounds& bounds);

const char* to_string(BindingBound binding);
const char* to_string(ModelKind kind);

}  // namespace hampen

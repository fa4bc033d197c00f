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

#include "hampen/builders.hpp"

namespace hampen {

namespace {

void check_weight(int n, int r) {
    if (r < 0 || r > n) throw DomainError("target weight out of range");
}

void check_interior_weight(int n, int r) {
    if (r < 1 || r > n - 1)
        throw DomainError(
            "optimal scale selection is established for 1 <= r <= n-1 only");
}

void check_scale(const Rational& scale) {
    if (scale <= 0) throw DomainError("energy scale must be positive");
}

}  // namespace

CoefficientBounds CoefficientBounds::for_qubo(Rational B, Rational C) {
    if (B <= 0 || C <= 0) throw DomainError("bounds must be positive");
    CoefficientBounds out;
    out.kind = ModelKind::qubo;
    out.B = std::move(B);
    out.C = std::move(C);
    return out;
}

CoefficientBounds CoefficientBounds::for_ising(Rational h_min, Rational h_max,
                                               Rational J_max) {
    if (h_min <= 0 || h_max <= 0 || J_max <= 0)
        throw DomainError("bounds must be positive");
    CoefficientBounds out;
    out.kind = ModelKind::ising;
    out.h_min = std::move(h_min);
    out.h_max = std::move(h_max);
    out.J_max = std::move(J_max);
    return out;
}

Qubo build_qubo_hamming(int n, int r, const Rational& scale) {
    if (n < 1) throw DomainError("model needs at least one variable");
    check_weight(n, r);
    check_scale(scale);
    Qubo q(n);
    q.set_offset(Rational(r) * r * scale);
    const Rational linear = -(2 * Rational(r) - 1) * scale;
    for (int j = 0; j < n; ++j) q.set_linear(j, linear);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) q.set_quadratic(j, k, 2 * scale);
    return q;
}

IsingModel build_ising_hamming(int n, int r, const Rational& scale) {
    if (n < 2) throw DomainError("Ising penalty model needs at least two spins");
    check_weight(n, r);
    check_scale(scale);
    IsingModel m(n);
    const Rational width = Rational(n) - 2 * r;
    m.set_offset((Rational(n) + width * width) / 2 * scale);
    for (int j = 0; j < n; ++j) m.set_bias(j, width * scale);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) m.set_coupling(j, k, scale);
    return m;
}

ScaleResult optimal_qubo_scale(int n, int r, const CoefficientBounds& bounds) {
    check_interior_weight(n, r);
    if (bounds.kind != ModelKind::qubo)
        throw DomainError("QUBO scale selection needs QUBO bounds");

    const Rational from_linear = bounds.B / (2 * Rational(r) - 1);
    const Rational from_quadratic = bounds.C / 2;
    ScaleResult result;
    if (from_linear < from_quadratic) {
        result.scale = from_linear;
        result.binding = BindingBound::linear;
    } else if (from_quadratic < from_linear) {
        result.scale = from_quadratic;
        result.binding = BindingBound::quadratic;
    } else {
        result.scale = from_linear;
        result.binding = BindingBound::tie;
    }
    result.gap = result.scale;
    return result;
}

ScaleResult optimal_ising_scale(int n, int r, const CoefficientBounds& bounds) {
    check_interior_weight(n, r);
    if (bounds.kind != ModelKind::ising)
        throw DomainError("Ising scale selection needs Ising bounds");

    ScaleResult result;
    if (2 * r == n) {
        result.scale = bounds.J_max;
        result.binding = BindingBound::quadratic;
    } else {
        const Rational from_bias = 2 * r < n
                                       ? bounds.h_max / (Rational(n) - 2 * r)
                                       : bounds.h_min / (2 * Rational(r) - n);
        if (from_bias < bounds.J_max) {
            result.scale = from_bias;
            result.binding = BindingBound::linear;
        } else if (bounds.J_max < from_bias) {
            result.scale = bounds.J_max;
            result.binding = BindingBound::quadratic;
        } else {
            result.scale = bounds.J_max;
            result.binding = BindingBound::tie;
        }
    }
    result.gap = 2 * result.scale;
    return result;
}

const char* to_string(BindingBound binding) {
    switch (binding) {
        case BindingBound::linear: return "linear";
        case BindingBound::quadratic: return "quadratic";
        case BindingBound::tie: return "tie";
    }
    return "?";
}

const char* to_string(ModelKind kind) {
    return kind == ModelKind::qubo ? "qubo" : "ising";
}

}  // namespace hampen

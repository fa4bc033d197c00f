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

#include "hampen/certify.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "hampen/profile.hpp"

namespace hampen {

namespace {

constexpr int kLpGuard = 12;  // 2^12 value rows

void check_lp_size(int n, int r) {
    if (n < 2 || n > kLpGuard)
        throw CapacityError("gap LP construction is limited to 2 <= n <= 12");
    if (r < 1 || r > n - 1)
        throw DomainError("gap LP needs an interior target weight");
}

}  // namespace

LinearProgram build_gap_lp(int n, int r, const CoefficientBounds& bounds,
                           bool two_sided) {
    check_lp_size(n, r);

    LinearProgram lp;
    const bool qubo = bounds.kind == ModelKind::qubo;
    lp.variables.push_back(qubo ? "a" : "E0");
    for (int j = 0; j < n; ++j)
        lp.variables.push_back((qubo ? "b_" : "h_") + std::to_string(j));
    std::vector<std::vector<int>> pair_var(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            pair_var[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                static_cast<int>(lp.variables.size());
            lp.variables.push_back((qubo ? "c_" : "J_") + std::to_string(j) +
                                   "," + std::to_string(k));
        }
    const int g_var = static_cast<int>(lp.variables.size());
    lp.variables.push_back("g");
    lp.objective_variable = g_var;

    const std::size_t nvars = lp.variables.size();

    // One value row per assignment: equality (= 0) on the weight-r class,
    // value >= g elsewhere.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        LinearProgram::Row row;
        row.coeffs.assign(nvars, 0.0);
        row.coeffs[0] = 1.0;  // offset
        for (int j = 0; j < n; ++j) {
            const bool set = (mask >> j) & 1u;
            row.coeffs[static_cast<std::size_t>(1 + j)] =
                qubo ? (set ? 1.0 : 0.0) : (set ? 1.0 : -1.0);
        }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const bool sj = (mask >> j) & 1u, sk = (mask >> k) & 1u;
                const std::size_t v = static_cast<std::size_t>(
                    pair_var[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
                row.coeffs[v] = qubo ? (sj && sk ? 1.0 : 0.0)
                                     : (sj == sk ? 1.0 : -1.0);
            }
        if (std::popcount(mask) == r) {
            row.relation = LinearProgram::Relation::eq;
        } else {
            row.coeffs[static_cast<std::size_t>(g_var)] = -1.0;
            row.relation = LinearProgram::Relation::ge;
        }
        row.rhs = 0.0;
        lp.rows.push_back(std::move(row));
    }

    auto single = [&](int var, LinearProgram::Relation rel, double rhs) {
        LinearProgram::Row row;
        row.coeffs.assign(nvars, 0.0);
        row.coeffs[static_cast<std::size_t>(var)] = 1.0;
        row.relation = rel;
        row.rhs = rhs;
        lp.rows.push_back(std::move(row));
    };

    if (qubo) {
        const double B = static_cast<double>(bounds.B);
        const double C = static_cast<double>(bounds.C);
        for (int j = 0; j < n; ++j)
            single(1 + j, LinearProgram::Relation::ge, -B);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                single(pair_var[static_cast<std::size_t>(j)]
                               [static_cast<std::size_t>(k)],
                       LinearProgram::Relation::le, C);
        if (two_sided) {
            for (int j = 0; j < n; ++j)
                single(1 + j, LinearProgram::Relation::le, B);
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    single(pair_var[static_cast<std::size_t>(j)]
                                   [static_cast<std::size_t>(k)],
                           LinearProgram::Relation::ge, -C);
        }
    } else {
        const double h_min = static_cast<double>(bounds.h_min);
        const double h_max = static_cast<double>(bounds.h_max);
        const double J_max = static_cast<double>(bounds.J_max);
        for (int j = 0; j < n; ++j) {
            single(1 + j, LinearProgram::Relation::ge, -h_min);
            single(1 + j, LinearProgram::Relation::le, h_max);
        }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                single(pair_var[static_cast<std::size_t>(j)]
                               [static_cast<std::size_t>(k)],
                       LinearProgram::Relation::le, J_max);
    }
    return lp;
}

OptimalityCertificate certify_optimality(int n, int r,
                                         const CoefficientBounds& bounds,
                                         bool two_sided) {
    OptimalityCertificate cert;
    cert.n = n;
    cert.r = r;
    cert.bounds = bounds;

    const bool qubo = bounds.kind == ModelKind::qubo;
    const ScaleResult closed = qubo ? optimal_qubo_scale(n, r, bounds)
                                    : optimal_ising_scale(n, r, bounds);
    cert.closed_form = closed.gap;

    const LinearProgram lp = build_gap_lp(n, r, bounds, two_sided);
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpSolution::Status::optimal)
        throw SolverError("gap LP did not solve to optimality");
    cert.lp_gap = sol.objective;
    cert.lp_iterations = sol.iterations;
    cert.abs_diff =
        std::abs(cert.lp_gap - static_cast<double>(cert.closed_form));
    cert.verdict = cert.abs_diff <= kLpTolerance;

    // Exact witness side: the concrete penalty model at the closed-form
    // scale must respect the bounds and realize the closed-form gap.
    if (qubo) {
        const Qubo model = build_qubo_hamming(n, r, closed.scale);
        cert.builder_feasible = true;
        for (const auto& b : model.linear())
            if (b < -bounds.B) cert.builder_feasible = false;
        for (const auto& [key, c] : model.quadratic())
            if (c > bounds.C) cert.builder_feasible = false;
        const PenaltyReport report = min_penalty(model, r);
        cert.builder_attains = report.ground_energy == 0 &&
                               report.exact_penalty &&
                               report.gap == closed.gap;
    } else {
        const IsingModel model = build_ising_hamming(n, r, closed.scale);
        cert.builder_feasible = true;
        for (const auto& h : model.biases())
            if (h < -bounds.h_min || h > bounds.h_max)
                cert.builder_feasible = false;
        for (const auto& [key, coupling] : model.couplings())
            if (coupling > bounds.J_max) cert.builder_feasible = false;
        const PenaltyReport report = min_penalty(model, r);
        cert.builder_attains = report.ground_energy == 0 &&
                               report.exact_penalty &&
                               report.gap == closed.gap;
    }
    return cert;
}

}  // namespace hampen

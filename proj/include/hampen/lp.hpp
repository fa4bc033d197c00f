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

#include <string>
#include <vector>

#include "hampen/errors.hpp"

namespace hampen {

/// Dense linear program over free variables; the objective maximizes a
/// single designated variable.
struct LinearProgram {
    enum class Relation { eq, ge, le };

    struct Row {
        std::vector<double> coeffs;  // one per variable
        Relation relation = Relation::eq;
        double rhs = 0.0;
    };

    std::vector<std::string> variables;
    int objective_variable = -1;
    std::vector<Row> rows;
};

struct LpSolution {
    enum class Status { optimal, unbounded, infeasible };

    Status status = Status::infeasible;
    double objective = 0.0;
    std::vector<double> assignment;  // one value per LP variable
    int iterations = 0;
};

inline constexpr double kLpTolerance = 1e-9;

/// Two-phase dense tableau simplex with Bland's anti-cycling pivot rule.
/// Deterministic; feasibility and optimality tolerance kLpTolerance.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace hampen

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

#include <cmath>
#include <cstddef>
#include <vector>

#include "hampen/lp.hpp"

namespace hampen {

namespace {

// Two-phase dense tableau simplex, minimization form. Free variables are
// split as x = x+ - x-; Bland's rule on both the entering and leaving
// choices keeps the walk finite and deterministic.
class Tableau {
 public:
    Tableau(const LinearProgram& lp) {
        const std::size_t nvars = lp.variables.size();
        nstruct_ = 2 * nvars;

        // Column layout: structural pairs, then one slack/surplus per
        // inequality row, then artificials for ge/eq rows.
        std::size_t nslack = 0, nart = 0;
        for (const auto& row : lp.rows) {
            if (row.relation != LinearProgram::Relation::eq) ++nslack;
            // Normalization can turn ge into le and vice versa, so the
            // artificial count is settled while filling in the rows below.
        }
        ncols_ = nstruct_ + nslack;  // artificials appended later
        rows_.reserve(lp.rows.size());

        std::size_t slack_index = nstruct_;
        std::vector<int> needs_artificial;
        for (const auto& row : lp.rows) {
            if (row.coeffs.size() != nvars)
                throw SolverError("LP row width does not match variable count");
            std::vector<double> dense(ncols_, 0.0);
            double rhs = row.rhs;
            double sign = 1.0;
            auto rel = row.relation;
            if (rhs < 0.0) {
                sign = -1.0;
                rhs = -rhs;
                if (rel == LinearProgram::Relation::ge)
                    rel = LinearProgram::Relation::le;
                else if (rel == LinearProgram::Relation::le)
                    rel = LinearProgram::Relation::ge;
            }
            for (std::size_t v = 0; v < nvars; ++v) {
                dense[2 * v] = sign * row.coeffs[v];
                dense[2 * v + 1] = -sign * row.coeffs[v];
            }
            if (row.relation != LinearProgram::Relation::eq) {
                dense[slack_index] =
                    rel == LinearProgram::Relation::le ? 1.0 : -1.0;
                ++slack_index;
            }
            const int r = static_cast<int>(rows_.size());
            if (rel != LinearProgram::Relation::le) needs_artificial.push_back(r);
            rows_.push_back(std::move(dense));
            rhs_.push_back(rhs);
            basis_.push_back(-1);
            if (rel == LinearProgram::Relation::le)
                basis_.back() = static_cast<int>(slack_index - 1);
        }

        nart = needs_artificial.size();
        art_begin_ = ncols_;
        ncols_ += nart;
        for (auto& dense : rows_) dense.resize(ncols_, 0.0);
        for (std::size_t i = 0; i < needs_artificial.size(); ++i) {
            const int r = needs_artificial[i];
            const std::size_t col = art_begin_ + i;
            rows_[static_cast<std::size_t>(r)][col] = 1.0;
            basis_[static_cast<std::size_t>(r)] = static_cast<int>(col);
        }
        active_.assign(rows_.size(), true);
    }

    LpSolution solve(const LinearProgram& lp) {
        LpSolution solution;

        // Phase 1: drive the artificials to zero.
        std::vector<double> phase1_cost(ncols_, 0.0);
        for (std::size_t c = art_begin_; c < ncols_; ++c) phase1_cost[c] = 1.0;
        set_objective(phase1_cost);
        if (!iterate(&solution.iterations))
            throw SolverError("phase 1 reported an unbounded auxiliary LP");
        if (objective_value() > kLpTolerance) {
            solution.status = LpSolution::Status::infeasible;
            return solution;
        }
        purge_artificials();

        // Phase 2: minimize the negated objective variable.
        std::vector<double> phase2_cost(ncols_, 0.0);
        phase2_cost[2 * static_cast<std::size_t>(lp.objective_variable)] = -1.0;
        phase2_cost[2 * static_cast<std::size_t>(lp.objective_variable) + 1] = 1.0;
        set_objective(phase2_cost);
        if (!iterate(&solution.iterations)) {
            solution.status = LpSolution::Status::unbounded;
            return solution;
        }

        solution.status = LpSolution::Status::optimal;
        std::vector<double> cols(ncols_, 0.0);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (active_[r] && basis_[r] >= 0)
                cols[static_cast<std::size_t>(basis_[r])] = rhs_[r];
        solution.assignment.resize(lp.variables.size());
        for (std::size_t v = 0; v < lp.variables.size(); ++v)
            solution.assignment[v] = cols[2 * v] - cols[2 * v + 1];
        solution.objective =
            solution.assignment[static_cast<std::size_t>(lp.objective_variable)];
        return solution;
    }

 private:
    void set_objective(const std::vector<double>& cost) {
        blocked_.assign(ncols_, false);
        for (std::size_t c = art_begin_; c < ncols_; ++c)
            if (cost[c] == 0.0) blocked_[c] = true;  // phase 2 never re-enters
        obj_ = cost;
        obj_rhs_ = 0.0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!active_[r]) continue;
            const double cb = cost[static_cast<std::size_t>(basis_[r])];
            if (cb == 0.0) continue;
            for (std::size_t c = 0; c < ncols_; ++c)
                obj_[c] -= cb * rows_[r][c];
            obj_rhs_ -= cb * rhs_[r];
        }
    }

    double objective_value() const { return -obj_rhs_; }

    // Returns false on unboundedness.
    bool iterate(int* iterations) {
        for (;;) {
            int entering = -1;
            for (std::size_t c = 0; c < ncols_; ++c) {
                if (blocked_[c]) continue;
                if (obj_[c] < -kLpTolerance) {
                    entering = static_cast<int>(c);
                    break;
                }
            }
            if (entering < 0) return true;

            int leaving = -1;
            double best_ratio = 0.0;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (!active_[r]) continue;
                const double a = rows_[r][static_cast<std::size_t>(entering)];
                if (a <= kLpTolerance) continue;
                const double ratio = rhs_[r] / a;
                if (leaving < 0 || ratio < best_ratio - kLpTolerance ||
                    (std::abs(ratio - best_ratio) <= kLpTolerance &&
                     basis_[r] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(static_cast<std::size_t>(leaving),
                  static_cast<std::size_t>(entering));
            ++*iterations;
            if (*iterations > 2000000)
                throw SolverError("simplex iteration limit exceeded");
        }
    }

    void pivot(std::size_t prow, std::size_t pcol) {
        const double p = rows_[prow][pcol];
        if (std::abs(p) < kLpTolerance)
            throw SolverError("numerically singular pivot element");
        const double inv = 1.0 / p;
        for (std::size_t c = 0; c < ncols_; ++c) rows_[prow][c] *= inv;
        rhs_[prow] *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == prow || !active_[r]) continue;
            const double factor = rows_[r][pcol];
            if (factor == 0.0) continue;
            for (std::size_t c = 0; c < ncols_; ++c)
                rows_[r][c] -= factor * rows_[prow][c];
            rhs_[r] -= factor * rhs_[prow];
        }
        const double factor = obj_[pcol];
        if (factor != 0.0) {
            for (std::size_t c = 0; c < ncols_; ++c)
                obj_[c] -= factor * rows_[prow][c];
            obj_rhs_ -= factor * rhs_[prow];
        }
        basis_[prow] = static_cast<int>(pcol);
    }

    // Basic artificials left at level zero are pivoted onto any real column;
    // fully zero rows are redundant and dropped.
    void purge_artificials() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!active_[r]) continue;
            if (static_cast<std::size_t>(basis_[r]) < art_begin_) continue;
            std::size_t col = art_begin_;
            for (std::size_t c = 0; c < art_begin_; ++c) {
                if (std::abs(rows_[r][c]) > kLpTolerance) {
                    col = c;
                    break;
                }
            }
            if (col < art_begin_)
                pivot(r, col);
            else
                active_[r] = false;
        }
    }

    std::size_t nstruct_ = 0;
    std::size_t ncols_ = 0;
    std::size_t art_begin_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<double> rhs_;
    std::vector<int> basis_;
    std::vector<bool> active_;
    std::vector<double> obj_;
    double obj_rhs_ = 0.0;
    std::vector<bool> blocked_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    if (lp.variables.empty() || lp.objective_variable < 0 ||
        static_cast<std::size_t>(lp.objective_variable) >= lp.variables.size())
        throw SolverError("LP objective variable is not set");
    Tableau tableau(lp);
    return tableau.solve(lp);
}

}  // namespace hampen

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

#include <set>
#include <vector>

#include "hampen/model.hpp"
#include "hampen/profile.hpp"

namespace hampen {

/// Graph with one edge per nonzero quadratic coefficient.
struct InteractionGraph {
    int n = 0;
    std::set<PairKey> edges;

    bool complete() const {
        return static_cast<long long>(edges.size()) ==
               static_cast<long long>(n) * (n - 1) / 2;
    }
};

InteractionGraph interaction_graph(const Model& model);

/// A weight r-1 or r+1 string with objective value <= 0, guaranteed to exist
/// for any QUBO that vanishes on the weight-r class but whose interaction
/// graph misses an edge. The value is exactly 0 whenever the model is
/// nonnegative everywhere.
struct ZeroWitness {
    Bitstring witness{1, 0};
    Rational value;
};

ZeroWitness sparse_zero_witness(const Qubo& model, int r);

/// Permutation group on {0..n-1} given by generators in one-line notation.
class PermutationGroup {
 public:
    PermutationGroup(int n, std::vector<std::vector<int>> generators);

    /// The full symmetric group S_n; symmetrization takes a closed-form
    /// path for it and the closure is never materialized.
    static PermutationGroup full_symmetric(int n);

    int degree() const { return n_; }
    bool is_full_symmetric() const { return full_symmetric_; }
    const std::vector<std::vector<int>>& generators() const {
        return generators_;
    }

    /// Materialized closure (identity included). Guarded at 10^6 elements.
    std::vector<std::vector<int>> closure() const;

 private:
    int n_;
    bool full_symmetric_ = false;
    std::vector<std::vector<int>> generators_;
};

inline constexpr std::size_t kClosureGuard = 1000000;

/// Group averaging (Reynolds operator) on the coefficient orbits; the offset
/// is untouched. The result is invariant under every group element.
Qubo symmetrize(const Qubo& model, const PermutationGroup& group);
IsingModel symmetrize(const IsingModel& model, const PermutationGroup& group);
Model symmetrize(const Model& model, const PermutationGroup& group);

/// True iff every generator maps the exact ground set onto itself.
bool check_ground_invariance(const Model& model, const PermutationGroup& group);

/// Relabels variables: position j of the input becomes position perm[j].
Qubo permute_variables(const Qubo& model, const std::vector<int>& perm);
IsingModel permute_variables(const IsingModel& model,
                             const std::vector<int>& perm);

}  // namespace hampen

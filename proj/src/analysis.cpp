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

#include "hampen/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hampen {

namespace {

void check_permutation(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        throw DomainError("permutation degree does not match");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw DomainError("generator is not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<int> identity_permutation(int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) id[static_cast<std::size_t>(j)] = j;
    return id;
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1)
        out |= std::uint32_t{1}
               << perm[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
}

// Shared averaging over (linear, quadratic) coefficient orbits; the offset
// is G-invariant and stays put.
struct AveragedCoefficients {
    std::vector<Rational> linear;
    QuadraticMap quadratic;
};

AveragedCoefficients average(int n, const std::vector<Rational>& linear,
                             const QuadraticMap& quadratic,
                             const PermutationGroup& group) {
    if (group.degree() != n)
        throw DimensionError("group degree does not match model size");

    AveragedCoefficients out;
    out.linear.assign(static_cast<std::size_t>(n), Rational{});

    if (group.is_full_symmetric()) {
        // Closed form: every index (resp. pair) orbit is the whole set.
        Rational linear_sum;
        for (const auto& b : linear) linear_sum += b;
        const Rational mean_linear = linear_sum / n;
        for (auto& b : out.linear) b = mean_linear;

        if (n >= 2) {
            Rational quad_sum;
            for (const auto& [key, c] : quadratic) quad_sum += c;
            const Rational mean_quad = quad_sum / (Rational(n) * (n - 1) / 2);
            if (mean_quad != 0)
                for (int j = 0; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        out.quadratic[{j, k}] = mean_quad;
        }
        return out;
    }

    const auto elements = group.closure();
    for (const auto& perm : elements) {
        for (int j = 0; j < n; ++j)
            out.linear[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] +=
                linear[static_cast<std::size_t>(j)];
        for (const auto& [key, c] : quadratic) {
            int a = perm[static_cast<std::size_t>(key.first)];
            int b = perm[static_cast<std::size_t>(key.second)];
            if (a > b) std::swap(a, b);
            out.quadratic[{a, b}] += c;
        }
    }
    const Rational order = static_cast<int>(elements.size());
    for (auto& b : out.linear) b /= order;
    for (auto it = out.quadratic.begin(); it != out.quadratic.end();) {
        it->second /= order;
        it = it->second == 0 ? out.quadratic.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace

InteractionGraph interaction_graph(const Model& model) {
    InteractionGraph graph;
    graph.n = model_size(model);
    const QuadraticMap& quad =
        std::holds_alternative<Qubo>(model)
            ? std::get<Qubo>(model).quadratic()
            : std::get<IsingModel>(model).couplings();
    for (const auto& [key, c] : quad)
        if (c != 0) graph.edges.insert(key);
    return graph;
}

ZeroWitness sparse_zero_witness(const Qubo& model, int r) {
    const int n = model.size();
    if (n > kEnumerationGuard)
        throw CapacityError("witness search is limited to 24 variables");
    if (r < 1 || r > n - 1)
        throw DomainError("witness search needs an interior target weight");
    if (interaction_graph(Model{model}).complete())
        throw DomainError(
            "interaction graph is complete; no zero witness is implied");

    const WeightClassScan target = scan_weight_class(Model{model}, r);
    if (target.minimum != 0 || target.maximum != 0)
        throw DomainError("model does not vanish on the weight-r class");

    const WeightClassScan below = scan_weight_class(Model{model}, r - 1);
    const WeightClassScan above = scan_weight_class(Model{model}, r + 1);

    ZeroWitness result;
    if (below.minimum < above.minimum ||
        (below.minimum == above.minimum && below.argmin.lex_less(above.argmin))) {
        result.value = below.minimum;
        result.witness = below.argmin;
    } else {
        result.value = above.minimum;
        result.witness = above.argmin;
    }
    return result;
}

PermutationGroup::PermutationGroup(int n,
                                   std::vector<std::vector<int>> generators)
    : n_(n), generators_(std::move(generators)) {
    if (n < 1) throw DomainError("group degree must be positive");
    for (const auto& gen : generators_) check_permutation(gen, n);
}

PermutationGroup PermutationGroup::full_symmetric(int n) {
    // Generated by the transposition (0 1) and the n-cycle.
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
        auto swap01 = identity_permutation(n);
        std::swap(swap01[0], swap01[1]);
        gens.push_back(std::move(swap01));
        std::vector<int> cycle(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            cycle[static_cast<std::size_t>(j)] = (j + 1) % n;
        gens.push_back(std::move(cycle));
    }
    PermutationGroup group(n, std::move(gens));
    group.full_symmetric_ = true;
    return group;
}

std::vector<std::vector<int>> PermutationGroup::closure() const {
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> frontier;
    seen.insert(identity_permutation(n_));
    frontier.push_back(identity_permutation(n_));
    while (!frontier.empty()) {
        const auto current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : generators_) {
            std::vector<int> composed(static_cast<std::size_t>(n_));
            for (int j = 0; j < n_; ++j)
                composed[static_cast<std::size_t>(j)] =
                    gen[static_cast<std::size_t>(current[static_cast<std::size_t>(j)])];
            if (seen.insert(composed).second) {
                if (seen.size() > kClosureGuard)
                    throw CapacityError("group closure exceeds 10^6 elements");
                frontier.push_back(std::move(composed));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Qubo symmetrize(const Qubo& model, const PermutationGroup& group) {
    auto averaged =
        average(model.size(), model.linear(), model.quadratic(), group);
    Qubo out(model.size());
    out.set_offset(model.offset());
    for (int j = 0; j < model.size(); ++j)
        out.set_linear(j, std::move(averaged.linear[static_cast<std::size_t>(j)]));
    for (auto& [key, c] : averaged.quadratic)
        out.set_quadratic(key.first, key.second, std::move(c));
    return out;
}

IsingModel symmetrize(const IsingModel& model, const PermutationGroup& group) {
    auto averaged =
        average(model.size(), model.biases(), model.couplings(), group);
    IsingModel out(model.size());
    out.set_offset(model.offset());
    for (int j = 0; j < model.size(); ++j)
        out.set_bias(j, std::move(averaged.linear[static_cast<std::size_t>(j)]));
    for (auto& [key, c] : averaged.quadratic)
        out.set_coupling(key.first, key.second, std::move(c));
    return out;
}

Model symmetrize(const Model& model, const PermutationGroup& group) {
    if (const auto* q = std::get_if<Qubo>(&model))
        return symmetrize(*q, group);
    return symmetrize(std::get<IsingModel>(model), group);
}

bool check_ground_invariance(const Model& model,
                             const PermutationGroup& group) {
    if (group.degree() != model_size(model))
        throw DimensionError("group degree does not match model size");
    const std::vector<std::uint32_t> ground = ground_set(model);
    for (const auto& gen : group.generators()) {
        for (std::uint32_t mask : ground) {
            const std::uint32_t image = permute_mask(mask, gen);
            if (!std::binary_search(ground.begin(), ground.end(), image))
                return false;
        }
    }
    return true;
}

Qubo permute_variables(const Qubo& model, const std::vector<int>& perm) {
    check_permutation(perm, model.size());
    Qubo out(model.size());
    out.set_offset(model.offset());
    for (int j = 0; j < model.size(); ++j)
        out.set_linear(perm[static_cast<std::size_t>(j)],
                       model.linear()[static_cast<std::size_t>(j)]);
    for (const auto& [key, c] : model.quadratic())
        out.set_quadratic(perm[static_cast<std::size_t>(key.first)],
                          perm[static_cast<std::size_t>(key.second)], c);
    return out;
}

IsingModel permute_variables(const IsingModel& model,
                             const std::vector<int>& perm) {
    check_permutation(perm, model.size());
    IsingModel out(model.size());
    out.set_offset(model.offset());
    for (int j = 0; j < model.size(); ++j)
        out.set_bias(perm[static_cast<std::size_t>(j)],
                     model.biases()[static_cast<std::size_t>(j)]);
    for (const auto& [key, c] : model.couplings())
        out.set_coupling(perm[static_cast<std::size_t>(key.first)],
                         perm[static_cast<std::size_t>(key.second)], c);
    return out;
}

}  // namespace hampen

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

#include <doctest.h>

#include <numeric>

#include "hampen/analysis.hpp"
#include "hampen/builders.hpp"
#include "hampen/profile.hpp"
#include "testutil.hpp"

namespace hampen {
namespace {

using testing::Rng;

// Independent oracle: per-weight minima by direct evaluation of every
// assignment, no Gray-code or rescaling shortcuts.
std::vector<Rational> brute_force_minima(const Model& model) {
    const int n = model_size(model);
    std::vector<Rational> minima(static_cast<std::size_t>(n) + 1);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const Bitstring x(n, mask);
        const Rational v = model_value(model, x);
        const auto w = static_cast<std::size_t>(x.weight());
        if (!seen[w] || v < minima[w]) {
            seen[w] = true;
            minima[w] = v;
        }
    }
    return minima;
}

TEST_CASE("weight profile of the standard penalty models") {
    SUBCASE("quadratic weight-2 penalty on four bits") {
        const auto profile = weight_profile(Model{build_qubo_hamming(4, 2, 1)});
        CHECK(profile.minima == std::vector<Rational>{4, 1, 0, 1, 4});
        CHECK(profile.counts == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
        CHECK(profile.witnesses[2].str() == "0011");
    }
    SUBCASE("Ising weight-2 penalty on four spins") {
        const auto profile = weight_profile(Model{build_ising_hamming(4, 2, 1)});
        CHECK(profile.minima == std::vector<Rational>{8, 2, 0, 2, 8});
    }
    SUBCASE("constant model") {
        Qubo q(3);
        q.set_offset(5);
        const auto profile = weight_profile(Model{q});
        CHECK(profile.minima == std::vector<Rational>{5, 5, 5, 5});
        CHECK(profile.ground_set_size() == 8);
    }
    SUBCASE("enumeration guard") {
        CHECK_THROWS_AS(weight_profile(Model{Qubo(25)}), CapacityError);
    }
}

TEST_CASE("weight profile matches the brute-force oracle on random models") {
    Rng rng(7);
    std::uniform_int_distribution<int> size(1, 9);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = size(rng);
        const Model model = trial % 2 == 0
                                ? Model{testing::random_qubo(rng, n)}
                                : Model{testing::random_ising(rng, n)};
        const auto profile = weight_profile(model);
        const auto oracle = brute_force_minima(model);
        REQUIRE(profile.minima == oracle);
        for (int w = 0; w <= n; ++w) {
            const auto& witness = profile.witnesses[static_cast<std::size_t>(w)];
            CHECK(witness.weight() == w);
            CHECK(model_value(model, witness) ==
                  profile.minima[static_cast<std::size_t>(w)]);
        }
    }
}

TEST_CASE("profile is deterministic across worker counts") {
    Rng rng(99);
    const Qubo q = testing::random_qubo(rng, 17);
    const auto reference = weight_profile(Model{q}, 1);
    for (int workers : {2, 3, 8}) {
        const auto profile = weight_profile(Model{q}, workers);
        CHECK(profile.minima == reference.minima);
        CHECK(profile.counts == reference.counts);
        for (std::size_t w = 0; w < profile.witnesses.size(); ++w)
            CHECK(profile.witnesses[w] == reference.witnesses[w]);
    }
}

TEST_CASE("profile minima are invariant under variable relabeling") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6;
        const Qubo q = testing::random_qubo(rng, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto before = weight_profile(Model{q});
        const auto after = weight_profile(Model{permute_variables(q, perm)});
        CHECK(before.minima == after.minima);
        CHECK(before.counts == after.counts);
    }
}

TEST_CASE("min penalty worked examples") {
    SUBCASE("weight-1 penalty achieves gap E with an exact zero set") {
        const auto report = min_penalty(Model{build_qubo_hamming(3, 1, 1)}, 1);
        CHECK(report.gap == 1);
        CHECK(report.exact_penalty);
        CHECK(report.ground_energy == 0);
        CHECK(report.ground_set_size == 3);
    }
    SUBCASE("fractional scale") {
        const auto report =
            min_penalty(Model{build_qubo_hamming(5, 2, Rational(3, 2))}, 2);
        CHECK(report.gap == Rational(3, 2));
        CHECK(report.exact_penalty);
    }
    SUBCASE("missing edge breaks the penalty property") {
        Qubo q(3);
        q.set_offset(1);
        for (int j = 0; j < 3; ++j) q.set_linear(j, -1);
        q.set_quadratic(0, 2, 2);
        q.set_quadratic(1, 2, 2);
        const auto report = min_penalty(Model{q}, 1);
        CHECK_FALSE(report.exact_penalty);
        CHECK(report.witness.str() == "110");
        CHECK(report.witness.weight() != 1);
        CHECK(report.gap == -1);
        CHECK(q.value(report.witness) <= 0);
    }
    SUBCASE("weight out of range") {
        CHECK_THROWS_AS(min_penalty(Model{Qubo(3)}, 4), DomainError);
    }
}

TEST_CASE("standard builders keep gap E across scales including 7/3") {
    for (const Rational& scale : {Rational(1), Rational(1, 2), Rational(7, 3)}) {
        for (int n = 2; n <= 10; ++n) {
            for (int r = 1; r <= n - 1; ++r) {
                const auto report =
                    min_penalty(Model{build_qubo_hamming(n, r, scale)}, r);
                REQUIRE(report.gap == scale);
                REQUIRE(report.exact_penalty);
            }
        }
    }
}

TEST_CASE("spectral gap") {
    CHECK(spectral_gap(Model{build_qubo_hamming(3, 1, 1)}) == 1);
    CHECK(spectral_gap(Model{build_qubo_hamming(4, 2, 1)}) == 1);
    CHECK(spectral_gap(Model{build_ising_hamming(4, 2, 1)}) == 2);

    Qubo constant(3);
    constant.set_offset(7);
    CHECK_THROWS_AS(spectral_gap(Model{constant}), DomainError);

    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Qubo q = testing::random_qubo(rng, 6);
        q.set_linear(0, q.linear()[0] + 1);  // keep it non-constant
        CHECK(spectral_gap(Model{q}) > 0);
    }
}

TEST_CASE("weight class scan") {
    const Qubo q = build_qubo_hamming(4, 2, 1);
    const auto scan = scan_weight_class(Model{q}, 2);
    CHECK(scan.minimum == 0);
    CHECK(scan.maximum == 0);
    const auto scan1 = scan_weight_class(Model{q}, 1);
    CHECK(scan1.minimum == 1);
    CHECK(scan1.argmin.str() == "0001");
}

}  // namespace
}  // namespace hampen

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

#include "hampen/builders.hpp"
#include "hampen/model.hpp"
#include "testutil.hpp"

namespace hampen {
namespace {

using testing::Rng;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(format_rational(Rational(-4, 8)) == "-1/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("1.5"), FormatError);
    CHECK_THROWS_AS(parse_rational(""), FormatError);
    CHECK_THROWS_AS(parse_rational("1/-2"), FormatError);
}

TEST_CASE("bitstring basics") {
    const auto x = Bitstring::from_string("100");
    CHECK(x.size() == 3);
    CHECK(x.weight() == 1);
    CHECK(x.bit(0));
    CHECK_FALSE(x.bit(1));
    CHECK(x.str() == "100");
    CHECK(Bitstring::basis(3, 0) == x);
    CHECK(Bitstring::from_string("011").lex_less(x));
    CHECK_FALSE(x.lex_less(Bitstring::from_string("011")));
    CHECK(x.spin(0) == 1);
    CHECK(x.spin(1) == -1);
    CHECK_THROWS_AS(Bitstring::from_string("10x"), FormatError);
    CHECK_THROWS_AS(Bitstring::basis(3, 3), DomainError);
}

TEST_CASE("qubo evaluation") {
    const Qubo q1 = build_qubo_hamming(3, 1, 1);
    CHECK(q1.value(Bitstring::from_string("100")) == 0);
    CHECK(q1.value(Bitstring::from_string("000")) == 1);
    CHECK(q1.value(Bitstring::from_string("110")) == 1);

    const Qubo empty(4);
    for (std::uint32_t mask = 0; mask < 16; ++mask)
        CHECK(empty.value(Bitstring(4, mask)) == 0);

    const Qubo q2 = build_qubo_hamming(4, 2, 1);
    CHECK(q2.value(Bitstring::from_string("1111")) == 4);

    CHECK_THROWS_AS(q2.value(Bitstring::from_string("111")), DimensionError);
}

TEST_CASE("ising evaluation uses the bit 1 <-> spin +1 convention") {
    IsingModel m(2);
    m.set_bias(0, 1);
    // s_0 = +1 exactly when bit 0 is set.
    CHECK(m.value(Bitstring::from_string("10")) == 1);
    CHECK(m.value(Bitstring::from_string("00")) == -1);
    m.set_coupling(0, 1, Rational(1, 2));
    CHECK(m.value(Bitstring::from_string("11")) == Rational(3, 2));
    CHECK(m.value(Bitstring::from_string("10")) == Rational(1, 2));
}

TEST_CASE("qubo_to_ising worked examples") {
    SUBCASE("weight-1 penalty on two variables") {
        const Qubo q = build_qubo_hamming(2, 1, 1);
        const IsingModel m = qubo_to_ising(q);
        CHECK(m.offset() == Rational(1, 2));
        CHECK(m.biases()[0] == 0);
        CHECK(m.biases()[1] == 0);
        CHECK(m.coupling_at(0, 1) == Rational(1, 2));
        for (std::uint32_t mask = 0; mask < 4; ++mask)
            CHECK(m.value(Bitstring(2, mask)) == q.value(Bitstring(2, mask)));
    }
    SUBCASE("zero model") {
        const Qubo q(3);
        const IsingModel m = qubo_to_ising(q);
        CHECK(m == IsingModel(3));
    }
    SUBCASE("purely linear") {
        Qubo q(2);
        q.set_linear(0, 2);
        const IsingModel m = qubo_to_ising(q);
        CHECK(m.offset() == 1);
        CHECK(m.biases()[0] == 1);
        CHECK(m.biases()[1] == 0);
        CHECK(m.couplings().empty());
        for (std::uint32_t mask = 0; mask < 4; ++mask)
            CHECK(m.value(Bitstring(2, mask)) == q.value(Bitstring(2, mask)));
    }
}

TEST_CASE("ising_to_qubo worked examples") {
    SUBCASE("round trip recovers the exact coefficients") {
        const Qubo q = build_qubo_hamming(2, 1, 1);
        CHECK(ising_to_qubo(qubo_to_ising(q)) == q);
    }
    SUBCASE("zero model") { CHECK(ising_to_qubo(IsingModel(3)) == Qubo(3)); }
    SUBCASE("inverse of the conversion example") {
        IsingModel m(2);
        m.set_offset(Rational(1, 2));
        m.set_coupling(0, 1, Rational(1, 2));
        const Qubo q = ising_to_qubo(m);
        CHECK(q.offset() == 1);
        CHECK(q.linear()[0] == -1);
        CHECK(q.linear()[1] == -1);
        CHECK(q.quadratic_at(0, 1) == 2);
    }
}

TEST_CASE("conversion properties on random models") {
    Rng rng(20260823);
    std::uniform_int_distribution<int> size(2, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = size(rng);
        const Qubo q = testing::random_qubo(rng, n);
        const IsingModel m = qubo_to_ising(q);
        CHECK(ising_to_qubo(m) == q);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
            REQUIRE(m.value(Bitstring(n, mask)) == q.value(Bitstring(n, mask)));

        const IsingModel i = testing::random_ising(rng, n);
        CHECK(qubo_to_ising(ising_to_qubo(i)) == i);
    }
}

TEST_CASE("zero coefficients are never stored") {
    Qubo q(3);
    q.set_quadratic(0, 1, 1);
    q.set_quadratic(0, 1, 0);
    CHECK(q.quadratic().empty());
    q.set_quadratic(1, 0, Rational(1, 3));  // either index order
    CHECK(q.quadratic_at(0, 1) == Rational(1, 3));
}

}  // namespace
}  // namespace hampen

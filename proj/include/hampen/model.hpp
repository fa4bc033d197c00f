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

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "hampen/bitstring.hpp"
#include "hampen/rational.hpp"

namespace hampen {

using PairKey = std::pair<int, int>;  // (j, k) with j < k
using QuadraticMap = std::map<PairKey, Rational>;

/// Quadratic binary objective: offset + sum b_j x_j + sum_{j<k} c_jk x_j x_k
/// over x in {0,1}^n. Zero quadratic coefficients are never stored.
class Qubo {
 public:
    explicit Qubo(int n);

    int size() const { return n_; }
    const Rational& offset() const { return offset_; }
    const std::vector<Rational>& linear() const { return linear_; }
    const QuadraticMap& quadratic() const { return quadratic_; }

    void set_offset(Rational value) { offset_ = std::move(value); }
    void set_linear(int j, Rational value);
    /// Accepts either index order; stores (min, max). Setting zero erases.
    void set_quadratic(int j, int k, Rational value);
    const Rational& quadratic_at(int j, int k) const;  // zero when absent

    /// Exact objective value on a bitstring of matching length.
    Rational value(const Bitstring& x) const;

    bool operator==(const Qubo& other) const = default;

 private:
    int n_;
    Rational offset_;
    std::vector<Rational> linear_;
    QuadraticMap quadratic_;
};

/// Ising energy: offset + sum h_j s_j + sum_{j<k} J_jk s_j s_k over spins
/// s in {+1,-1}^n. Bitstrings map through the fixed convention s = 2x - 1.
class IsingModel {
 public:
    explicit IsingModel(int n);

    int size() const { return n_; }
    const Rational& offset() const { return offset_; }
    const std::vector<Rational>& biases() const { return biases_; }
    const QuadraticMap& couplings() const { return couplings_; }

    void set_offset(Rational value) { offset_ = std::move(value); }
    void set_bias(int j, Rational value);
    void set_coupling(int j, int k, Rational value);
    const Rational& coupling_at(int j, int k) const;

    Rational value(const Bitstring& x) const;

    bool operator==(const IsingModel& other) const = default;

 private:
    int n_;
    Rational offset_;
    std::vector<Rational> biases_;
    QuadraticMap couplings_;
};

/// Either representation; most analysis routines accept both.
using Model = std::variant<Qubo, IsingModel>;

/// Exact change of variables x = (s+1)/2:
///   J_jk = c_jk / 4,  h_j = b_j/2 + (sum_{k != j} c_jk)/4,
///   E0 = a + (sum b_j)/2 + (sum c_jk)/4.
IsingModel qubo_to_ising(const Qubo& q);

/// Exact inverse change of variables; round trips are coefficient identities.
Qubo ising_to_qubo(const IsingModel& m);

int model_size(const Model& model);
Rational model_value(const Model& model, const Bitstring& x);

/// Every model reduces to an equivalent Qubo for enumeration purposes.
Qubo as_qubo(const Model& model);

}  // namespace hampen

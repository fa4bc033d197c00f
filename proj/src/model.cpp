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

#include "hampen/model.hpp"

namespace hampen {

namespace {

const Rational kZero{};

void check_index(int j, int n) {
    if (j < 0 || j >= n) throw DomainError("variable index out of range");
}

PairKey ordered_key(int j, int k, int n) {
    check_index(j, n);
    check_index(k, n);
    if (j == k) throw DomainError("quadratic term needs two distinct indices");
    return j < k ? PairKey{j, k} : PairKey{k, j};
}

void set_sparse(QuadraticMap& map, PairKey key, Rational value) {
    if (value == 0)
        map.erase(key);
    else
        map[key] = std::move(value);
}

void check_length(int model_n, const Bitstring& x) {
    if (x.size() != model_n)
        throw DimensionError("assignment length does not match model size");
}

}  // namespace

Qubo::Qubo(int n) : n_(n), linear_(static_cast<std::size_t>(n)) {
    if (n < 1) throw DomainError("model needs at least one variable");
}

void Qubo::set_linear(int j, Rational value) {
    check_index(j, n_);
    linear_[static_cast<std::size_t>(j)] = std::move(value);
}

void Qubo::set_quadratic(int j, int k, Rational value) {
    set_sparse(quadratic_, ordered_key(j, k, n_), std::move(value));
}

const Rational& Qubo::quadratic_at(int j, int k) const {
    auto it = quadratic_.find(ordered_key(j, k, n_));
    return it == quadratic_.end() ? kZero : it->second;
}

Rational Qubo::value(const Bitstring& x) const {
    check_length(n_, x);
    Rational total = offset_;
    for (int j = 0; j < n_; ++j)
        if (x.bit(j)) total += linear_[static_cast<std::size_t>(j)];
    for (const auto& [key, coeff] : quadratic_)
        if (x.bit(key.first) && x.bit(key.second)) total += coeff;
    return total;
}

IsingModel::IsingModel(int n) : n_(n), biases_(static_cast<std::size_t>(n)) {
    if (n < 1) throw DomainError("model needs at least one spin");
}

void IsingModel::set_bias(int j, Rational value) {
    check_index(j, n_);
    biases_[static_cast<std::size_t>(j)] = std::move(value);
}

void IsingModel::set_coupling(int j, int k, Rational value) {
    set_sparse(couplings_, ordered_key(j, k, n_), std::move(value));
}

const Rational& IsingModel::coupling_at(int j, int k) const {
    auto it = couplings_.find(ordered_key(j, k, n_));
    return it == couplings_.end() ? kZero : it->second;
}

Rational IsingModel::value(const Bitstring& x) const {
    check_length(n_, x);
    Rational total = offset_;
    for (int j = 0; j < n_; ++j) {
        const auto& h = biases_[static_cast<std::size_t>(j)];
        total += x.bit(j) ? h : -h;
    }
    for (const auto& [key, coeff] : couplings_) {
        const bool aligned = x.bit(key.first) == x.bit(key.second);
        total += aligned ? coeff : -coeff;
    }
    return total;
}

IsingModel qubo_to_ising(const Qubo& q) {
    const int n = q.size();
    IsingModel out(n);

    Rational offset = q.offset();
    std::vector<Rational> biases(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& b = q.linear()[static_cast<std::size_t>(j)];
        biases[static_cast<std::size_t>(j)] = b / 2;
        offset += b / 2;
    }
    for (const auto& [key, c] : q.quadratic()) {
        out.set_coupling(key.first, key.second, c / 4);
        biases[static_cast<std::size_t>(key.first)] += c / 4;
        biases[static_cast<std::size_t>(key.second)] += c / 4;
        offset += c / 4;
    }
    for (int j = 0; j < n; ++j)
        out.set_bias(j, std::move(biases[static_cast<std::size_t>(j)]));
    out.set_offset(std::move(offset));
    return out;
}

Qubo ising_to_qubo(const IsingModel& m) {
    const int n = m.size();
    Qubo out(n);

    Rational offset = m.offset();
    std::vector<Rational> linear(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& h = m.biases()[static_cast<std::size_t>(j)];
        linear[static_cast<std::size_t>(j)] = 2 * h;
        offset -= h;
    }
    for (const auto& [key, coupling] : m.couplings()) {
        out.set_quadratic(key.first, key.second, 4 * coupling);
        linear[static_cast<std::size_t>(key.first)] -= 2 * coupling;
        linear[static_cast<std::size_t>(key.second)] -= 2 * coupling;
        offset += coupling;
    }
    for (int j = 0; j < n; ++j)
        out.set_linear(j, std::move(linear[static_cast<std::size_t>(j)]));
    out.set_offset(std::move(offset));
    return out;
}

int model_size(const Model& model) {
    return std::visit([](const auto& m) { return m.size(); }, model);
}

Rational model_value(const Model& model, const Bitstring& x) {
    return std::visit([&](const auto& m) { return m.value(x); }, model);
}

Qubo as_qubo(const Model& model) {
    if (const auto* q = std::get_if<Qubo>(&model)) return *q;
    return ising_to_qubo(std::get<IsingModel>(model));
}

}  // namespace hampen

# Copyright 2026 The hampen developers
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

import json
from fractions import Fraction

import pytest

import hampen


def test_builder_and_evaluation():
    q = hampen.build_qubo_hamming(3, 1, "1")
    assert q.offset() == "1"
    assert q.linear(0) == "-1"
    assert q.quadratic(0, 1) == "2"
    assert q.value("100") == "0"
    assert q.value("000") == "1"
    assert q.value("110") == "1"


def test_rationals_cross_as_exact_fractions():
    q = hampen.build_qubo_hamming(5, 2, "1/3")
    assert Fraction(q.value("11111")) == Fraction(1, 3) * 9


def test_conversion_round_trip():
    q = hampen.build_qubo_hamming(4, 2, "2")
    m = hampen.qubo_to_ising(q)
    assert m.coupling(0, 1) == "1"
    assert hampen.ising_to_qubo(m) == q


def test_json_round_trip():
    q = hampen.build_qubo_hamming(3, 1, "1")
    doc = json.loads(q.to_json())
    assert doc["kind"] == "qubo"
    assert hampen.model_from_json(q.to_json()) == q


def test_min_penalty_report():
    report = hampen.min_penalty(hampen.build_qubo_hamming(4, 2, "1"), 2)
    assert report["gap"] == "1"
    assert report["exact_penalty"] is True
    assert report["ground_set_size"] == 6


def test_optimal_scales():
    assert hampen.optimal_qubo_scale(3, 1, "1", "4")["E"] == "1"
    assert hampen.optimal_ising_scale(4, 2, "1", "1", "3")["E"] == "3"


def test_certificates():
    cert = hampen.certify_qubo(5, 2, "1", "1")
    assert cert["closed_form"] == "1/3"
    assert cert["verdict"] == "pass"
    assert cert["builder_attains"] is True
    assert hampen.certify_ising(4, 2, "10", "10", "1")["closed_form"] == "2"


def test_spectral_gap_and_profile():
    m = hampen.build_ising_hamming(4, 2, "1")
    assert hampen.spectral_gap(m) == "2"
    profile = hampen.weight_profile(m)
    assert profile["minima"] == ["8", "2", "0", "2", "8"]


def test_sparse_zero_witness():
    q = hampen.Qubo(3)
    q.set_offset("1")
    for j in range(3):
        q.set_linear(j, "-1")
    q.set_quadratic(0, 2, "2")
    q.set_quadratic(1, 2, "2")
    witness = hampen.sparse_zero_witness(q, 1)
    assert witness == {"witness": "110", "value": "-1"}


def test_symmetrize():
    m = hampen.IsingModel(3)
    m.set_bias(0, "3")
    m.set_bias(1, "1")
    m.set_bias(2, "2")
    averaged = hampen.symmetrize(m, "S_n")
    assert all(averaged.bias(j) == "2" for j in range(3))
    assert hampen.check_ground_invariance(averaged, "S_n") is True


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        hampen.build_qubo_hamming(3, 4, "1")
    with pytest.raises(ValueError):
        hampen.Qubo(3).set_offset("1/0")

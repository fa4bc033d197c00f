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

"""Exact penalty models isolating bitstrings of a fixed Hamming weight.

All rationals cross the boundary as lowest-terms "p/q" strings; feed them
to fractions.Fraction for exact arithmetic on the python side.
"""

from hampen._core import (
    CapacityError,
    DimensionError,
    DomainError,
    FormatError,
    IsingModel,
    Qubo,
    SolverError,
    build_ising_hamming,
    build_qubo_hamming,
    certify_ising,
    certify_qubo,
    check_ground_invariance,
    interaction_edges,
    ising_to_qubo,
    min_penalty,
    model_from_json,
    optimal_ising_scale,
    optimal_qubo_scale,
    qubo_to_ising,
    sparse_zero_witness,
    spectral_gap,
    symmetrize,
    weight_profile,
)

__all__ = [
    "CapacityError",
    "DimensionError",
    "DomainError",
    "FormatError",
    "IsingModel",
    "Qubo",
    "SolverError",
    "build_ising_hamming",
    "build_qubo_hamming",
    "certify_ising",
    "certify_qubo",
    "check_ground_invariance",
    "interaction_edges",
    "ising_to_qubo",
    "min_penalty",
    "model_from_json",
    "optimal_ising_scale",
    "optimal_qubo_scale",
    "qubo_to_ising",
    "sparse_zero_witness",
    "spectral_gap",
    "symmetrize",
    "weight_profile",
]

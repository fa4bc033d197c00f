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

#include <stdexcept>
#include <string>

namespace hampen {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Assignment length does not match the model size.
struct DimensionError : Error {
    using Error::Error;
};

/// Argument outside its documented range (weights, scales, bounds).
struct DomainError : Error {
    using Error::Error;
};

/// Problem size exceeds an enumeration or closure guard.
struct CapacityError : Error {
    using Error::Error;
};

/// Malformed input file or serialized value.
struct FormatError : Error {
    using Error::Error;
};

/// Numerical breakdown inside the LP solver.
struct SolverError : Error {
    using Error::Error;
};

}  // namespace hampen

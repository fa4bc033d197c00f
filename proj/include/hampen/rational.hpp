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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hampen/errors.hpp"

namespace hampen {

// All model coefficients and energies are exact rationals; no rounding
// anywhere outside the LP solver.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a lowest-terms "p/q" string ("3", "-1/2"). Rejects empty strings,
/// zero denominators and anything that is not an optionally signed integer
/// or integer fraction.
Rational parse_rational(const std::string& text);

/// Formats in lowest terms: "3", "-1/2". Inverse of parse_rational.
std::string format_rational(const Rational& value);

}  // namespace hampen

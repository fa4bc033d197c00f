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

#include <bit>
#include <cstdint>
#include <string>

#include "hampen/errors.hpp"

namespace hampen {

/// Exhaustive enumeration is allowed up to this many variables (2^24
/// assignments).
inline constexpr int kEnumerationGuard = 24;

/// A fixed-length string over {0,1}. Position 0 is the leftmost character
/// of the textual form, so "100" has bit 0 set.
class Bitstring {
 public:
    Bitstring(int n, std::uint32_t mask) : n_(n), mask_(mask) {
        if (n < 1 || n > 32) throw DomainError("bitstring length out of range");
        if (n < 32 && (mask >> n) != 0)
            throw DomainError("bitstring mask has bits beyond its length");
    }

    /// The basis string with a single one at position j.
    static Bitstring basis(int n, int j) {
        if (j < 0 || j >= n) throw DomainError("basis index out of range");
        return Bitstring(n, std::uint32_t{1} << j);
    }

    static Bitstring zeros(int n) { return Bitstring(n, 0); }

    static Bitstring from_string(const std::string& text) {
        if (text.empty() || text.size() > 32)
            throw FormatError("bitstring literal must have 1..32 characters");
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < text.size(); ++j) {
            if (text[j] == '1')
                mask |= std::uint32_t{1} << j;
            else if (text[j] != '0')
                throw FormatError("bitstring literal may contain only 0 and 1");
        }
        return Bitstring(static_cast<int>(text.size()), mask);
    }

    int size() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    bool bit(int j) const { return (mask_ >> j) & 1u; }
    int weight() const { return std::popcount(mask_); }

    /// Spin value at position j under the fixed convention bit 1 <-> +1.
    int spin(int j) const { return bit(j) ? 1 : -1; }

    std::string str() const {
        std::string out(static_cast<std::size_t>(n_), '0');
        for (int j = 0; j < n_; ++j)
            if (bit(j)) out[static_cast<std::size_t>(j)] = '1';
        return out;
    }

    bool operator==(const Bitstring& other) const = default;

    /// Lexicographic order on the textual form ("011" < "100").
    bool lex_less(const Bitstring& other) const {
        return lex_less_mask(mask_, other.mask_, n_ < other.n_ ? n_ : other.n_);
    }

    /// Mask-level comparator used by the enumeration kernels.
    static bool lex_less_mask(std::uint32_t a, std::uint32_t b, int n) {
        for (int j = 0; j < n; ++j) {
            unsigned x = (a >> j) & 1u, y = (b >> j) & 1u;
            if (x != y) return x < y;
        }
        return false;
    }

 private:
    int n_;
    std::uint32_t mask_;
};

}  // namespace hampen

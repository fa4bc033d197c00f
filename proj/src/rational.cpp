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

#include "hampen/rational.hpp"

#include <cctype>

namespace hampen {

namespace {

bool parse_integer(const std::string& text, std::size_t begin, std::size_t end,
                   bool allow_sign, Integer* out) {
    if (begin >= end) return false;
    bool negative = false;
    std::size_t pos = begin;
    if (allow_sign && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= end) return false;
    Integer value = 0;
    for (; pos < end; ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        value = value * 10 + (text[pos] - '0');
    }
    *out = negative ? -value : value;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    Integer num, den = 1;
    bool ok;
    if (slash == std::string::npos) {
        ok = parse_integer(text, 0, text.size(), true, &num);
    } else {
        ok = parse_integer(text, 0, slash, true, &num) &&
             parse_integer(text, slash + 1, text.size(), false, &den);
        if (ok && den == 0)
            throw FormatError("rational '" + text + "' has zero denominator");
    }
    if (!ok) throw FormatError("malformed rational '" + text + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    return value.str();
}

}  // namespace hampen

// Copyright 2026 The plansets Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLANSETS_RATIONAL_HPP_
#define PLANSETS_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace plansets {

// Exact arithmetic for costs, durations and distances. Floating point is
// only introduced when integrating over trade-off weights.
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-2", "2.75", "1e-3" or "7/4". Throws std::invalid_argument.
Rational ParseRational(std::string_view text);

// Exact conversion of a finite double (every double is a dyadic rational).
Rational RationalFromDouble(double value);

double ToDouble(const Rational& value);

// "7/4" or "3" for integral values.
std::string ToString(const Rational& value);

// Exact decimal rendering ("2.75") when the denominator divides a power of
// ten; nullopt otherwise (e.g. 1/3).
std::optional<std::string> ToDecimalString(const Rational& value);

// JSON integer, JSON decimal number, or "p/q" string when no finite decimal
// exists. RationalFromJson inverts all three forms exactly.
nlohmann::json RationalToJson(const Rational& value);
Rational RationalFromJson(const nlohmann::json& value);

}  // namespace plansets

#endif  // PLANSETS_RATIONAL_HPP_

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

#include "plansets/rational.hpp"

#include <cctype>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace plansets {
namespace {

using boost::multiprecision::cpp_int;

cpp_int ParseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  cpp_int out = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    out = out * 10 + (ch - '0');
  }
  return out;
}

cpp_int Pow10(long exponent) {
  cpp_int out = 1;
  for (long i = 0; i < exponent; ++i) out *= 10;
  return out;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const cpp_int num = ParseInteger(text.substr(0, slash), whole);
    const cpp_int den = ParseInteger(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    out = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      const cpp_int magnitude = ParseInteger(exp_text, whole);
      if (magnitude > 400) throw std::invalid_argument("exponent out of range in '" + std::string(whole) + "'");
      exponent = magnitude.convert_to<long>();
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    const cpp_int ip = int_part.empty() ? cpp_int(0) : ParseInteger(int_part, whole);
    const cpp_int fp = frac_part.empty() ? cpp_int(0) : ParseInteger(frac_part, whole);
    const cpp_int scale = Pow10(static_cast<long>(frac_part.size()));
    out = Rational(ip * scale + fp, scale);
    if (exponent > 0) out *= Rational(Pow10(exponent));
    if (exponent < 0) out /= Rational(Pow10(-exponent));
  }
  return negative ? Rational(-out) : out;
}

Rational RationalFromDouble(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 bits of mantissa scaled to an integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational out{cpp_int(scaled)};
  if (exponent > 0) out *= Rational(cpp_int(1) << exponent);
  if (exponent < 0) out /= Rational(cpp_int(1) << -exponent);
  return out;
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

std::string ToString(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<std::string> ToDecimalString(const Rational& value) {
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  int twos = 0;
  int fives = 0;
  cpp_int rest = den;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return std::nullopt;
  const int digits = std::max(twos, fives);
  const bool negative = num < 0;
  if (negative) num = -num;
  const cpp_int scaled = num * Pow10(digits) / den;
  std::string text = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(text.size())), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + text : text;
}

nlohmann::json RationalToJson(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    const cpp_int num = boost::multiprecision::numerator(value);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max()) {
      return num.convert_to<long long>();
    }
  }
  if (const auto decimal = ToDecimalString(value); decimal && decimal->size() <= 15) {
    const double as_double = std::stod(*decimal);
    // Only emit a JSON number if it reads back to the same rational.
    if (ParseRational(nlohmann::json(as_double).dump()) == value) return as_double;
  }
  return ToString(value);
}

Rational RationalFromJson(const nlohmann::json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number()) return ParseRational(value.dump());
  if (value.is_string()) return ParseRational(value.get<std::string>());
  throw std::invalid_argument("expected a number, got " + value.dump());
}

}  // namespace plansets

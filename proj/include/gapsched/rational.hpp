// Copyright 2026 The gapsched Authors
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

#ifndef GAPSCHED_RATIONAL_HPP_
#define GAPSCHED_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gapsched/error.hpp"

namespace gapsched {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "15.75", "-3", "1e2" style decimals or "p/q" fractions exactly.
/// A comma is accepted as decimal separator ("15,75").
inline Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Domain, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  BigInt digits = 0;
  int scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++scale;
    } else if ((c == '.' || c == ',') && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();
  int exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) exp_neg = text[pos++] == '-';
    if (pos >= text.size()) throw bad();
    for (; pos < text.size(); ++pos) {
      if (text[pos] < '0' || text[pos] > '9' || exponent > 400) throw bad();
      exponent = exponent * 10 + (text[pos] - '0');
    }
    if (exp_neg) exponent = -exponent;
  }
  if (pos != text.size()) throw bad();
  const int net = exponent - scale;
  BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net < 0 ? -net : net));
  Rational r = net >= 0 ? Rational(digits * ten_pow) : Rational(digits, ten_pow);
  return negative ? Rational(-r) : r;
}

/// Exact decimal text when the denominator has only factors 2 and 5
/// ("15.75"), "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt den = denominator(r);
  BigInt num = numerator(r);
  int twos = 0;
  int fives = 0;
  BigInt d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return num.str() + "/" + den.str();
  const int places = std::max(twos, fives);
  const BigInt scaled = num * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(places)) / den;
  const bool negative = scaled < 0;
  std::string digits = (negative ? BigInt(-scaled) : scaled).str();
  if (places > 0) {
    while (digits.size() <= static_cast<std::size_t>(places)) digits = "0" + digits;
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gapsched

#endif  // GAPSCHED_RATIONAL_HPP_

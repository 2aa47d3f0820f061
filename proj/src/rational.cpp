//  Copyright 2026 The hyperlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "hyperlat/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace hyperlat {

namespace {

void require_unit_range(const Rational& v) {
  if (v < Rational(0) || v > Rational(1)) {
    throw std::domain_error("unit rational out of range: " + format_rational(v));
  }
}

std::optional<long long> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  long long out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || out < 0) return std::nullopt;
  return out;
}

}  // namespace

UnitRational::UnitRational(long long num, long long den) {
  if (den == 0) throw std::domain_error("unit rational with zero denominator");
  value_ = Rational(num, den);
  require_unit_range(value_);
}

UnitRational::UnitRational(const Rational& value) : value_(value) {
  require_unit_range(value_);
}

std::string UnitRational::str() const { return format_rational(value_); }

std::optional<UnitRational> UnitRational::parse(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  auto num = parse_integer(num_part);
  auto den = parse_integer(den_part);
  if (!num || !den || *den == 0 || *num > *den) return std::nullopt;
  return UnitRational(*num, *den);
}

std::string format_rational(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += "/";
    out += std::to_string(r.denominator());
  }
  return out;
}

}  // namespace hyperlat

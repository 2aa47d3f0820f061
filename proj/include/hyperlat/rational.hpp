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

#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hyperlat {

/// Unbounded-range exact rational used for intermediate arithmetic.
/// All sampled values have denominators bounded by the sampling parameters,
/// so products of up to a few factors stay far away from overflow.
using Rational = boost::rational<long long>;

/// An exact rational confined to [0, 1]. Always stored in lowest terms.
/// Membership grades and grid points are values of this type; arithmetic
/// that can leave [0, 1] (sums, differences) is done on `Rational`
/// intermediates and clamped or checked by the caller.
class UnitRational {
 public:
  /// Zero.
  UnitRational() = default;

  /// Throws std::domain_error unless 0 <= num/den <= 1.
  UnitRational(long long num, long long den);

  /// Throws std::domain_error unless 0 <= value <= 1.
  explicit UnitRational(const Rational& value);

  static UnitRational zero() { return UnitRational(); }
  static UnitRational one() { return UnitRational(1, 1); }
  static UnitRational half() { return UnitRational(1, 2); }

  const Rational& value() const { return value_; }
  long long num() const { return value_.numerator(); }
  long long den() const { return value_.denominator(); }

  /// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Strict parse of "p" or "p/q" with non-negative integers and p/q <= 1.
  /// Returns nullopt on any deviation.
  static std::optional<UnitRational> parse(std::string_view text);

  friend bool operator==(const UnitRational& a, const UnitRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const UnitRational& a, const UnitRational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const UnitRational& a, const UnitRational& b) {
    return !(b < a);
  }
  friend bool operator>(const UnitRational& a, const UnitRational& b) {
    return b < a;
  }
  friend bool operator>=(const UnitRational& a, const UnitRational& b) {
    return !(a < b);
  }

 private:
  Rational value_{0};
};

inline UnitRational unit_min(const UnitRational& a, const UnitRational& b) {
  return a < b ? a : b;
}

inline UnitRational unit_max(const UnitRational& a, const UnitRational& b) {
  return a < b ? b : a;
}

/// 1 - x; the standard strong negation on [0, 1].
inline UnitRational unit_complement(const UnitRational& x) {
  return UnitRational(Rational(1) - x.value());
}

/// Lowest-terms rendering of an arbitrary rational ("p/q" or "p").
std::string format_rational(const Rational& r);

}  // namespace hyperlat

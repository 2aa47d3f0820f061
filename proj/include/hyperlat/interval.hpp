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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/carrier.hpp"
#include "hyperlat/errors.hpp"

namespace hyperlat {

/// A closed lattice interval [lo, hi] = {z : lo <= z <= hi}, or the
/// distinguished empty interval. Non-empty intervals always satisfy
/// lo <= hi; `of` normalizes an incomparable or reversed endpoint pair to
/// Empty. Two non-empty intervals are equal exactly when their endpoints
/// are, which coincides with equality of their member sets.
template <Carrier C>
class Interval {
 public:
  using E = element_t<C>;

  /// The empty interval.
  Interval() = default;

  static Interval empty() { return Interval(); }

  static Interval singleton(const E& x) {
    Interval r;
    r.bounds_.emplace(x, x);
    return r;
  }

  /// [lo, hi] when lo <= hi in `c`, Empty otherwise.
  static Interval of(const C& c, const E& lo, const E& hi) {
    Interval r;
    if (c.leq(lo, hi)) r.bounds_.emplace(lo, hi);
    return r;
  }

  bool is_empty() const { return !bounds_.has_value(); }

  /// Endpoints; throw EmptyOperand on the empty interval.
  const E& lo() const { return require().first; }
  const E& hi() const { return require().second; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  const std::pair<E, E>& require() const {
    if (!bounds_) throw EmptyOperand("the empty interval has no endpoints");
    return *bounds_;
  }

  std::optional<std::pair<E, E>> bounds_;
};

/// Factory mirroring Interval::of for symmetry with the other free functions.
template <Carrier C>
Interval<C> make_interval(const C& c, const element_t<C>& lo,
                          const element_t<C>& hi) {
  return Interval<C>::of(c, lo, hi);
}

/// Componentwise interval order: [a,b] <= [c,d] iff a <= c and b <= d.
/// Defined for non-empty operands only; throws EmptyOperand otherwise.
template <Carrier C>
bool interval_leq(const C& c, const Interval<C>& a, const Interval<C>& b) {
  if (a.is_empty() || b.is_empty()) {
    throw EmptyOperand("the interval order is defined for non-empty intervals");
  }
  return c.leq(a.lo(), b.lo()) && c.leq(a.hi(), b.hi());
}

/// Greatest lower bound in the componentwise order; never empty for
/// non-empty inputs since meet is monotone. Throws EmptyOperand.
template <Carrier C>
Interval<C> interval_inf(const C& c, const Interval<C>& a, const Interval<C>& b) {
  if (a.is_empty() || b.is_empty()) {
    throw EmptyOperand("interval bounds are defined for non-empty intervals");
  }
  return Interval<C>::of(c, c.meet(a.lo(), b.lo()), c.meet(a.hi(), b.hi()));
}

/// Least upper bound in the componentwise order. Throws EmptyOperand.
template <Carrier C>
Interval<C> interval_sup(const C& c, const Interval<C>& a, const Interval<C>& b) {
  if (a.is_empty() || b.is_empty()) {
    throw EmptyOperand("interval bounds are defined for non-empty intervals");
  }
  return Interval<C>::of(c, c.join(a.lo(), b.lo()), c.join(a.hi(), b.hi()));
}

/// Elementwise negation image: [lo, hi]' = [hi', lo']. Empty maps to Empty.
template <Carrier C>
Interval<C> interval_negate(const C& c, const Interval<C>& a) {
  if (a.is_empty()) return Interval<C>::empty();
  return Interval<C>::of(c, c.negate(a.hi()), c.negate(a.lo()));
}

/// Membership test; the empty interval contains nothing.
template <Carrier C>
bool interval_contains(const C& c, const Interval<C>& a, const element_t<C>& x) {
  return !a.is_empty() && c.leq(a.lo(), x) && c.leq(x, a.hi());
}

/// Endpoint inclusion: b.lo <= a.lo and a.hi <= b.hi. This always implies
/// member-set inclusion, and on a totally ordered carrier the two notions
/// coincide. The empty interval is included in everything.
template <Carrier C>
bool interval_subset(const C& c, const Interval<C>& a, const Interval<C>& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  return c.leq(b.lo(), a.lo()) && c.leq(a.hi(), b.hi());
}

/// All members of the interval in carrier element order. Only enumerable
/// carriers support this; on a dense carrier it throws InfiniteCarrier.
template <Carrier C>
std::vector<element_t<C>> interval_members(const C& c, const Interval<C>& a) {
  if constexpr (!C::enumerable) {
    throw InfiniteCarrier("cannot enumerate interval members on carrier '" +
                          c.name() + "'");
  } else {
    std::vector<element_t<C>> out;
    if (a.is_empty()) return out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto z = c.element(i);
      if (c.leq(a.lo(), z) && c.leq(z, a.hi())) out.push_back(z);
    }
    return out;
  }
}

/// "[lo, hi]", or "[]" for the empty interval.
template <Carrier C>
std::string format_interval(const C& c, const Interval<C>& a) {
  if (a.is_empty()) return "[]";
  return "[" + std::string(c.format(a.lo())) + ", " +
         std::string(c.format(a.hi())) + "]";
}

}  // namespace hyperlat

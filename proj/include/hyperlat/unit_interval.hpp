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

#include <string>
#include <vector>

#include "hyperlat/rational.hpp"
#include "hyperlat/sampling.hpp"

namespace hyperlat {

/// The dense chain of exact rationals in [0, 1]: meet is min, join is max,
/// negation is 1 - x. It cannot be enumerated, so law checks probe it with a
/// deterministic sample stream.
class UnitInterval {
 public:
  using element_type = UnitRational;
  static constexpr bool enumerable = false;

  std::string name() const { return "unit"; }
  bool is_chain() const { return true; }

  bool leq(const UnitRational& x, const UnitRational& y) const { return x <= y; }
  UnitRational meet(const UnitRational& x, const UnitRational& y) const {
    return unit_min(x, y);
  }
  UnitRational join(const UnitRational& x, const UnitRational& y) const {
    return unit_max(x, y);
  }
  UnitRational negate(const UnitRational& x) const { return unit_complement(x); }
  UnitRational bottom() const { return UnitRational::zero(); }
  UnitRational top() const { return UnitRational::one(); }
  std::string format(const UnitRational& x) const { return x.str(); }
};

inline RationalSampler make_sampler(const UnitInterval&, const SampleParams& params) {
  return RationalSampler(params);
}

inline std::vector<UnitRational> canonical_elements(const UnitInterval&) {
  return canonical_unit_probes();
}

}  // namespace hyperlat

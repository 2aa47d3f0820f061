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

#include <cstdint>
#include <random>
#include <vector>

#include "hyperlat/rational.hpp"

namespace hyperlat {

/// Controls the pseudo-random probes used on carriers that cannot be
/// enumerated. Finite carriers scan exhaustively and ignore these values.
///
/// `samples` counts probed tuples in total, including the deterministic
/// boundary-and-midpoint prefix that every sampled scan evaluates first.
struct SampleParams {
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  long long denominator_bound = 64;
};

/// Deterministic stream of rationals in [0, 1] with bounded denominators.
/// Two samplers built from equal parameters produce identical streams on the
/// same platform, which makes every reported witness reproducible.
class RationalSampler {
 public:
  explicit RationalSampler(const SampleParams& params)
      : rng_(params.seed),
        den_dist_(1, params.denominator_bound < 1 ? 1 : params.denominator_bound) {}

  UnitRational next() {
    long long q = den_dist_(rng_);
    std::uniform_int_distribution<long long> num_dist(0, q);
    return UnitRational(num_dist(rng_), q);
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long long> den_dist_;
};

/// Probes evaluated ahead of the random stream. Violations of the common
/// laws tend to live at the bounds or at the midpoint, so scans find them
/// there first and always at the same tuple.
inline std::vector<UnitRational> canonical_unit_probes() {
  return {UnitRational::zero(), UnitRational::half(), UnitRational::one()};
}

}  // namespace hyperlat

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
#include <string_view>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/sampling.hpp"

namespace hyperlat {

enum class Verdict { Pass, Fail, Skip };

std::string_view verdict_name(Verdict v);

/// One verified law. `anchor` is a stable machine id such as
/// "superlattice.a5"; `name` is the human-readable statement, written in the
/// same syntax the expression evaluator accepts so that witnesses can be
/// replayed directly. A failed check always carries a witness whose single
/// re-evaluation reproduces the failure.
struct Check {
  std::string name;
  std::string anchor;
  Verdict verdict = Verdict::Pass;
  std::optional<Error::Bindings> witness;
  std::string note;

  static Check pass(std::string name, std::string anchor, std::string note = "");
  static Check fail(std::string name, std::string anchor, Error::Bindings witness,
                    std::string note = "");
  static Check skip(std::string name, std::string anchor, std::string note);
};

/// Outcome of one verification suite: which laws were checked on which
/// carrier with which connectives, and what happened. Serializes to a
/// stable JSON shape and to an aligned text listing.
struct Report {
  std::string suite;
  std::string carrier;
  std::string connectives;
  std::optional<SampleParams> params;  // present only for sampled scans
  std::string note;
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
  const Check* find(std::string_view anchor) const;

  /// Moves the checks of `sub` onto the end of this report, keeping this
  /// report's own metadata. Used by the full regression driver.
  void append(Report sub);

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace hyperlat

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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperlat {

/// Base class for every domain error raised by the library. `witness()`
/// carries the concrete elements that exhibit the problem, when any exist,
/// as ordered (variable, rendered element) pairs.
class Error : public std::runtime_error {
 public:
  using Bindings = std::vector<std::pair<std::string, std::string>>;

  explicit Error(const std::string& what, Bindings witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const Bindings& witness() const noexcept { return witness_; }

 private:
  Bindings witness_;
};

/// A lattice description that cannot even be read: missing fields, unknown
/// element names, duplicate elements, a partial negation map, and so on.
struct MalformedDocument : Error { using Error::Error; };

/// The declared order is not a lattice: it has a cycle, or some pair of
/// elements has no unique greatest lower or least upper bound.
struct NotALattice : Error { using Error::Error; };

/// Meet does not distribute over join somewhere; the witness is a triple.
struct NotDistributive : Error { using Error::Error; };

/// The negation map is not an involution, is not antitone, or breaks one of
/// the two de Morgan identities.
struct BadNegation : Error { using Error::Error; };

/// An element was used with a carrier it does not belong to.
struct ForeignElement : Error { using Error::Error; };

/// The empty interval was passed where a non-empty one is required.
struct EmptyOperand : Error { using Error::Error; };

/// Member enumeration was requested on a carrier that cannot be enumerated.
struct InfiniteCarrier : Error { using Error::Error; };

/// A connective pair is not available on the given carrier, for example an
/// arithmetic pair on a table lattice with no rational grid, or a pair whose
/// values fall off the grid.
struct UnsupportedCarrier : Error { using Error::Error; };

/// An operation that exists only for the single-pair construction was called
/// on a generalized (two-pair) hyperoperation, or vice versa.
struct ModeUnsupported : Error { using Error::Error; };

/// The two pairs of a generalized quadruple are not pointwise ordered.
struct OrderViolation : Error { using Error::Error; };

/// Raised by the expression and document parsers. `position()` is a byte
/// offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

}  // namespace hyperlat

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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/rational.hpp"

namespace hyperlat {

/// Opaque handle to an element of one `FiniteLattice`. Externally elements
/// are named strings; internally they are dense indices into the tables.
struct ElementId {
  std::uint32_t index = 0;
  friend constexpr bool operator==(ElementId, ElementId) = default;
};

/// A finite bounded lattice with negation, backed by full order, meet, join
/// and negation tables. Instances are immutable after construction.
///
/// `from_document` fully validates the lattice laws and throws a typed error
/// with a witness on the first violation. `from_parts` only performs the
/// structural work (order closure, table derivation, bounds) so that tests
/// and diagnostics can build deliberately lawless instances and watch the
/// checkers reject them.
class FiniteLattice {
 public:
  using element_type = ElementId;
  static constexpr bool enumerable = true;

  /// Table pair for a document-defined connective; entries are element
  /// indices in element order.
  struct ConnectiveTables {
    std::vector<std::uint32_t> tnorm;
    std::vector<std::uint32_t> tconorm;
  };

  /// Parses and fully validates a JSON lattice description.
  ///
  /// Required fields: "name" (string), "elements" (array of distinct
  /// strings), "leq" (array of [lower, upper] name pairs; the reflexive
  /// transitive closure is applied, so listing covers is enough) and
  /// "negation" (object mapping every element name to its negation).
  /// Optional: "connectives", an object of {"T": [[...]], "S": [[...]]}
  /// tables with names in element order. The bottom and top elements are
  /// derived, never declared.
  ///
  /// Throws MalformedDocument, NotALattice, NotDistributive or BadNegation.
  static FiniteLattice from_document(std::string_view json_text);

  /// Reads the file at `path` and delegates to `from_document`.
  static FiniteLattice from_document_file(const std::string& path);

  /// Builds the order closure and the meet/join tables but does not enforce
  /// distributivity or any negation law. Throws MalformedDocument on naming
  /// problems and NotALattice when the order has a cycle or some pair lacks
  /// a unique greatest lower or least upper bound.
  static FiniteLattice from_parts(
      std::string name, std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs,
      const std::map<std::string, std::string>& negation);

  /// The chain 0 < 1/(points-1) < ... < 1 with negation 1 - x. Element
  /// names keep the grid denominator ("3/10" on an 11-point chain), and
  /// every element carries its exact rational value, which is what lets
  /// arithmetic connective pairs run on it.
  static FiniteLattice chain_grid(std::size_t points);

  /// The powerset of {a, b, ...} with `atoms` atoms (1 to 5), ordered by
  /// inclusion, with complement as negation. Elements are named "{}",
  /// "{a}", "{a,c}", and so on.
  static FiniteLattice powerset(std::size_t atoms);

  std::size_t size() const { return names_.size(); }
  ElementId element(std::size_t i) const;
  std::size_t index(ElementId e) const;
  std::optional<ElementId> find(std::string_view element_name) const;
  const std::string& format(ElementId e) const;
  std::string name() const { return name_; }

  bool leq(ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const;
  ElementId join(ElementId x, ElementId y) const;
  ElementId negate(ElementId x) const;
  ElementId bottom() const { return ElementId{bottom_}; }
  ElementId top() const { return ElementId{top_}; }
  bool is_chain() const { return chain_; }

  /// Exact rational values per element, present only on grid chains.
  const std::optional<std::vector<UnitRational>>& grid_values() const {
    return grid_;
  }

  /// Grid element with the given value, if this carrier has a grid and the
  /// value lies on it.
  std::optional<ElementId> find_grid_value(const UnitRational& value) const;

  /// Document-defined connective tables by name; nullptr when absent.
  const ConnectiveTables* custom_connective(std::string_view name) const;
  std::vector<std::string> custom_connective_names() const;

 private:
  FiniteLattice() = default;

  std::size_t checked(ElementId e) const;
  void derive_tables();
  void detect_chain();

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint8_t> leq_;        // n*n, row-major, leq_[i*n+j]
  std::vector<std::uint32_t> meet_;      // n*n
  std::vector<std::uint32_t> join_;      // n*n
  std::vector<std::uint32_t> negation_;  // n
  std::uint32_t bottom_ = 0;
  std::uint32_t top_ = 0;
  bool chain_ = false;
  std::optional<std::vector<UnitRational>> grid_;
  std::map<std::string, ConnectiveTables, std::less<>> customs_;
};

}  // namespace hyperlat

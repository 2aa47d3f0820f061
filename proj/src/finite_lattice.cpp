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

#include "hyperlat/finite_lattice.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperlat {

namespace {

using nlohmann::json;

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

ElementId FiniteLattice::element(std::size_t i) const {
  if (i >= names_.size()) {
    throw ForeignElement("element index " + std::to_string(i) +
                         " out of range for carrier " + quote(name_));
  }
  return ElementId{static_cast<std::uint32_t>(i)};
}

std::size_t FiniteLattice::checked(ElementId e) const {
  if (e.index >= names_.size()) {
    throw ForeignElement("element #" + std::to_string(e.index) +
                         " does not belong to carrier " + quote(name_));
  }
  return e.index;
}

std::size_t FiniteLattice::index(ElementId e) const { return checked(e); }

std::optional<ElementId> FiniteLattice::find(std::string_view element_name) const {
  auto it = index_.find(std::string(element_name));
  if (it == index_.end()) return std::nullopt;
  return ElementId{it->second};
}

const std::string& FiniteLattice::format(ElementId e) const {
  return names_[checked(e)];
}

bool FiniteLattice::leq(ElementId x, ElementId y) const {
  return leq_[checked(x) * size() + checked(y)] != 0;
}

ElementId FiniteLattice::meet(ElementId x, ElementId y) const {
  return ElementId{meet_[checked(x) * size() + checked(y)]};
}

ElementId FiniteLattice::join(ElementId x, ElementId y) const {
  return ElementId{join_[checked(x) * size() + checked(y)]};
}

ElementId FiniteLattice::negate(ElementId x) const {
  return ElementId{negation_[checked(x)]};
}

std::optional<ElementId> FiniteLattice::find_grid_value(
    const UnitRational& value) const {
  if (!grid_) return std::nullopt;
  for (std::size_t i = 0; i < grid_->size(); ++i) {
    if ((*grid_)[i] == value) return ElementId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

const FiniteLattice::ConnectiveTables* FiniteLattice::custom_connective(
    std::string_view name) const {
  auto it = customs_.find(name);
  return it == customs_.end() ? nullptr : &it->second;
}

std::vector<std::string> FiniteLattice::custom_connective_names() const {
  std::vector<std::string> out;
  out.reserve(customs_.size());
  for (const auto& [key, value] : customs_) out.push_back(key);
  return out;
}

void FiniteLattice::detect_chain() {
  const std::size_t n = size();
  chain_ = true;
  for (std::size_t i = 0; i < n && chain_; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq_[i * n + j] && !leq_[j * n + i]) {
        chain_ = false;
        break;
      }
    }
  }
}

// Derives the meet and join tables from the closed order relation, then the
// bounds. Throws NotALattice when some pair has no greatest lower or least
// upper bound; uniqueness is automatic once antisymmetry holds.
void FiniteLattice::derive_tables() {
  const std::size_t n = size();
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      candidates.clear();
      for (std::size_t z = 0; z < n; ++z) {
        if (leq_[z * n + i] && leq_[z * n + j]) candidates.push_back(z);
      }
      bool found = false;
      for (std::size_t z : candidates) {
        bool greatest = true;
        for (std::size_t w : candidates) {
          if (!leq_[w * n + z]) {
            greatest = false;
            break;
          }
        }
        if (greatest) {
          meet_[i * n + j] = static_cast<std::uint32_t>(z);
          found = true;
          break;
        }
      }
      if (!found) {
        throw NotALattice("no greatest lower bound for " + quote(names_[i]) +
                              " and " + quote(names_[j]),
                          {{"x", names_[i]}, {"y", names_[j]}});
      }

      candidates.clear();
      for (std::size_t z = 0; z < n; ++z) {
        if (leq_[i * n + z] && leq_[j * n + z]) candidates.push_back(z);
      }
      found = false;
      for (std::size_t z : candidates) {
        bool least = true;
        for (std::size_t w : candidates) {
          if (!leq_[z * n + w]) {
            least = false;
            break;
          }
        }
        if (least) {
          join_[i * n + j] = static_cast<std::uint32_t>(z);
          found = true;
          break;
        }
      }
      if (!found) {
        throw NotALattice("no least upper bound for " + quote(names_[i]) +
                              " and " + quote(names_[j]),
                          {{"x", names_[i]}, {"y", names_[j]}});
      }
    }
  }

  std::uint32_t bot = 0;
  std::uint32_t top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    bot = meet_[bot * n + i];
    top = join_[top * n + i];
  }
  bottom_ = bot;
  top_ = top;
  detect_chain();
}

FiniteLattice FiniteLattice::from_parts(
    std::string name, std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    const std::map<std::string, std::string>& negation) {
  FiniteLattice l;
  l.name_ = std::move(name);
  l.names_ = std::move(elements);
  const std::size_t n = l.names_.size();
  if (n == 0) throw MalformedDocument("a lattice needs at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.index_.emplace(l.names_[i], static_cast<std::uint32_t>(i)).second) {
      throw MalformedDocument("duplicate element name " + quote(l.names_[i]));
    }
  }

  l.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) l.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : leq_pairs) {
    auto a = l.find(lo);
    auto b = l.find(hi);
    if (!a || !b) {
      throw MalformedDocument("leq pair [" + quote(lo) + ", " + quote(hi) +
                              "] mentions an unknown element");
    }
    l.leq_[a->index * n + b->index] = 1;
  }

  // Reflexive-transitive closure, so documents may list covers only.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!l.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (l.leq_[k * n + j]) l.leq_[i * n + j] = 1;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l.leq_[i * n + j] && l.leq_[j * n + i]) {
        throw NotALattice("order contains a cycle through " +
                              quote(l.names_[i]) + " and " + quote(l.names_[j]),
                          {{"x", l.names_[i]}, {"y", l.names_[j]}});
      }
    }
  }

  l.derive_tables();

  l.negation_.assign(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto& [from, to] : negation) {
    auto a = l.find(from);
    auto b = l.find(to);
    if (!a || !b) {
      throw MalformedDocument("negation entry " + quote(from) + " -> " +
                              quote(to) + " mentions an unknown element");
    }
    l.negation_[a->index] = b->index;
    seen[a->index] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw MalformedDocument("negation map is missing element " +
                              quote(l.names_[i]));
    }
  }
  return l;
}

namespace {

// Law validation shared by the document loader. Scans run in fixed
// lexicographic index order so the reported witness is deterministic.
void enforce_lattice_laws(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto x = l.element(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto y = l.element(j);
      for (std::size_t k = 0; k < n; ++k) {
        auto z = l.element(k);
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          throw NotDistributive(
              "lattice " + quote(l.name()) + " is not distributive: "
              "meet(x, join(y,z)) != join(meet(x,y), meet(x,z)) at x=" +
                  l.format(x) + ", y=" + l.format(y) + ", z=" + l.format(z),
              {{"x", l.format(x)}, {"y", l.format(y)}, {"z", l.format(z)}});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto x = l.element(i);
    if (l.negate(l.negate(x)) != x) {
      throw BadNegation("negation is not an involution at x=" + l.format(x) +
                            ": x'' = " + l.format(l.negate(l.negate(x))),
                        {{"x", l.format(x)}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto x = l.element(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto y = l.element(j);
      if (l.leq(x, y) && !l.leq(l.negate(y), l.negate(x))) {
        throw BadNegation("negation is not antitone: x <= y but not y' <= x' "
                          "at x=" + l.format(x) + ", y=" + l.format(y),
                          {{"x", l.format(x)}, {"y", l.format(y)}});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto x = l.element(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto y = l.element(j);
      if (l.negate(l.meet(x, y)) != l.join(l.negate(x), l.negate(y)) ||
          l.negate(l.join(x, y)) != l.meet(l.negate(x), l.negate(y))) {
        throw BadNegation("negation breaks a de Morgan identity at x=" +
                              l.format(x) + ", y=" + l.format(y),
                          {{"x", l.format(x)}, {"y", l.format(y)}});
      }
    }
  }
}

std::vector<std::uint32_t> parse_connective_table(const FiniteLattice& l,
                                                  const json& rows,
                                                  const std::string& where) {
  const std::size_t n = l.size();
  if (!rows.is_array() || rows.size() != n) {
    throw MalformedDocument(where + " must be an array of " +
                            std::to_string(n) + " rows");
  }
  std::vector<std::uint32_t> table(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw MalformedDocument(where + " row " + std::to_string(i) +
                              " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_string()) {
        throw MalformedDocument(where + " entries must be element names");
      }
      auto e = l.find(row[j].get<std::string>());
      if (!e) {
        throw MalformedDocument(where + " mentions unknown element " +
                                quote(row[j].get<std::string>()));
      }
      table[i * n + j] = e->index;
    }
  }
  return table;
}

}  // namespace

FiniteLattice FiniteLattice::from_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedDocument("document must be a JSON object");

  for (const char* field : {"name", "elements", "leq", "negation"}) {
    if (!doc.contains(field)) {
      throw MalformedDocument(std::string("missing required field ") +
                              quote(field));
    }
  }
  if (!doc["name"].is_string()) throw MalformedDocument("'name' must be a string");
  if (!doc["elements"].is_array()) {
    throw MalformedDocument("'elements' must be an array of strings");
  }

  std::vector<std::string> elements;
  for (const json& e : doc["elements"]) {
    if (!e.is_string()) {
      throw MalformedDocument("'elements' must be an array of strings");
    }
    elements.push_back(e.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  if (!doc["leq"].is_array()) {
    throw MalformedDocument("'leq' must be an array of [lower, upper] pairs");
  }
  for (const json& p : doc["leq"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw MalformedDocument("'leq' must be an array of [lower, upper] pairs");
    }
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }

  if (!doc["negation"].is_object()) {
    throw MalformedDocument("'negation' must map element names to element names");
  }
  std::map<std::string, std::string> negation;
  for (const auto& [key, value] : doc["negation"].items()) {
    if (!value.is_string()) {
      throw MalformedDocument("'negation' must map element names to element names");
    }
    negation[key] = value.get<std::string>();
  }

  FiniteLattice l = from_parts(doc["name"].get<std::string>(),
                               std::move(elements), pairs, negation);

  if (doc.contains("connectives")) {
    if (!doc["connectives"].is_object()) {
      throw MalformedDocument("'connectives' must be an object");
    }
    for (const auto& [cname, entry] : doc["connectives"].items()) {
      if (!entry.is_object() || !entry.contains("T") || !entry.contains("S")) {
        throw MalformedDocument("connective " + quote(cname) +
                                " needs 'T' and 'S' tables");
      }
      ConnectiveTables tables;
      tables.tnorm = parse_connective_table(l, entry["T"],
                                            "connective " + quote(cname) + " 'T'");
      tables.tconorm = parse_connective_table(
          l, entry["S"], "connective " + quote(cname) + " 'S'");
      l.customs_.emplace(cname, std::move(tables));
    }
  }

  enforce_lattice_laws(l);
  return l;
}

FiniteLattice FiniteLattice::from_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedDocument("cannot read lattice document " + quote(path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_document(buffer.str());
}

FiniteLattice FiniteLattice::chain_grid(std::size_t points) {
  if (points < 2) {
    throw MalformedDocument("a chain grid needs at least 2 points");
  }
  FiniteLattice l;
  const std::size_t n = points;
  const long long den = static_cast<long long>(points - 1);
  l.name_ = "chain:" + std::to_string(points);
  std::vector<UnitRational> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long num = static_cast<long long>(i);
    grid.emplace_back(num, den);
    // Names keep the grid denominator so output reads like the grid itself
    // ("6/10" on an 11-point chain), except at the exact ends.
    std::string nm;
    if (i == 0) {
      nm = "0";
    } else if (i + 1 == n) {
      nm = "1";
    } else {
      nm = std::to_string(num) + "/" + std::to_string(den);
    }
    l.names_.push_back(std::move(nm));
    l.index_.emplace(l.names_.back(), static_cast<std::uint32_t>(i));
  }
  l.grid_ = std::move(grid);

  l.leq_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  l.negation_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    l.negation_[i] = static_cast<std::uint32_t>(n - 1 - i);
    for (std::size_t j = 0; j < n; ++j) {
      l.leq_[i * n + j] = i <= j;
      l.meet_[i * n + j] = static_cast<std::uint32_t>(std::min(i, j));
      l.join_[i * n + j] = static_cast<std::uint32_t>(std::max(i, j));
    }
  }
  l.bottom_ = 0;
  l.top_ = static_cast<std::uint32_t>(n - 1);
  l.chain_ = true;
  return l;
}

FiniteLattice FiniteLattice::powerset(std::size_t atoms) {
  if (atoms < 1 || atoms > 5) {
    throw MalformedDocument("powerset carriers support 1 to 5 atoms");
  }
  FiniteLattice l;
  const std::size_t n = std::size_t{1} << atoms;
  l.name_ = "bool:" + std::to_string(atoms);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string nm = "{";
    for (std::size_t a = 0; a < atoms; ++a) {
      if (mask & (std::size_t{1} << a)) {
        if (nm.size() > 1) nm += ",";
        nm += static_cast<char>('a' + a);
      }
    }
    nm += "}";
    l.names_.push_back(std::move(nm));
    l.index_.emplace(l.names_.back(), static_cast<std::uint32_t>(mask));
  }

  const std::size_t full = n - 1;
  l.leq_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  l.negation_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    l.negation_[i] = static_cast<std::uint32_t>(full & ~i);
    for (std::size_t j = 0; j < n; ++j) {
      l.leq_[i * n + j] = (i & ~j) == 0;
      l.meet_[i * n + j] = static_cast<std::uint32_t>(i & j);
      l.join_[i * n + j] = static_cast<std::uint32_t>(i | j);
    }
  }
  l.bottom_ = 0;
  l.top_ = static_cast<std::uint32_t>(full);
  l.detect_chain();
  return l;
}

}  // namespace hyperlat

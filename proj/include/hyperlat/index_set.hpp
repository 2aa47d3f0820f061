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

#include <cassert>
#include <cstdint>
#include <vector>

namespace hyperlat {

/// A set of element indices drawn from a fixed universe {0, ..., n-1},
/// packed into 64-bit words. The brute-force set extension of the
/// hyperoperations unions thousands of these, so cheap bitwise union
/// matters more than a rich interface.
class IndexSet {
 public:
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  bool contains(std::size_t i) const {
    assert(i < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void unite(const IndexSet& other) {
    assert(other.universe_ == universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }

  void intersect(const IndexSet& other) {
    assert(other.universe_ == universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  }

  bool is_subset_of(const IndexSet& other) const {
    assert(other.universe_ == universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) {
      while (w) {
        w &= w - 1;
        ++total;
      }
    }
    return total;
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < universe_; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hyperlat

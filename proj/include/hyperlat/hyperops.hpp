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
#include <utility>
#include <vector>

#include "hyperlat/connectives.hpp"
#include "hyperlat/index_set.hpp"
#include "hyperlat/interval.hpp"

namespace hyperlat {

enum class HyperOp { Meet, Join };

/// Interval-valued meet and join built from connectives.
///
/// In pair mode (`from_pair`) the hyper-meet of x and y is the interval
/// [T(x,y), meet(x,y)] and the hyper-join is [join(x,y), S(x,y)]. In
/// generalized mode (`from_quadruple`) the endpoints come from the two pairs
/// instead: [T_outer, T_inner] and [S_inner, S_outer]. Pair mode is the
/// special case where the inner pair is meet/join, and only pair mode has
/// the closed interval and triple forms, which depend on the pair
/// distributing over meet and join.
template <Carrier C>
class HyperConnective {
 public:
  using E = element_t<C>;

  static HyperConnective from_pair(const C& c, ConnectivePair<C> pair) {
    HyperConnective h(c);
    h.description_ = pair.name;
    h.outer_ = std::move(pair);
    h.inner_ = builtin_pair<C>("meet-join", c);
    h.pair_mode_ = true;
    return h;
  }

  static HyperConnective from_quadruple(const C& c, GeneralizedQuadruple<C> quad) {
    HyperConnective h(c);
    h.description_ = quad.name();
    h.outer_ = std::move(quad.outer);
    h.inner_ = std::move(quad.inner);
    h.pair_mode_ = false;
    return h;
  }

  const C& carrier() const { return *carrier_; }
  bool pair_mode() const { return pair_mode_; }
  const std::string& description() const { return description_; }
  const ConnectivePair<C>& outer() const { return outer_; }
  const ConnectivePair<C>& inner() const { return inner_; }

  /// x hmeet y = [T_outer(x,y), T_inner(x,y)].
  Interval<C> hyper_meet(const E& x, const E& y) const {
    return Interval<C>::of(*carrier_, outer_.tnorm(x, y), inner_.tnorm(x, y));
  }

  /// x hjoin y = [S_inner(x,y), S_outer(x,y)].
  Interval<C> hyper_join(const E& x, const E& y) const {
    return Interval<C>::of(*carrier_, inner_.tconorm(x, y), outer_.tconorm(x, y));
  }

  /// Closed form for an element against an interval:
  /// x hmeet [lo, hi] = [T(x, lo), meet(x, hi)]. Pair mode only; faithful to
  /// the member-by-member extension when T and S distribute over meet and
  /// join (automatic on chains). Throws ModeUnsupported in generalized mode
  /// and EmptyOperand on the empty interval.
  Interval<C> meet_on_interval(const E& x, const Interval<C>& j) const {
    require_pair_mode();
    require_operand(j);
    return Interval<C>::of(*carrier_, outer_.tnorm(x, j.lo()),
                           carrier_->meet(x, j.hi()));
  }

  /// x hjoin [lo, hi] = [join(x, lo), S(x, hi)]. Same constraints as
  /// `meet_on_interval`.
  Interval<C> join_on_interval(const E& x, const Interval<C>& j) const {
    require_pair_mode();
    require_operand(j);
    return Interval<C>::of(*carrier_, carrier_->join(x, j.lo()),
                           outer_.tconorm(x, j.hi()));
  }

  /// Closed triple form [T(T(x,y),z), meet(meet(x,y),z)]. Pair mode only.
  Interval<C> meet3(const E& x, const E& y, const E& z) const {
    require_pair_mode();
    return Interval<C>::of(*carrier_, outer_.tnorm(outer_.tnorm(x, y), z),
                           carrier_->meet(carrier_->meet(x, y), z));
  }

  /// Closed triple form [join(join(x,y),z), S(S(x,y),z)]. Pair mode only.
  Interval<C> join3(const E& x, const E& y, const E& z) const {
    require_pair_mode();
    return Interval<C>::of(*carrier_, carrier_->join(carrier_->join(x, y), z),
                           outer_.tconorm(outer_.tconorm(x, y), z));
  }

  /// Both sides of the join negation law: ((x hjoin y)', x' hmeet y').
  std::pair<Interval<C>, Interval<C>> join_negation_sides(const E& x,
                                                          const E& y) const {
    return {interval_negate(*carrier_, hyper_join(x, y)),
            hyper_meet(carrier_->negate(x), carrier_->negate(y))};
  }

  /// Both sides of the meet negation law: ((x hmeet y)', x' hjoin y').
  std::pair<Interval<C>, Interval<C>> meet_negation_sides(const E& x,
                                                          const E& y) const {
    return {interval_negate(*carrier_, hyper_meet(x, y)),
            hyper_join(carrier_->negate(x), carrier_->negate(y))};
  }

  Interval<C> apply(HyperOp op, const E& x, const E& y) const {
    return op == HyperOp::Meet ? hyper_meet(x, y) : hyper_join(x, y);
  }

 private:
  explicit HyperConnective(const C& c) : carrier_(&c) {}

  void require_pair_mode() const {
    if (!pair_mode_) {
      throw ModeUnsupported(
          "the interval and triple closed forms exist only for the "
          "single-pair construction, not for " + description_);
    }
  }

  void require_operand(const Interval<C>& j) const {
    if (j.is_empty()) {
      throw EmptyOperand("hyperoperations take non-empty interval operands");
    }
  }

  const C* carrier_;
  ConnectivePair<C> outer_;
  ConnectivePair<C> inner_;
  bool pair_mode_ = true;
  std::string description_;
};

/// Brute-force member enumeration of a hyperoperation on a finite carrier:
/// the extension of `op` to sets is the union of the member sets of all
/// pairwise results. Caches the member set of every x op y as a bitmap, so
/// extending over large operand sets is a few word-ORs per pair.
///
/// This is the independent oracle the closed forms are verified against; it
/// never consults them.
template <FiniteCarrier C>
class SetExtension {
 public:
  explicit SetExtension(const HyperConnective<C>& h)
      : carrier_(&h.carrier()), n_(carrier_->size()) {
    meet_members_.reserve(n_ * n_);
    join_members_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        meet_members_.push_back(
            member_bitmap(h.hyper_meet(carrier_->element(i), carrier_->element(j))));
        join_members_.push_back(
            member_bitmap(h.hyper_join(carrier_->element(i), carrier_->element(j))));
      }
    }
  }

  const C& carrier() const { return *carrier_; }

  /// Member set of element(i) op element(j).
  const IndexSet& base(HyperOp op, std::size_t i, std::size_t j) const {
    return (op == HyperOp::Meet ? meet_members_ : join_members_)[i * n_ + j];
  }

  /// Union of a op b over all a in `a`, b in `b`.
  IndexSet extend(HyperOp op, const IndexSet& a, const IndexSet& b) const {
    IndexSet out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!a.contains(i)) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (b.contains(j)) out.unite(base(op, i, j));
      }
    }
    return out;
  }

  /// Member bitmap of an interval, by scanning every carrier element.
  IndexSet member_bitmap(const Interval<C>& v) const {
    IndexSet out(n_);
    if (v.is_empty()) return out;
    for (std::size_t i = 0; i < n_; ++i) {
      auto z = carrier_->element(i);
      if (carrier_->leq(v.lo(), z) && carrier_->leq(z, v.hi())) out.insert(i);
    }
    return out;
  }

  IndexSet singleton(const element_t<C>& x) const {
    IndexSet out(n_);
    out.insert(carrier_->index(x));
    return out;
  }

  IndexSet from_elements(const std::vector<element_t<C>>& xs) const {
    IndexSet out(n_);
    for (const auto& x : xs) out.insert(carrier_->index(x));
    return out;
  }

  std::vector<element_t<C>> to_elements(const IndexSet& s) const {
    std::vector<element_t<C>> out;
    for (std::size_t i : s.to_indices()) out.push_back(carrier_->element(i));
    return out;
  }

 private:
  const C* carrier_;
  std::size_t n_;
  std::vector<IndexSet> meet_members_;
  std::vector<IndexSet> join_members_;
};

/// One-shot set extension: the union of a op b over the two operand sets,
/// in carrier element order. Throws InfiniteCarrier on carriers that cannot
/// be enumerated.
template <Carrier C>
std::vector<element_t<C>> extend_to_sets(const HyperConnective<C>& h, HyperOp op,
                                         const std::vector<element_t<C>>& a,
                                         const std::vector<element_t<C>>& b) {
  if constexpr (!C::enumerable) {
    throw InfiniteCarrier("set extension needs an enumerable carrier, not '" +
                          h.carrier().name() + "'");
  } else {
    SetExtension<C> ext(h);
    return ext.to_elements(
        ext.extend(op, ext.from_elements(a), ext.from_elements(b)));
  }
}

}  // namespace hyperlat

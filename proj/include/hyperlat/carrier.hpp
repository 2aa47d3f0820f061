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

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "hyperlat/sampling.hpp"

namespace hyperlat {

/// A bounded lattice with an involutive antitone negation, presented through
/// value-semantic elements. The two models are `FiniteLattice` (elements are
/// indices into tables) and `UnitInterval` (elements are exact rationals).
template <class C>
concept Carrier =
    std::semiregular<typename C::element_type> &&
    std::equality_comparable<typename C::element_type> &&
    requires(const C& c, const typename C::element_type& x,
             const typename C::element_type& y) {
      { c.leq(x, y) } -> std::same_as<bool>;
      { c.meet(x, y) } -> std::same_as<typename C::element_type>;
      { c.join(x, y) } -> std::same_as<typename C::element_type>;
      { c.negate(x) } -> std::same_as<typename C::element_type>;
      { c.bottom() } -> std::same_as<typename C::element_type>;
      { c.top() } -> std::same_as<typename C::element_type>;
      { c.format(x) } -> std::convertible_to<std::string>;
      { c.name() } -> std::convertible_to<std::string>;
      { c.is_chain() } -> std::same_as<bool>;
    };

/// A carrier whose elements can be listed; law checks scan it exhaustively.
template <class C>
concept FiniteCarrier = Carrier<C> && C::enumerable &&
    requires(const C& c, std::size_t i, const typename C::element_type& x) {
      { c.size() } -> std::convertible_to<std::size_t>;
      { c.element(i) } -> std::same_as<typename C::element_type>;
      { c.index(x) } -> std::convertible_to<std::size_t>;
    };

template <Carrier C>
using element_t = typename C::element_type;

namespace detail {

/// Evaluates `law` over K-tuples of carrier elements and returns the first
/// tuple on which it is false, or nullopt when it holds everywhere probed.
///
/// Finite carriers are scanned exhaustively in lexicographic element order.
/// Sampled carriers evaluate the lexicographic K-fold product of the
/// canonical probes first and then draw pseudo-random tuples until
/// `params.samples` tuples have been seen in total.
template <std::size_t K, Carrier C, class Law>
std::optional<std::array<element_t<C>, K>> scan_tuples(const C& c,
                                                       const SampleParams& params,
                                                       Law&& law) {
  using E = element_t<C>;
  std::array<E, K> tuple{};
  if constexpr (C::enumerable) {
    const std::size_t n = c.size();
    if (n == 0) return std::nullopt;
    std::array<std::size_t, K> odo{};
    while (true) {
      for (std::size_t k = 0; k < K; ++k) tuple[k] = c.element(odo[k]);
      if (!std::apply(law, tuple)) return tuple;
      std::size_t k = K;
      while (k > 0) {
        --k;
        if (++odo[k] < n) break;
        odo[k] = 0;
        if (k == 0) return std::nullopt;
      }
    }
  } else {
    std::size_t seen = 0;
    const auto canon = canonical_elements(c);
    const std::size_t m = canon.size();
    std::array<std::size_t, K> odo{};
    bool exhausted = m == 0;
    while (!exhausted && seen < params.samples) {
      for (std::size_t k = 0; k < K; ++k) tuple[k] = canon[odo[k]];
      ++seen;
      if (!std::apply(law, tuple)) return tuple;
      std::size_t k = K;
      exhausted = true;
      while (k > 0) {
        --k;
        if (++odo[k] < m) {
          exhausted = false;
          break;
        }
        odo[k] = 0;
      }
    }
    auto sampler = make_sampler(c, params);
    while (seen < params.samples) {
      for (std::size_t k = 0; k < K; ++k) tuple[k] = sampler.next();
      ++seen;
      if (!std::apply(law, tuple)) return tuple;
    }
    return std::nullopt;
  }
}

}  // namespace detail

/// First element violating a unary law, if any.
template <Carrier C, class Law>
std::optional<std::array<element_t<C>, 1>> find_element(const C& c,
                                                        const SampleParams& params,
                                                        Law&& law) {
  return detail::scan_tuples<1>(c, params, std::forward<Law>(law));
}

/// First pair violating a binary law, if any.
template <Carrier C, class Law>
std::optional<std::array<element_t<C>, 2>> find_pair(const C& c,
                                                     const SampleParams& params,
                                                     Law&& law) {
  return detail::scan_tuples<2>(c, params, std::forward<Law>(law));
}

/// First triple violating a ternary law, if any.
template <Carrier C, class Law>
std::optional<std::array<element_t<C>, 3>> find_triple(const C& c,
                                                       const SampleParams& params,
                                                       Law&& law) {
  return detail::scan_tuples<3>(c, params, std::forward<Law>(law));
}

}  // namespace hyperlat

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
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "hyperlat/carrier.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/finite_lattice.hpp"
#include "hyperlat/unit_interval.hpp"

namespace hyperlat {

template <Carrier C>
using BinaryOp = std::function<element_t<C>(element_t<C>, element_t<C>)>;

/// A t-norm together with its dual t-conorm on one carrier. The axioms are
/// not enforced at construction; `check_tnorm` and friends verify them on
/// demand, which is what lets deliberately broken operations be examined.
/// A pair holds references into its carrier and must not outlive it.
template <Carrier C>
struct ConnectivePair {
  std::string name;
  BinaryOp<C> tnorm;
  BinaryOp<C> tconorm;
};

/// T(x,y) = max(0, x + y - 1).
inline UnitRational lukasiewicz_tnorm(const UnitRational& x, const UnitRational& y) {
  Rational s = x.value() + y.value() - Rational(1);
  return s < Rational(0) ? UnitRational::zero() : UnitRational(s);
}

/// S(x,y) = min(1, x + y).
inline UnitRational lukasiewicz_tconorm(const UnitRational& x,
                                        const UnitRational& y) {
  Rational s = x.value() + y.value();
  return s > Rational(1) ? UnitRational::one() : UnitRational(s);
}

/// T(x,y) = x * y.
inline UnitRational product_tnorm(const UnitRational& x, const UnitRational& y) {
  return UnitRational(x.value() * y.value());
}

/// S(x,y) = x + y - x * y.
inline UnitRational product_tconorm(const UnitRational& x, const UnitRational& y) {
  return UnitRational(x.value() + y.value() - x.value() * y.value());
}

/// T(x,y) = min(x,y) when either argument is 1, else 0.
inline UnitRational drastic_tnorm(const UnitRational& x, const UnitRational& y) {
  if (x == UnitRational::one()) return y;
  if (y == UnitRational::one()) return x;
  return UnitRational::zero();
}

/// S(x,y) = max(x,y) when either argument is 0, else 1.
inline UnitRational drastic_tconorm(const UnitRational& x, const UnitRational& y) {
  if (x == UnitRational::zero()) return y;
  if (y == UnitRational::zero()) return x;
  return UnitRational::one();
}

inline const std::array<std::string_view, 4>& builtin_pair_names() {
  static const std::array<std::string_view, 4> names = {
      "meet-join", "lukasiewicz", "product", "drastic"};
  return names;
}

namespace detail {

using RationalBinary = UnitRational (*)(const UnitRational&, const UnitRational&);

inline bool arithmetic_pair_name(std::string_view name, RationalBinary& t,
                                 RationalBinary& s) {
  if (name == "lukasiewicz") {
    t = lukasiewicz_tnorm;
    s = lukasiewicz_tconorm;
    return true;
  }
  if (name == "product") {
    t = product_tnorm;
    s = product_tconorm;
    return true;
  }
  if (name == "drastic") {
    t = drastic_tnorm;
    s = drastic_tconorm;
    return true;
  }
  return false;
}

/// Tabulates a rational formula over a grid carrier. Every value must land
/// back on the grid; the first one that does not aborts with a witness, which
/// is how non-grid-closed pairs (the product pair on any uniform grid finer
/// than {0, 1}) get rejected.
inline std::shared_ptr<const std::vector<std::uint32_t>> tabulate_on_grid(
    const FiniteLattice& l, std::string_view pair_name, std::string_view op_label,
    RationalBinary fn) {
  const auto& grid = l.grid_values();
  if (!grid) {
    throw UnsupportedCarrier("connective pair '" + std::string(pair_name) +
                             "' needs a rational grid, which carrier '" +
                             l.name() + "' does not have");
  }
  const std::size_t n = l.size();
  auto table = std::make_shared<std::vector<std::uint32_t>>(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      UnitRational r = fn((*grid)[i], (*grid)[j]);
      auto e = l.find_grid_value(r);
      if (!e) {
        auto x = l.element(i);
        auto y = l.element(j);
        throw UnsupportedCarrier(
            "connective pair '" + std::string(pair_name) + "' is not closed on "
            "carrier '" + l.name() + "': " + std::string(op_label) + "(" +
                l.format(x) + ", " + l.format(y) + ") = " + r.str() +
                " is off the grid",
            {{"x", l.format(x)}, {"y", l.format(y)}});
      }
      (*table)[i * n + j] = e->index;
    }
  }
  return table;
}

inline BinaryOp<FiniteLattice> table_op(
    const FiniteLattice& l, std::shared_ptr<const std::vector<std::uint32_t>> t) {
  const FiniteLattice* lp = &l;
  const std::size_t n = l.size();
  return [lp, n, t = std::move(t)](ElementId x, ElementId y) {
    return ElementId{(*t)[lp->index(x) * n + lp->index(y)]};
  };
}

}  // namespace detail

/// Builds a named connective pair on `c`.
///
/// "meet-join" works on every carrier. "lukasiewicz", "product" and
/// "drastic" need rational-valued elements: the unit interval, or a grid
/// chain on which the pair is closed (checked exhaustively at construction).
/// On a document-loaded lattice any name in its "connectives" section works.
/// Throws UnsupportedCarrier otherwise.
template <Carrier C>
ConnectivePair<C> builtin_pair(std::string_view name, const C& c) {
  using E = element_t<C>;
  if (name == "meet-join") {
    const C* cp = &c;
    return ConnectivePair<C>{
        std::string(name),
        [cp](E x, E y) { return cp->meet(x, y); },
        [cp](E x, E y) { return cp->join(x, y); }};
  }
  detail::RationalBinary t = nullptr;
  detail::RationalBinary s = nullptr;
  if constexpr (std::same_as<C, UnitInterval>) {
    if (detail::arithmetic_pair_name(name, t, s)) {
      return ConnectivePair<C>{
          std::string(name),
          [t](E x, E y) { return t(x, y); },
          [s](E x, E y) { return s(x, y); }};
    }
  } else if constexpr (std::same_as<C, FiniteLattice>) {
    if (detail::arithmetic_pair_name(name, t, s)) {
      auto tt = detail::tabulate_on_grid(c, name, "T", t);
      auto st = detail::tabulate_on_grid(c, name, "S", s);
      return ConnectivePair<C>{std::string(name), detail::table_op(c, tt),
                               detail::table_op(c, st)};
    }
    if (const auto* tables = c.custom_connective(name)) {
      const FiniteLattice* lp = &c;
      const std::size_t n = c.size();
      const std::vector<std::uint32_t>* tn = &tables->tnorm;
      const std::vector<std::uint32_t>* sn = &tables->tconorm;
      return ConnectivePair<C>{
          std::string(name),
          [lp, n, tn](ElementId x, ElementId y) {
            return ElementId{(*tn)[lp->index(x) * n + lp->index(y)]};
          },
          [lp, n, sn](ElementId x, ElementId y) {
            return ElementId{(*sn)[lp->index(x) * n + lp->index(y)]};
          }};
    }
  }
  throw UnsupportedCarrier("no connective pair named '" + std::string(name) +
                           "' on carrier '" + c.name() + "'");
}

/// Two connective pairs with the pointwise order that makes the generalized
/// hyperoperations well defined: outer.tnorm <= inner.tnorm and
/// inner.tconorm <= outer.tconorm everywhere. The hyper-meet of x and y is
/// [outer.tnorm(x,y), inner.tnorm(x,y)] and the hyper-join is
/// [inner.tconorm(x,y), outer.tconorm(x,y)].
template <Carrier C>
struct GeneralizedQuadruple {
  ConnectivePair<C> outer;
  ConnectivePair<C> inner;
  /// Whether the inner operations agreed with lattice meet/join on every
  /// probed tuple. Determined during construction; on sampled carriers this
  /// is evidence, not proof.
  bool inner_tnorm_is_meet = false;
  bool inner_tconorm_is_join = false;

  std::string name() const {
    return "quad(" + outer.name + ", " + inner.name + ")";
  }
};

/// Validates the pointwise order of the two pairs (exhaustively on finite
/// carriers, on the deterministic probe stream otherwise) and records
/// whether the inner pair is just meet/join. Throws OrderViolation with the
/// first offending pair of elements.
template <Carrier C>
GeneralizedQuadruple<C> make_quadruple(const C& c, ConnectivePair<C> outer,
                                       ConnectivePair<C> inner,
                                       const SampleParams& params = {}) {
  using E = element_t<C>;
  if (auto w = find_pair(c, params, [&](const E& x, const E& y) {
        return c.leq(outer.tnorm(x, y), inner.tnorm(x, y));
      })) {
    const auto& [x, y] = *w;
    throw OrderViolation(
        "quadruple (" + outer.name + ", " + inner.name + ") rejected: outer "
        "t-norm exceeds inner t-norm at x=" + std::string(c.format(x)) +
            ", y=" + std::string(c.format(y)) + " (" + outer.name + ": " +
            std::string(c.format(outer.tnorm(x, y))) + ", " + inner.name +
            ": " + std::string(c.format(inner.tnorm(x, y))) + ")",
        {{"x", std::string(c.format(x))}, {"y", std::string(c.format(y))}});
  }
  if (auto w = find_pair(c, params, [&](const E& x, const E& y) {
        return c.leq(inner.tconorm(x, y), outer.tconorm(x, y));
      })) {
    const auto& [x, y] = *w;
    throw OrderViolation(
        "quadruple (" + outer.name + ", " + inner.name + ") rejected: inner "
        "t-conorm exceeds outer t-conorm at x=" + std::string(c.format(x)) +
            ", y=" + std::string(c.format(y)) + " (" + inner.name + ": " +
            std::string(c.format(inner.tconorm(x, y))) + ", " + outer.name +
            ": " + std::string(c.format(outer.tconorm(x, y))) + ")",
        {{"x", std::string(c.format(x))}, {"y", std::string(c.format(y))}});
  }

  GeneralizedQuadruple<C> q{std::move(outer), std::move(inner), false, false};
  q.inner_tnorm_is_meet = !find_pair(c, params, [&](const E& x, const E& y) {
    return q.inner.tnorm(x, y) == c.meet(x, y);
  });
  q.inner_tconorm_is_join = !find_pair(c, params, [&](const E& x, const E& y) {
    return q.inner.tconorm(x, y) == c.join(x, y);
  });
  return q;
}

}  // namespace hyperlat

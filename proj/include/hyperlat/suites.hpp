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

//  Verification suites. Every suite scans a law over the carrier (exhaustive
//  on finite carriers, deterministic samples otherwise), reports one Check
//  per law and attaches the first violating tuple as a witness. Checks that
//  a given construction cannot support are reported as skips with a reason,
//  never silently dropped.

#pragma once

#include <string>
#include <utility>

#include "hyperlat/hyperops.hpp"
#include "hyperlat/report.hpp"

namespace hyperlat {

template <Carrier C>
std::string describe_carrier(const C& c) {
  if constexpr (C::enumerable) {
    return c.name() + " (" + std::to_string(c.size()) + " elements)";
  } else {
    return c.name() + " (dense rational chain, sampled)";
  }
}

namespace detail {

template <Carrier C>
Report new_report(const C& c, std::string suite, std::string connectives,
                  const SampleParams& p) {
  Report r;
  r.suite = std::move(suite);
  r.carrier = describe_carrier(c);
  r.connectives = std::move(connectives);
  if constexpr (!C::enumerable) r.params = p;
  return r;
}

template <Carrier C, std::size_t K>
Error::Bindings bind_witness(const C& c, const std::array<element_t<C>, K>& tuple,
                             const std::array<const char*, K>& vars) {
  Error::Bindings out;
  for (std::size_t k = 0; k < K; ++k) {
    out.emplace_back(vars[k], std::string(c.format(tuple[k])));
  }
  return out;
}

/// Scans `law` and turns the outcome into a Check, binding the first
/// violating tuple to the given variable names.
template <std::size_t K, Carrier C, class Law>
Check law_check(const C& c, const SampleParams& p, std::string name,
                std::string anchor, const std::array<const char*, K>& vars,
                Law&& law, std::string note = "") {
  auto w = scan_tuples<K>(c, p, law);
  if (!w) return Check::pass(std::move(name), std::move(anchor), std::move(note));
  return Check::fail(std::move(name), std::move(anchor), bind_witness(c, *w, vars),
                     std::move(note));
}

template <Carrier C>
void append_pointwise_lattice_checks(Report& r, const C& c, const SampleParams& p) {
  using E = element_t<C>;
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};

  r.checks.push_back(law_check<1>(c, p, "meet(x, x) = x", "lattice.meet-idempotent",
                                  vx, [&](const E& x) { return c.meet(x, x) == x; }));
  r.checks.push_back(law_check<1>(c, p, "join(x, x) = x", "lattice.join-idempotent",
                                  vx, [&](const E& x) { return c.join(x, x) == x; }));
  r.checks.push_back(law_check<2>(
      c, p, "meet(x, y) = meet(y, x)", "lattice.meet-commutative", vxy,
      [&](const E& x, const E& y) { return c.meet(x, y) == c.meet(y, x); }));
  r.checks.push_back(law_check<2>(
      c, p, "join(x, y) = join(y, x)", "lattice.join-commutative", vxy,
      [&](const E& x, const E& y) { return c.join(x, y) == c.join(y, x); }));
  r.checks.push_back(law_check<3>(
      c, p, "meet(meet(x,y), z) = meet(x, meet(y,z))", "lattice.meet-associative",
      vxyz, [&](const E& x, const E& y, const E& z) {
        return c.meet(c.meet(x, y), z) == c.meet(x, c.meet(y, z));
      }));
  r.checks.push_back(law_check<3>(
      c, p, "join(join(x,y), z) = join(x, join(y,z))", "lattice.join-associative",
      vxyz, [&](const E& x, const E& y, const E& z) {
        return c.join(c.join(x, y), z) == c.join(x, c.join(y, z));
      }));
  r.checks.push_back(law_check<2>(
      c, p, "meet(x, join(x,y)) = x and join(x, meet(x,y)) = x",
      "lattice.absorption", vxy, [&](const E& x, const E& y) {
        return c.meet(x, c.join(x, y)) == x && c.join(x, c.meet(x, y)) == x;
      }));
  r.checks.push_back(law_check<2>(
      c, p, "x <= y iff meet(x,y) = x iff join(x,y) = y",
      "lattice.order-equivalence", vxy, [&](const E& x, const E& y) {
        const bool le = c.leq(x, y);
        return le == (c.meet(x, y) == x) && le == (c.join(x, y) == y);
      }));
  r.checks.push_back(law_check<1>(
      c, p, "0 <= x and x <= 1", "lattice.bounds", vx,
      [&](const E& x) { return c.leq(c.bottom(), x) && c.leq(x, c.top()); }));
  r.checks.push_back(law_check<3>(
      c, p, "meet(x, join(y,z)) = join(meet(x,y), meet(x,z))",
      "lattice.distributive-meet", vxyz, [&](const E& x, const E& y, const E& z) {
        return c.meet(x, c.join(y, z)) == c.join(c.meet(x, y), c.meet(x, z));
      }));
  r.checks.push_back(law_check<3>(
      c, p, "join(x, meet(y,z)) = meet(join(x,y), join(x,z))",
      "lattice.distributive-join", vxyz, [&](const E& x, const E& y, const E& z) {
        return c.join(x, c.meet(y, z)) == c.meet(c.join(x, y), c.join(x, z));
      }));
  r.checks.push_back(law_check<1>(
      c, p, "neg(neg(x)) = x", "lattice.negation-involution", vx,
      [&](const E& x) { return c.negate(c.negate(x)) == x; }));
  r.checks.push_back(law_check<2>(
      c, p, "x <= y implies neg(y) <= neg(x)", "lattice.negation-antitone", vxy,
      [&](const E& x, const E& y) {
        return !c.leq(x, y) || c.leq(c.negate(y), c.negate(x));
      }));
  r.checks.push_back(law_check<2>(
      c, p, "neg(meet(x,y)) = join(neg(x), neg(y))",
      "lattice.negation-demorgan-meet", vxy, [&](const E& x, const E& y) {
        return c.negate(c.meet(x, y)) == c.join(c.negate(x), c.negate(y));
      }));
  r.checks.push_back(law_check<2>(
      c, p, "neg(join(x,y)) = meet(neg(x), neg(y))",
      "lattice.negation-demorgan-join", vxy, [&](const E& x, const E& y) {
        return c.negate(c.join(x, y)) == c.meet(c.negate(x), c.negate(y));
      }));
}

}  // namespace detail

/// The pointwise lattice and negation laws on any carrier.
template <Carrier C>
Report check_carrier_laws(const C& c, const SampleParams& p = {}) {
  Report r = detail::new_report(c, "lattice", "", p);
  detail::append_pointwise_lattice_checks(r, c, p);
  return r;
}

/// Full re-verification of a finite lattice: the order axioms, consistency
/// of the meet/join tables with the order (greatest lower and least upper
/// bounds), the bounds, distributivity and the negation laws. Accepts
/// structurally built instances that never went through document
/// validation, which is how broken fixtures get examined.
inline Report check_demorgan_lattice(const FiniteLattice& l) {
  const SampleParams p{};
  Report r = detail::new_report(l, "lattice", "", p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};

  r.checks.push_back(detail::law_check<1>(
      l, p, "x <= x", "lattice.order-reflexive", vx,
      [&](ElementId x) { return l.leq(x, x); }));
  r.checks.push_back(detail::law_check<2>(
      l, p, "x <= y and y <= x imply x = y", "lattice.order-antisymmetric", vxy,
      [&](ElementId x, ElementId y) {
        return !(l.leq(x, y) && l.leq(y, x)) || x == y;
      }));
  r.checks.push_back(detail::law_check<3>(
      l, p, "x <= y and y <= z imply x <= z", "lattice.order-transitive", vxyz,
      [&](ElementId x, ElementId y, ElementId z) {
        return !(l.leq(x, y) && l.leq(y, z)) || l.leq(x, z);
      }));
  r.checks.push_back(detail::law_check<2>(
      l, p, "meet(x,y) is the greatest lower bound of x and y",
      "lattice.meet-is-glb", vxy, [&](ElementId x, ElementId y) {
        ElementId m = l.meet(x, y);
        if (!l.leq(m, x) || !l.leq(m, y)) return false;
        for (std::size_t k = 0; k < l.size(); ++k) {
          ElementId w = l.element(k);
          if (l.leq(w, x) && l.leq(w, y) && !l.leq(w, m)) return false;
        }
        return true;
      }));
  r.checks.push_back(detail::law_check<2>(
      l, p, "join(x,y) is the least upper bound of x and y",
      "lattice.join-is-lub", vxy, [&](ElementId x, ElementId y) {
        ElementId j = l.join(x, y);
        if (!l.leq(x, j) || !l.leq(y, j)) return false;
        for (std::size_t k = 0; k < l.size(); ++k) {
          ElementId w = l.element(k);
          if (l.leq(x, w) && l.leq(y, w) && !l.leq(j, w)) return false;
        }
        return true;
      }));
  detail::append_pointwise_lattice_checks(r, l, p);
  return r;
}

/// The four t-norm axioms for a binary operation: unit element 1,
/// commutativity, associativity and monotonicity in the left argument
/// (the right argument follows from commutativity and is covered by
/// `check_bounds`).
template <Carrier C>
Report check_tnorm(const C& c, const BinaryOp<C>& t, const SampleParams& p = {},
                   const std::string& prefix = "tnorm") {
  using E = element_t<C>;
  Report r = detail::new_report(c, prefix, "", p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};
  r.checks.push_back(detail::law_check<1>(
      c, p, "T(1, x) = x", prefix + ".unit", vx,
      [&](const E& x) { return t(c.top(), x) == x; }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "T(x, y) = T(y, x)", prefix + ".commutative", vxy,
      [&](const E& x, const E& y) { return t(x, y) == t(y, x); }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "T(T(x,y), z) = T(x, T(y,z))", prefix + ".associative", vxyz,
      [&](const E& x, const E& y, const E& z) {
        return t(t(x, y), z) == t(x, t(y, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "x <= y implies T(x, z) <= T(y, z)", prefix + ".monotone", vxyz,
      [&](const E& x, const E& y, const E& z) {
        return !c.leq(x, y) || c.leq(t(x, z), t(y, z));
      }));
  return r;
}

/// The dual axioms for a t-conorm: unit element 0, commutativity,
/// associativity and monotonicity in the left argument.
template <Carrier C>
Report check_tconorm(const C& c, const BinaryOp<C>& s, const SampleParams& p = {},
                     const std::string& prefix = "tconorm") {
  using E = element_t<C>;
  Report r = detail::new_report(c, prefix, "", p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};
  r.checks.push_back(detail::law_check<1>(
      c, p, "S(0, x) = x", prefix + ".unit", vx,
      [&](const E& x) { return s(c.bottom(), x) == x; }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "S(x, y) = S(y, x)", prefix + ".commutative", vxy,
      [&](const E& x, const E& y) { return s(x, y) == s(y, x); }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "S(S(x,y), z) = S(x, S(y,z))", prefix + ".associative", vxyz,
      [&](const E& x, const E& y, const E& z) {
        return s(s(x, y), z) == s(x, s(y, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "x <= y implies S(x, z) <= S(y, z)", prefix + ".monotone", vxyz,
      [&](const E& x, const E& y, const E& z) {
        return !c.leq(x, y) || c.leq(s(x, z), s(y, z));
      }));
  return r;
}

/// Duality of a pair under the carrier negation, plus the annihilator facts
/// it implies: neg(T(x,y)) = S(neg x, neg y) and back, T(0,x) = 0,
/// S(1,x) = 1.
template <Carrier C>
Report check_duality(const C& c, const ConnectivePair<C>& pair,
                     const SampleParams& p = {},
                     const std::string& prefix = "duality") {
  using E = element_t<C>;
  Report r = detail::new_report(c, prefix, pair.name, p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  r.checks.push_back(detail::law_check<2>(
      c, p, "neg(T(x,y)) = S(neg(x), neg(y))", prefix + ".tnorm-to-tconorm", vxy,
      [&](const E& x, const E& y) {
        return c.negate(pair.tnorm(x, y)) ==
               pair.tconorm(c.negate(x), c.negate(y));
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "neg(S(x,y)) = T(neg(x), neg(y))", prefix + ".tconorm-to-tnorm", vxy,
      [&](const E& x, const E& y) {
        return c.negate(pair.tconorm(x, y)) ==
               pair.tnorm(c.negate(x), c.negate(y));
      }));
  r.checks.push_back(detail::law_check<1>(
      c, p, "T(0, x) = 0", prefix + ".annihilator-tnorm", vx,
      [&](const E& x) { return pair.tnorm(c.bottom(), x) == c.bottom(); }));
  r.checks.push_back(detail::law_check<1>(
      c, p, "S(1, x) = 1", prefix + ".annihilator-tconorm", vx,
      [&](const E& x) { return pair.tconorm(c.top(), x) == c.top(); }));
  return r;
}

/// The interlacing bounds T(x,y) <= meet(x,y) <= x <= join(x,y) <= S(x,y)
/// and the derived right-argument monotonicity of both operations.
template <Carrier C>
Report check_bounds(const C& c, const ConnectivePair<C>& pair,
                    const SampleParams& p = {},
                    const std::string& prefix = "bounds") {
  using E = element_t<C>;
  Report r = detail::new_report(c, prefix, pair.name, p);
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};
  r.checks.push_back(detail::law_check<2>(
      c, p, "T(x,y) <= meet(x,y) <= x <= join(x,y) <= S(x,y)",
      prefix + ".interlacing", vxy, [&](const E& x, const E& y) {
        const E m = c.meet(x, y);
        const E j = c.join(x, y);
        return c.leq(pair.tnorm(x, y), m) && c.leq(m, x) && c.leq(x, j) &&
               c.leq(j, pair.tconorm(x, y));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "y <= z implies T(x, y) <= T(x, z)",
      prefix + ".monotone-right-tnorm", vxyz,
      [&](const E& x, const E& y, const E& z) {
        return !c.leq(y, z) || c.leq(pair.tnorm(x, y), pair.tnorm(x, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "y <= z implies S(x, y) <= S(x, z)",
      prefix + ".monotone-right-tconorm", vxyz,
      [&](const E& x, const E& y, const E& z) {
        return !c.leq(y, z) || c.leq(pair.tconorm(x, y), pair.tconorm(x, z));
      }));
  return r;
}

/// Distributivity of both operations of a pair over meet and join in each
/// argument. These four identities are what make the closed interval forms
/// of the hyperoperations agree with the member-by-member extension. On a
/// totally ordered carrier they hold for every monotone commutative
/// operation, and the report notes that.
template <Carrier C>
Report check_op_distributivity(const C& c, const ConnectivePair<C>& pair,
                               const SampleParams& p = {},
                               const std::string& prefix = "cond32") {
  using E = element_t<C>;
  Report r = detail::new_report(c, prefix, pair.name, p);
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};
  r.checks.push_back(detail::law_check<3>(
      c, p, "T(join(x,y), z) = join(T(x,z), T(y,z))", prefix + ".tnorm-over-join",
      vxyz, [&](const E& x, const E& y, const E& z) {
        return pair.tnorm(c.join(x, y), z) ==
               c.join(pair.tnorm(x, z), pair.tnorm(y, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "T(meet(x,y), z) = meet(T(x,z), T(y,z))", prefix + ".tnorm-over-meet",
      vxyz, [&](const E& x, const E& y, const E& z) {
        return pair.tnorm(c.meet(x, y), z) ==
               c.meet(pair.tnorm(x, z), pair.tnorm(y, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "S(join(x,y), z) = join(S(x,z), S(y,z))", prefix + ".tconorm-over-join",
      vxyz, [&](const E& x, const E& y, const E& z) {
        return pair.tconorm(c.join(x, y), z) ==
               c.join(pair.tconorm(x, z), pair.tconorm(y, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "S(meet(x,y), z) = meet(S(x,z), S(y,z))", prefix + ".tconorm-over-meet",
      vxyz, [&](const E& x, const E& y, const E& z) {
        return pair.tconorm(c.meet(x, y), z) ==
               c.meet(pair.tconorm(x, z), pair.tconorm(y, z));
      }));
  if (c.is_chain()) {
    r.note = "carrier is totally ordered, so these identities follow from "
             "monotonicity alone; verified anyway";
  }
  return r;
}

/// Re-verification of the pointwise order between the two pairs of a
/// generalized hyperoperation (the constructor already enforced it once).
template <Carrier C>
Report check_quadruple_order(const C& c, const HyperConnective<C>& h,
                             const SampleParams& p = {}) {
  using E = element_t<C>;
  Report r = detail::new_report(c, "quad", h.description(), p);
  const std::array<const char*, 2> vxy = {"x", "y"};
  r.checks.push_back(detail::law_check<2>(
      c, p, "outer T(x,y) <= inner T(x,y)", "quad.tnorm-order", vxy,
      [&](const E& x, const E& y) {
        return c.leq(h.outer().tnorm(x, y), h.inner().tnorm(x, y));
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "inner S(x,y) <= outer S(x,y)", "quad.tconorm-order", vxy,
      [&](const E& x, const E& y) {
        return c.leq(h.inner().tconorm(x, y), h.outer().tconorm(x, y));
      }));
  const bool t2_meet = !find_pair(c, p, [&](const E& x, const E& y) {
    return h.inner().tnorm(x, y) == c.meet(x, y);
  });
  const bool s2_join = !find_pair(c, p, [&](const E& x, const E& y) {
    return h.inner().tconorm(x, y) == c.join(x, y);
  });
  r.note = std::string("inner t-norm equals meet: ") + (t2_meet ? "yes" : "no") +
           "; inner t-conorm equals join: " + (s2_join ? "yes" : "no");
  return r;
}

/// Structural properties of the hyperoperations: commutativity, boundary
/// memberships, monotonicity in the interval order and the two negation
/// laws in every mode; the membership, closed-form and inclusion properties
/// in pair mode, where they are theorems. On finite carriers every closed
/// form is compared against the brute-force member enumeration.
///
/// `closed_forms_sound` should be false when the pair failed the
/// distributivity identities on a carrier that cannot be enumerated; the
/// closed forms are then unreliable and those checks are skipped rather
/// than trusted.
template <Carrier C>
Report check_hyper_properties(const C& c, const HyperConnective<C>& h,
                              const SampleParams& p = {},
                              bool closed_forms_sound = true) {
  using E = element_t<C>;
  Report r = detail::new_report(c, "hyper", h.description(), p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};
  const std::array<const char*, 3> vxlohi = {"x", "lo", "hi"};

  r.checks.push_back(detail::law_check<2>(
      c, p, "hmeet(x,y) = hmeet(y,x)", "hyper.meet-commutative", vxy,
      [&](const E& x, const E& y) {
        return h.hyper_meet(x, y) == h.hyper_meet(y, x);
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "hjoin(x,y) = hjoin(y,x)", "hyper.join-commutative", vxy,
      [&](const E& x, const E& y) {
        return h.hyper_join(x, y) == h.hyper_join(y, x);
      }));
  r.checks.push_back(detail::law_check<1>(
      c, p, "x in hmeet(1,x), 0 in hmeet(0,x), x in hjoin(0,x), 1 in hjoin(1,x)",
      "hyper.boundary", vx, [&](const E& x) {
        return interval_contains(c, h.hyper_meet(c.top(), x), x) &&
               interval_contains(c, h.hyper_meet(c.bottom(), x), c.bottom()) &&
               interval_contains(c, h.hyper_join(c.bottom(), x), x) &&
               interval_contains(c, h.hyper_join(c.top(), x), c.top());
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "x <= y implies hmeet(x,z) <= hmeet(y,z) (interval order)",
      "hyper.meet-monotone", vxyz, [&](const E& x, const E& y, const E& z) {
        return !c.leq(x, y) ||
               interval_leq(c, h.hyper_meet(x, z), h.hyper_meet(y, z));
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "x <= y implies hjoin(x,z) <= hjoin(y,z) (interval order)",
      "hyper.join-monotone", vxyz, [&](const E& x, const E& y, const E& z) {
        return !c.leq(x, y) ||
               interval_leq(c, h.hyper_join(x, z), h.hyper_join(y, z));
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "neg-image(hjoin(x,y)) = hmeet(neg(x), neg(y))",
      "hyper.negation-join", vxy, [&](const E& x, const E& y) {
        auto [lhs, rhs] = h.join_negation_sides(x, y);
        return lhs == rhs;
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "neg-image(hmeet(x,y)) = hjoin(neg(x), neg(y))",
      "hyper.negation-meet", vxy, [&](const E& x, const E& y) {
        auto [lhs, rhs] = h.meet_negation_sides(x, y);
        return lhs == rhs;
      }));

  if (!h.pair_mode()) {
    const std::string why = "not asserted for generalized hyperoperations";
    r.checks.push_back(Check::skip("x in hmeet(x,x) and x in hjoin(x,x)",
                                   "hyper.self-membership", why));
    r.checks.push_back(Check::skip(
        "x in hjoin(hmeet(x,y), x) and x in hmeet(hjoin(x,y), x)",
        "hyper.absorption-membership", why));
    r.checks.push_back(Check::skip(
        "x <= y iff y in hjoin(x,y) iff x in hmeet(x,y)",
        "hyper.order-compatibility", why));
    r.checks.push_back(Check::skip(
        "hmeet(x, [lo,hi]) closed form matches the member extension",
        "hyper.interval-form", "no closed interval form in generalized mode"));
    if constexpr (C::enumerable) {
      SetExtension<C> ext(h);
      r.checks.push_back(detail::law_check<3>(
          c, p, "hmeet(hmeet(x,y), z) = hmeet(x, hmeet(y,z)) as member sets",
          "hyper.assoc-meet", vxyz,
          [&](const E& x, const E& y, const E& z) {
            const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
            return ext.extend(HyperOp::Meet, ext.base(HyperOp::Meet, i, j),
                              ext.singleton(z)) ==
                   ext.extend(HyperOp::Meet, ext.singleton(x),
                              ext.base(HyperOp::Meet, j, k));
          },
          "closed form not asserted in generalized mode"));
      r.checks.push_back(detail::law_check<3>(
          c, p, "hjoin(hjoin(x,y), z) = hjoin(x, hjoin(y,z)) as member sets",
          "hyper.assoc-join", vxyz,
          [&](const E& x, const E& y, const E& z) {
            const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
            return ext.extend(HyperOp::Join, ext.base(HyperOp::Join, i, j),
                              ext.singleton(z)) ==
                   ext.extend(HyperOp::Join, ext.singleton(x),
                              ext.base(HyperOp::Join, j, k));
          },
          "closed form not asserted in generalized mode"));
    } else {
      const std::string no_enum =
          "needs an enumerable carrier in generalized mode";
      r.checks.push_back(Check::skip(
          "hmeet(hmeet(x,y), z) = hmeet(x, hmeet(y,z)) as member sets",
          "hyper.assoc-meet", no_enum));
      r.checks.push_back(Check::skip(
          "hjoin(hjoin(x,y), z) = hjoin(x, hjoin(y,z)) as member sets",
          "hyper.assoc-join", no_enum));
    }
    r.checks.push_back(Check::skip(
        "inclusions of hmeet(x, hjoin(y,z)) meets its distributed form",
        "hyper.distrib-meet", why));
    r.checks.push_back(Check::skip(
        "inclusions of hjoin(x, hmeet(y,z)) meets its distributed form",
        "hyper.distrib-join", why));
    return r;
  }

  r.checks.push_back(detail::law_check<1>(
      c, p, "x in hmeet(x,x) and x in hjoin(x,x)", "hyper.self-membership", vx,
      [&](const E& x) {
        return interval_contains(c, h.hyper_meet(x, x), x) &&
               interval_contains(c, h.hyper_join(x, x), x);
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "x <= y iff y in hjoin(x,y) iff x in hmeet(x,y)",
      "hyper.order-compatibility", vxy, [&](const E& x, const E& y) {
        const bool le = c.leq(x, y);
        return le == interval_contains(c, h.hyper_join(x, y), y) &&
               le == interval_contains(c, h.hyper_meet(x, y), x);
      }));

  if constexpr (C::enumerable) {
    SetExtension<C> ext(h);
    r.checks.push_back(detail::law_check<2>(
        c, p, "x in hjoin(hmeet(x,y), x) and x in hmeet(hjoin(x,y), x)",
        "hyper.absorption-membership", vxy, [&](const E& x, const E& y) {
          const std::size_t i = c.index(x), j = c.index(y);
          return ext.extend(HyperOp::Join, ext.base(HyperOp::Meet, i, j),
                            ext.singleton(x))
                     .contains(i) &&
                 ext.extend(HyperOp::Meet, ext.base(HyperOp::Join, i, j),
                            ext.singleton(x))
                     .contains(i);
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "hmeet(x, [lo,hi]) and hjoin(x, [lo,hi]) closed forms match the "
        "member extension",
        "hyper.interval-form", vxlohi, [&](const E& x, const E& lo, const E& hi) {
          if (!c.leq(lo, hi)) return true;  // not an interval; nothing to check
          const Interval<C> iv = Interval<C>::of(c, lo, hi);
          const IndexSet members = ext.member_bitmap(iv);
          const IndexSet sx = ext.singleton(x);
          return ext.member_bitmap(h.meet_on_interval(x, iv)) ==
                     ext.extend(HyperOp::Meet, sx, members) &&
                 ext.member_bitmap(h.join_on_interval(x, iv)) ==
                     ext.extend(HyperOp::Join, sx, members);
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "both association orders of hmeet and its closed triple form agree "
        "as member sets",
        "hyper.assoc-meet", vxyz, [&](const E& x, const E& y, const E& z) {
          const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
          const IndexSet left = ext.extend(
              HyperOp::Meet, ext.base(HyperOp::Meet, i, j), ext.singleton(z));
          const IndexSet right = ext.extend(
              HyperOp::Meet, ext.singleton(x), ext.base(HyperOp::Meet, j, k));
          return left == right && left == ext.member_bitmap(h.meet3(x, y, z));
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "both association orders of hjoin and its closed triple form agree "
        "as member sets",
        "hyper.assoc-join", vxyz, [&](const E& x, const E& y, const E& z) {
          const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
          const IndexSet left = ext.extend(
              HyperOp::Join, ext.base(HyperOp::Join, i, j), ext.singleton(z));
          const IndexSet right = ext.extend(
              HyperOp::Join, ext.singleton(x), ext.base(HyperOp::Join, j, k));
          return left == right && left == ext.member_bitmap(h.join3(x, y, z));
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "[T(x, join(y,z)), meet(x, join(y,z))] is included in "
        "hmeet(x, hjoin(y,z)) and in hjoin(hmeet(x,y), hmeet(x,z))",
        "hyper.distrib-meet", vxyz, [&](const E& x, const E& y, const E& z) {
          const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
          const E jyz = c.join(y, z);
          const IndexSet lhs = ext.member_bitmap(
              Interval<C>::of(c, h.outer().tnorm(x, jyz), c.meet(x, jyz)));
          IndexSet rhs = ext.extend(HyperOp::Meet, ext.singleton(x),
                                    ext.member_bitmap(h.hyper_join(y, z)));
          rhs.intersect(ext.extend(HyperOp::Join, ext.base(HyperOp::Meet, i, j),
                                   ext.base(HyperOp::Meet, i, k)));
          return lhs.is_subset_of(rhs);
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "[join(x, meet(y,z)), S(x, meet(y,z))] is included in "
        "hjoin(x, hmeet(y,z)) and in hmeet(hjoin(x,y), hjoin(x,z))",
        "hyper.distrib-join", vxyz, [&](const E& x, const E& y, const E& z) {
          const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
          const E myz = c.meet(y, z);
          const IndexSet lhs = ext.member_bitmap(
              Interval<C>::of(c, c.join(x, myz), h.outer().tconorm(x, myz)));
          IndexSet rhs = ext.extend(HyperOp::Join, ext.singleton(x),
                                    ext.member_bitmap(h.hyper_meet(y, z)));
          rhs.intersect(ext.extend(HyperOp::Meet, ext.base(HyperOp::Join, i, j),
                                   ext.base(HyperOp::Join, i, k)));
          return lhs.is_subset_of(rhs);
        }));
  } else {
    if (!closed_forms_sound) {
      const std::string why =
          "pair does not distribute over meet and join, so the closed forms "
          "cannot be trusted on a carrier that cannot be enumerated";
      for (const char* anchor :
           {"hyper.absorption-membership", "hyper.interval-form",
            "hyper.assoc-meet", "hyper.assoc-join", "hyper.distrib-meet",
            "hyper.distrib-join"}) {
        r.checks.push_back(Check::skip("closed-form property", anchor, why));
      }
      return r;
    }
    r.checks.push_back(detail::law_check<2>(
        c, p, "x in hjoin(hmeet(x,y), x) and x in hmeet(hjoin(x,y), x)",
        "hyper.absorption-membership", vxy, [&](const E& x, const E& y) {
          return interval_contains(c, h.join_on_interval(x, h.hyper_meet(x, y)),
                                   x) &&
                 interval_contains(c, h.meet_on_interval(x, h.hyper_join(x, y)),
                                   x);
        }));
    r.checks.push_back(detail::law_check<2>(
        c, p,
        "hmeet(x, [y,y]) = hmeet(x,y) and hjoin(x, [y,y]) = hjoin(x,y)",
        "hyper.interval-form", vxy,
        [&](const E& x, const E& y) {
          const Interval<C> sy = Interval<C>::singleton(y);
          return h.meet_on_interval(x, sy) == h.hyper_meet(x, y) &&
                 h.join_on_interval(x, sy) == h.hyper_join(x, y);
        },
        "singleton consistency; the full member-set comparison needs an "
        "enumerable carrier"));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "hmeet(z, hmeet(x,y)) = hmeet(x, hmeet(y,z)) = closed triple form",
        "hyper.assoc-meet", vxyz, [&](const E& x, const E& y, const E& z) {
          const Interval<C> left = h.meet_on_interval(z, h.hyper_meet(x, y));
          const Interval<C> right = h.meet_on_interval(x, h.hyper_meet(y, z));
          return left == right && left == h.meet3(x, y, z);
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "hjoin(z, hjoin(x,y)) = hjoin(x, hjoin(y,z)) = closed triple form",
        "hyper.assoc-join", vxyz, [&](const E& x, const E& y, const E& z) {
          const Interval<C> left = h.join_on_interval(z, h.hyper_join(x, y));
          const Interval<C> right = h.join_on_interval(x, h.hyper_join(y, z));
          return left == right && left == h.join3(x, y, z);
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "[T(x, join(y,z)), meet(x, join(y,z))] is included in "
        "hmeet(x, hjoin(y,z)) and in hjoin(hmeet(x,y), hmeet(x,z))",
        "hyper.distrib-meet", vxyz, [&](const E& x, const E& y, const E& z) {
          const E jyz = c.join(y, z);
          const Interval<C> lhs =
              Interval<C>::of(c, h.outer().tnorm(x, jyz), c.meet(x, jyz));
          const Interval<C> rhs1 = h.meet_on_interval(x, h.hyper_join(y, z));
          const Interval<C> rhs2 = Interval<C>::of(
              c, c.join(h.outer().tnorm(x, y), h.outer().tnorm(x, z)),
              h.outer().tconorm(c.meet(x, y), c.meet(x, z)));
          return interval_subset(c, lhs, rhs1) && interval_subset(c, lhs, rhs2);
        }));
    r.checks.push_back(detail::law_check<3>(
        c, p,
        "[join(x, meet(y,z)), S(x, meet(y,z))] is included in "
        "hjoin(x, hmeet(y,z)) and in hmeet(hjoin(x,y), hjoin(x,z))",
        "hyper.distrib-join", vxyz, [&](const E& x, const E& y, const E& z) {
          const E myz = c.meet(y, z);
          const Interval<C> lhs =
              Interval<C>::of(c, c.join(x, myz), h.outer().tconorm(x, myz));
          const Interval<C> rhs1 = h.join_on_interval(x, h.hyper_meet(y, z));
          const Interval<C> rhs2 = Interval<C>::of(
              c, h.outer().tnorm(c.join(x, y), c.join(x, z)),
              c.meet(h.outer().tconorm(x, y), h.outer().tconorm(x, z)));
          return interval_subset(c, lhs, rhs1) && interval_subset(c, lhs, rhs2);
        }));
  }
  return r;
}

/// The superlattice axioms:
///   A1  x in hmeet(x,x) and x in hjoin(x,x)
///   A2  both hyperoperations are commutative
///   A3  both hyperoperations are associative as set extensions
///   A4  x in hjoin(hmeet(x,y), x) and x in hmeet(hjoin(x,y), x)
///   A5  x <= y iff y in hjoin(x,y) iff x in hmeet(x,y)
/// A3 and A4 need either an enumerable carrier (member enumeration) or the
/// pair-mode closed forms; in generalized mode on a dense carrier they are
/// reported as skipped.
template <Carrier C>
Report check_superlattice(const C& c, const HyperConnective<C>& h,
                          const SampleParams& p = {},
                          bool closed_forms_sound = true) {
  using E = element_t<C>;
  Report r = detail::new_report(c, "superlattice", h.description(), p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};

  r.checks.push_back(detail::law_check<1>(
      c, p, "x in hmeet(x,x) and x in hjoin(x,x)", "superlattice.a1", vx,
      [&](const E& x) {
        return interval_contains(c, h.hyper_meet(x, x), x) &&
               interval_contains(c, h.hyper_join(x, x), x);
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "hmeet(x,y) = hmeet(y,x) and hjoin(x,y) = hjoin(y,x)",
      "superlattice.a2", vxy, [&](const E& x, const E& y) {
        return h.hyper_meet(x, y) == h.hyper_meet(y, x) &&
               h.hyper_join(x, y) == h.hyper_join(y, x);
      }));

  const std::string a3_name =
      "hmeet and hjoin associate: hop(hop(x,y), z) = hop(x, hop(y,z))";
  const std::string a4_name =
      "x in hjoin(hmeet(x,y), x) and x in hmeet(hjoin(x,y), x)";
  if constexpr (C::enumerable) {
    SetExtension<C> ext(h);
    r.checks.push_back(detail::law_check<3>(
        c, p, a3_name, "superlattice.a3", vxyz,
        [&](const E& x, const E& y, const E& z) {
          const std::size_t i = c.index(x), j = c.index(y), k = c.index(z);
          for (HyperOp op : {HyperOp::Meet, HyperOp::Join}) {
            const IndexSet left =
                ext.extend(op, ext.base(op, i, j), ext.singleton(z));
            const IndexSet right =
                ext.extend(op, ext.singleton(x), ext.base(op, j, k));
            if (!(left == right)) return false;
            if (h.pair_mode()) {
              const Interval<C> closed = op == HyperOp::Meet
                                             ? h.meet3(x, y, z)
                                             : h.join3(x, y, z);
              if (!(left == ext.member_bitmap(closed))) return false;
            }
          }
          return true;
        },
        h.pair_mode() ? "member sets, both orders, against the closed form"
                      : "member sets, both orders"));
    r.checks.push_back(detail::law_check<2>(
        c, p, a4_name, "superlattice.a4", vxy, [&](const E& x, const E& y) {
          const std::size_t i = c.index(x), j = c.index(y);
          return ext.extend(HyperOp::Join, ext.base(HyperOp::Meet, i, j),
                            ext.singleton(x))
                     .contains(i) &&
                 ext.extend(HyperOp::Meet, ext.base(HyperOp::Join, i, j),
                            ext.singleton(x))
                     .contains(i);
        }));
  } else if (h.pair_mode() && closed_forms_sound) {
    r.checks.push_back(detail::law_check<3>(
        c, p, a3_name, "superlattice.a3", vxyz,
        [&](const E& x, const E& y, const E& z) {
          const Interval<C> lm = h.meet_on_interval(z, h.hyper_meet(x, y));
          const Interval<C> rm = h.meet_on_interval(x, h.hyper_meet(y, z));
          const Interval<C> lj = h.join_on_interval(z, h.hyper_join(x, y));
          const Interval<C> rj = h.join_on_interval(x, h.hyper_join(y, z));
          return lm == rm && lm == h.meet3(x, y, z) && lj == rj &&
                 lj == h.join3(x, y, z);
        },
        "closed forms on a chain"));
    r.checks.push_back(detail::law_check<2>(
        c, p, a4_name, "superlattice.a4", vxy, [&](const E& x, const E& y) {
          return interval_contains(c, h.join_on_interval(x, h.hyper_meet(x, y)),
                                   x) &&
                 interval_contains(c, h.meet_on_interval(x, h.hyper_join(x, y)),
                                   x);
        }));
  } else {
    const std::string why =
        h.pair_mode()
            ? "pair does not distribute over meet and join, so the closed "
              "forms cannot be trusted on a carrier that cannot be enumerated"
            : "needs an enumerable carrier in generalized mode";
    r.checks.push_back(Check::skip(a3_name, "superlattice.a3", why));
    r.checks.push_back(Check::skip(a4_name, "superlattice.a4", why));
  }

  r.checks.push_back(detail::law_check<2>(
      c, p, "x <= y iff y in hjoin(x,y) iff x in hmeet(x,y)", "superlattice.a5",
      vxy, [&](const E& x, const E& y) {
        const bool le = c.leq(x, y);
        return le == interval_contains(c, h.hyper_join(x, y), y) &&
               le == interval_contains(c, h.hyper_meet(x, y), x);
      }));
  return r;
}

/// The relation "x below y iff y in hjoin(x,y)" extracted from a
/// hyperoperation, together with what the verifier established about it.
struct InducedOrder {
  std::size_t size = 0;
  std::vector<std::uint8_t> rel;  // row-major: rel[i*size+j] = element i below element j
  bool partial_order = false;
  bool coincides_with_carrier = false;

  bool below(std::size_t i, std::size_t j) const { return rel[i * size + j] != 0; }
};

struct A6A8Result {
  Report report;
  std::optional<InducedOrder> induced;
};

/// The alternative axiom set:
///   A6  y in hjoin(x,y) iff x in hmeet(x,y)
///   A7  x in hjoin(x,y) and y in hjoin(x,y) imply x = y
///   A8  x in hjoin(x,y) and y in hjoin(y,z) imply x in hjoin(x,z)
/// When these pass together with A1, the induced relation is extracted,
/// verified to be a partial order, and compared against the carrier order.
/// A coincidence mismatch is reported in the notes, not as a failure: for
/// generalized hyperoperations the induced order may legitimately differ.
template <FiniteCarrier C>
A6A8Result check_a6_a8(const C& c, const HyperConnective<C>& h,
                       const SampleParams& p = {}) {
  using E = element_t<C>;
  A6A8Result result;
  Report& r = result.report;
  r = detail::new_report(c, "a6a8", h.description(), p);
  const std::array<const char*, 1> vx = {"x"};
  const std::array<const char*, 2> vxy = {"x", "y"};
  const std::array<const char*, 3> vxyz = {"x", "y", "z"};

  auto in_join = [&](const E& x, const E& y, const E& who) {
    return interval_contains(c, h.hyper_join(x, y), who);
  };

  r.checks.push_back(detail::law_check<1>(
      c, p, "x in hmeet(x,x) and x in hjoin(x,x)", "a6a8.a1", vx,
      [&](const E& x) {
        return interval_contains(c, h.hyper_meet(x, x), x) &&
               interval_contains(c, h.hyper_join(x, x), x);
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "y in hjoin(x,y) iff x in hmeet(x,y)", "a6a8.a6", vxy,
      [&](const E& x, const E& y) {
        return in_join(x, y, y) == interval_contains(c, h.hyper_meet(x, y), x);
      }));
  r.checks.push_back(detail::law_check<2>(
      c, p, "x in hjoin(x,y) and y in hjoin(x,y) imply x = y", "a6a8.a7", vxy,
      [&](const E& x, const E& y) {
        return !(in_join(x, y, x) && in_join(x, y, y)) || x == y;
      }));
  r.checks.push_back(detail::law_check<3>(
      c, p, "x in hjoin(x,y) and y in hjoin(y,z) imply x in hjoin(x,z)",
      "a6a8.a8", vxyz, [&](const E& x, const E& y, const E& z) {
        return !(in_join(x, y, x) && in_join(y, z, y)) || in_join(x, z, x);
      }));

  const bool prereqs = r.all_passed();
  if (!prereqs) {
    std::string failed;
    for (const Check& ch : r.checks) {
      if (ch.verdict == Verdict::Fail) {
        if (!failed.empty()) failed += ", ";
        failed += ch.anchor;
      }
    }
    const std::string why = "not extracted: " + failed + " failed";
    r.checks.push_back(Check::skip(
        "the relation (x below y iff y in hjoin(x,y)) is a partial order",
        "a6a8.induced-order", why));
    r.checks.push_back(Check::skip("the induced order equals the carrier order",
                                   "a6a8.coincides-with-carrier", why));
    return result;
  }

  const std::size_t n = c.size();
  InducedOrder ord;
  ord.size = n;
  ord.rel.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ord.rel[i * n + j] = in_join(c.element(i), c.element(j), c.element(j));
    }
  }

  Check order_check = Check::pass(
      "the relation (x below y iff y in hjoin(x,y)) is a partial order",
      "a6a8.induced-order");
  for (std::size_t i = 0; i < n && order_check.verdict == Verdict::Pass; ++i) {
    if (!ord.below(i, i)) {
      order_check = Check::fail(order_check.name, order_check.anchor,
                                {{"x", std::string(c.format(c.element(i)))}},
                                "not reflexive");
    }
  }
  for (std::size_t i = 0; i < n && order_check.verdict == Verdict::Pass; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && ord.below(i, j) && ord.below(j, i)) {
        order_check = Check::fail(order_check.name, order_check.anchor,
                                  {{"x", std::string(c.format(c.element(i)))},
                                   {"y", std::string(c.format(c.element(j)))}},
                                  "not antisymmetric");
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && order_check.verdict == Verdict::Pass; ++i) {
    for (std::size_t j = 0; j < n && order_check.verdict == Verdict::Pass; ++j) {
      if (!ord.below(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (ord.below(j, k) && !ord.below(i, k)) {
          order_check = Check::fail(order_check.name, order_check.anchor,
                                    {{"x", std::string(c.format(c.element(i)))},
                                     {"y", std::string(c.format(c.element(j)))},
                                     {"z", std::string(c.format(c.element(k)))}},
                                    "not transitive");
          break;
        }
      }
    }
  }
  ord.partial_order = order_check.verdict == Verdict::Pass;
  r.checks.push_back(order_check);

  Check coincide = Check::pass("the induced order equals the carrier order",
                               "a6a8.coincides-with-carrier", "coincides");
  ord.coincides_with_carrier = true;
  for (std::size_t i = 0; i < n && ord.coincides_with_carrier; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ord.below(i, j) != c.leq(c.element(i), c.element(j))) {
        ord.coincides_with_carrier = false;
        coincide.note = "differs from the carrier order at x=" +
                        std::string(c.format(c.element(i))) + ", y=" +
                        std::string(c.format(c.element(j)));
        break;
      }
    }
  }
  r.checks.push_back(std::move(coincide));
  result.induced = std::move(ord);
  return result;
}

/// The order characterization, in both directions at once: the inner t-norm
/// equals meet everywhere exactly when (x <= y iff x in hmeet(x,y)) holds
/// everywhere, and dually for the inner t-conorm, join and hjoin. Each side
/// is determined independently; a check fails only when the two sides
/// disagree, which would indicate a defect in this tool (or inputs that are
/// not t-norms at all), never a property of valid inputs.
template <Carrier C>
Report check_order_characterization(const C& c, const HyperConnective<C>& h,
                                    const SampleParams& p = {}) {
  using E = element_t<C>;
  Report r = detail::new_report(c, "prop41", h.description(), p);

  auto describe = [&](const char* label, bool holds,
                      const std::optional<std::array<E, 2>>& w) {
    std::string out = std::string(label) + ": " + (holds ? "yes" : "no");
    if (!holds && w) {
      out += " (at x=" + std::string(c.format((*w)[0])) + ", y=" +
             std::string(c.format((*w)[1])) + ")";
    }
    return out;
  };

  const auto w_t2 = find_pair(c, p, [&](const E& x, const E& y) {
    return h.inner().tnorm(x, y) == c.meet(x, y);
  });
  const auto w_meq = find_pair(c, p, [&](const E& x, const E& y) {
    return c.leq(x, y) == interval_contains(c, h.hyper_meet(x, y), x);
  });
  {
    const bool lhs = !w_t2;
    const bool rhs = !w_meq;
    std::string note = describe("inner T equals meet", lhs, w_t2) + "; " +
                       describe("(x <= y iff x in hmeet(x,y))", rhs, w_meq);
    Check chk =
        lhs == rhs
            ? Check::pass("inner T equals meet iff (x <= y iff x in hmeet(x,y))",
                          "prop41.meet-side", std::move(note))
            : Check::fail("inner T equals meet iff (x <= y iff x in hmeet(x,y))",
                          "prop41.meet-side",
                          detail::bind_witness(c, rhs ? *w_t2 : *w_meq,
                                               std::array<const char*, 2>{"x", "y"}),
                          std::move(note));
    r.checks.push_back(std::move(chk));
  }

  const auto w_s2 = find_pair(c, p, [&](const E& x, const E& y) {
    return h.inner().tconorm(x, y) == c.join(x, y);
  });
  const auto w_jeq = find_pair(c, p, [&](const E& x, const E& y) {
    return c.leq(x, y) == interval_contains(c, h.hyper_join(x, y), y);
  });
  {
    const bool lhs = !w_s2;
    const bool rhs = !w_jeq;
    std::string note = describe("inner S equals join", lhs, w_s2) + "; " +
                       describe("(x <= y iff y in hjoin(x,y))", rhs, w_jeq);
    Check chk =
        lhs == rhs
            ? Check::pass("inner S equals join iff (x <= y iff y in hjoin(x,y))",
                          "prop41.join-side", std::move(note))
            : Check::fail("inner S equals join iff (x <= y iff y in hjoin(x,y))",
                          "prop41.join-side",
                          detail::bind_witness(c, rhs ? *w_s2 : *w_jeq,
                                               std::array<const char*, 2>{"x", "y"}),
                          std::move(note));
    r.checks.push_back(std::move(chk));
  }
  return r;
}

/// The t-norm and t-conorm axioms of every pair a hyperoperation is built
/// from, plus the pointwise order re-check in generalized mode. Anchors get
/// "-outer"/"-inner" prefixes when there are two pairs.
template <Carrier C>
Report check_connective_axioms(const C& c, const HyperConnective<C>& h,
                               const SampleParams& p = {}) {
  Report r = detail::new_report(c, "connectives", h.description(), p);
  if (h.pair_mode()) {
    r.append(check_tnorm(c, h.outer().tnorm, p));
    r.append(check_tconorm(c, h.outer().tconorm, p));
  } else {
    r.append(check_tnorm(c, h.outer().tnorm, p, "tnorm-outer"));
    r.append(check_tconorm(c, h.outer().tconorm, p, "tconorm-outer"));
    r.append(check_tnorm(c, h.inner().tnorm, p, "tnorm-inner"));
    r.append(check_tconorm(c, h.inner().tconorm, p, "tconorm-inner"));
    r.append(check_quadruple_order(c, h, p));
  }
  return r;
}

/// Duality and annihilators for every pair of a hyperoperation.
template <Carrier C>
Report check_duality_suite(const C& c, const HyperConnective<C>& h,
                           const SampleParams& p = {}) {
  Report r = detail::new_report(c, "duality", h.description(), p);
  if (h.pair_mode()) {
    r.append(check_duality(c, h.outer(), p));
  } else {
    r.append(check_duality(c, h.outer(), p, "duality-outer"));
    r.append(check_duality(c, h.inner(), p, "duality-inner"));
  }
  return r;
}

/// The meet/join distributivity identities for every pair of a
/// hyperoperation.
template <Carrier C>
Report check_cond32_suite(const C& c, const HyperConnective<C>& h,
                          const SampleParams& p = {}) {
  Report r = detail::new_report(c, "cond32", h.description(), p);
  if (h.pair_mode()) {
    r.append(check_op_distributivity(c, h.outer(), p));
  } else {
    r.append(check_op_distributivity(c, h.outer(), p, "cond32-outer"));
    r.append(check_op_distributivity(c, h.inner(), p, "cond32-inner"));
  }
  return r;
}

/// Whether the closed interval forms may stand in for member enumeration
/// when running `check_hyper_properties` or `check_superlattice` alone.
/// Enumerable carriers always use the member oracle, and generalized mode
/// never uses closed forms, so the answer only hinges on the distributivity
/// identities for a single pair on a dense carrier.
template <Carrier C>
bool closed_forms_trustworthy(const C& c, const HyperConnective<C>& h,
                              const SampleParams& p = {}) {
  if constexpr (C::enumerable) {
    return true;
  } else {
    if (!h.pair_mode()) return true;
    return check_op_distributivity(c, h.outer(), p).all_passed();
  }
}

/// Runs every suite in dependency order: lattice laws, then the connective
/// axioms of each pair, duality, bounds and the distributivity identities,
/// then the hyperoperation properties, the superlattice axioms, the
/// alternative axioms and the order characterization. Suites whose
/// prerequisites failed are reported as skipped with the reason, so a
/// nonsense input produces one clear failure instead of a cascade.
template <Carrier C>
Report run_full_regression(const C& c, const HyperConnective<C>& h,
                           const SampleParams& p = {}) {
  Report full = detail::new_report(c, "full", h.description(), p);

  bool lattice_ok = false;
  if constexpr (std::same_as<C, FiniteLattice>) {
    Report lattice = check_demorgan_lattice(c);
    lattice_ok = lattice.all_passed();
    full.append(std::move(lattice));
  } else {
    Report lattice = check_carrier_laws(c, p);
    lattice_ok = lattice.all_passed();
    full.append(std::move(lattice));
  }

  bool conn_ok = true;
  bool dist_ok = true;
  auto run_pair = [&](const ConnectivePair<C>& pair, const std::string& tag) {
    auto pfx = [&](const char* base) {
      return tag.empty() ? std::string(base) : std::string(base) + "-" + tag;
    };
    Report t = check_tnorm(c, pair.tnorm, p, pfx("tnorm"));
    Report s = check_tconorm(c, pair.tconorm, p, pfx("tconorm"));
    conn_ok = conn_ok && t.all_passed() && s.all_passed();
    full.append(std::move(t));
    full.append(std::move(s));
    full.append(check_duality(c, pair, p, pfx("duality")));
    full.append(check_bounds(c, pair, p, pfx("bounds")));
    Report d = check_op_distributivity(c, pair, p, pfx("cond32"));
    dist_ok = dist_ok && d.all_passed();
    full.append(std::move(d));
  };
  if (h.pair_mode()) {
    run_pair(h.outer(), "");
  } else {
    run_pair(h.outer(), "outer");
    run_pair(h.inner(), "inner");
    Report q = check_quadruple_order(c, h, p);
    conn_ok = conn_ok && q.all_passed();
    full.append(std::move(q));
  }

  if (!lattice_ok || !conn_ok) {
    const std::string why = !lattice_ok ? "carrier failed the lattice laws"
                                        : "connective axioms failed";
    full.checks.push_back(
        Check::skip("hyperoperation properties", "hyper.skipped", why));
    full.checks.push_back(
        Check::skip("superlattice axioms A1-A5", "superlattice.skipped", why));
    full.checks.push_back(
        Check::skip("alternative axioms A6-A8", "a6a8.skipped", why));
    full.checks.push_back(
        Check::skip("order characterization", "prop41.skipped", why));
    return full;
  }

  full.append(check_hyper_properties(c, h, p, dist_ok));
  full.append(check_superlattice(c, h, p, dist_ok));
  if constexpr (FiniteCarrier<C>) {
    full.append(check_a6_a8(c, h, p).report);
  } else {
    full.checks.push_back(Check::skip("alternative axioms A6-A8", "a6a8.skipped",
                                      "needs an enumerable carrier"));
  }
  full.append(check_order_characterization(c, h, p));
  return full;
}

}  // namespace hyperlat

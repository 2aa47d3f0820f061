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

#include <doctest.h>

#include <string>

#include "hyperlat/connectives.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/finite_lattice.hpp"
#include "hyperlat/unit_interval.hpp"

using hyperlat::builtin_pair;
using hyperlat::ConnectivePair;
using hyperlat::FiniteLattice;
using hyperlat::make_quadruple;
using hyperlat::UnitInterval;
using hyperlat::UnitRational;

namespace {

hyperlat::ElementId at(const FiniteLattice& l, const char* name) {
    return *l.find(name);
}

}  // namespace

TEST_CASE("arithmetic formulas on exact rationals") {
    UnitRational half = UnitRational::half();
    UnitRational quarter(1, 4);
    UnitRational threequarter(3, 4);

    SUBCASE("bounded difference pair") {
        CHECK(hyperlat::lukasiewicz_tnorm(half, threequarter) == quarter);
        CHECK(hyperlat::lukasiewicz_tnorm(quarter, half) == UnitRational::zero());
        CHECK(hyperlat::lukasiewicz_tconorm(half, threequarter) ==
              UnitRational::one());
        CHECK(hyperlat::lukasiewicz_tconorm(quarter, half) == threequarter);
    }
    SUBCASE("product pair") {
        CHECK(hyperlat::product_tnorm(half, half) == quarter);
        CHECK(hyperlat::product_tconorm(half, half) == threequarter);
        CHECK(hyperlat::product_tnorm(UnitRational(2, 3), UnitRational(3, 4)) ==
              half);
    }
    SUBCASE("drastic pair") {
        CHECK(hyperlat::drastic_tnorm(half, half) == UnitRational::zero());
        CHECK(hyperlat::drastic_tnorm(UnitRational::one(), half) == half);
        CHECK(hyperlat::drastic_tconorm(half, half) == UnitRational::one());
        CHECK(hyperlat::drastic_tconorm(UnitRational::zero(), half) == half);
    }
}

TEST_CASE("builtin pair names") {
    const auto& names = hyperlat::builtin_pair_names();
    REQUIRE(names.size() == 4);
    CHECK(names[0] == "meet-join");
    CHECK(names[1] == "lukasiewicz");
    CHECK(names[2] == "product");
    CHECK(names[3] == "drastic");
}

TEST_CASE("meet-join pair works on any carrier") {
    UnitInterval unit;
    auto p = builtin_pair<UnitInterval>("meet-join", unit);
    CHECK(p.tnorm(UnitRational(1, 3), UnitRational::half()) ==
          UnitRational(1, 3));
    CHECK(p.tconorm(UnitRational(1, 3), UnitRational::half()) ==
          UnitRational::half());

    auto b2 = FiniteLattice::powerset(2);
    auto q = builtin_pair<FiniteLattice>("meet-join", b2);
    CHECK(q.tnorm(at(b2, "{a}"), at(b2, "{b}")) == at(b2, "{}"));
    CHECK(q.tconorm(at(b2, "{a}"), at(b2, "{b}")) == at(b2, "{a,b}"));
}

TEST_CASE("grid tabulation accepts closed pairs") {
    auto c5 = FiniteLattice::chain_grid(5);

    auto luk = builtin_pair<FiniteLattice>("lukasiewicz", c5);
    CHECK(c5.format(luk.tnorm(at(c5, "3/4"), at(c5, "2/4"))) == "1/4");
    CHECK(c5.format(luk.tconorm(at(c5, "3/4"), at(c5, "2/4"))) == "1");
    CHECK(c5.format(luk.tnorm(at(c5, "1/4"), at(c5, "2/4"))) == "0");

    auto drastic = builtin_pair<FiniteLattice>("drastic", c5);
    CHECK(c5.format(drastic.tnorm(at(c5, "1/4"), at(c5, "3/4"))) == "0");
    CHECK(c5.format(drastic.tnorm(at(c5, "1"), at(c5, "3/4"))) == "3/4");
    CHECK(c5.format(drastic.tconorm(at(c5, "1/4"), at(c5, "3/4"))) == "1");
}

TEST_CASE("grid tabulation rejects pairs whose values fall off the grid") {
    auto c11 = FiniteLattice::chain_grid(11);
    try {
        builtin_pair<FiniteLattice>("product", c11);
        FAIL("expected UnsupportedCarrier");
    } catch (const hyperlat::UnsupportedCarrier& e) {
        std::string what = e.what();
        CHECK(what.find("T(1/10, 1/10) = 1/100 is off the grid") !=
              std::string::npos);
        REQUIRE(e.witness().size() == 2);
        CHECK(e.witness()[0].second == "1/10");
        CHECK(e.witness()[1].second == "1/10");
    }
}

TEST_CASE("arithmetic pairs need a rational grid") {
    auto b2 = FiniteLattice::powerset(2);
    CHECK_THROWS_AS(builtin_pair<FiniteLattice>("lukasiewicz", b2),
                    hyperlat::UnsupportedCarrier);
}

TEST_CASE("unknown pair names are rejected") {
    UnitInterval unit;
    CHECK_THROWS_AS(builtin_pair<UnitInterval>("zzz", unit),
                    hyperlat::UnsupportedCarrier);
    auto c5 = FiniteLattice::chain_grid(5);
    CHECK_THROWS_AS(builtin_pair<FiniteLattice>("zzz", c5),
                    hyperlat::UnsupportedCarrier);
}

TEST_CASE("document-defined connective tables are usable by name") {
    auto l = FiniteLattice::from_document_file(
        std::string(HYPERLAT_FIXTURE_DIR) + "/custom_pair.json");
    auto p = builtin_pair<FiniteLattice>("luk3", l);
    CHECK(p.name == "luk3");
    CHECK(p.tnorm(at(l, "m"), at(l, "m")) == at(l, "0"));
    CHECK(p.tnorm(at(l, "m"), at(l, "1")) == at(l, "m"));
    CHECK(p.tconorm(at(l, "m"), at(l, "m")) == at(l, "1"));
}

TEST_CASE("quadruple construction checks the pointwise order") {
    UnitInterval unit;

    SUBCASE("a valid quadruple records whether the inner pair is meet/join") {
        auto q = make_quadruple(unit, builtin_pair<UnitInterval>("lukasiewicz", unit),
                                builtin_pair<UnitInterval>("product", unit));
        CHECK(q.name() == "quad(lukasiewicz, product)");
        CHECK_FALSE(q.inner_tnorm_is_meet);
        CHECK_FALSE(q.inner_tconorm_is_join);

        auto p = make_quadruple(unit, builtin_pair<UnitInterval>("lukasiewicz", unit),
                                builtin_pair<UnitInterval>("meet-join", unit));
        CHECK(p.inner_tnorm_is_meet);
        CHECK(p.inner_tconorm_is_join);
    }

    SUBCASE("an outer t-norm above the inner one is rejected") {
        try {
            make_quadruple(unit, builtin_pair<UnitInterval>("product", unit),
                           builtin_pair<UnitInterval>("lukasiewicz", unit));
            FAIL("expected OrderViolation");
        } catch (const hyperlat::OrderViolation& e) {
            std::string what = e.what();
            CHECK(what.find("outer t-norm exceeds inner t-norm") !=
                  std::string::npos);
            REQUIRE(e.witness().size() == 2);
            CHECK(e.witness()[0].second == "1/2");
            CHECK(e.witness()[1].second == "1/2");
            // Replay: the outer value really is above the inner one.
            CHECK(hyperlat::product_tnorm(UnitRational::half(),
                                          UnitRational::half()) >
                  hyperlat::lukasiewicz_tnorm(UnitRational::half(),
                                              UnitRational::half()));
        }
    }

    SUBCASE("an inner t-conorm above the outer one is rejected") {
        // Hand-built pairs that keep the t-norm side legal but order the
        // t-conorms the wrong way round: max below the drastic t-conorm.
        ConnectivePair<UnitInterval> outer{
            "low-join", hyperlat::drastic_tnorm,
            [](UnitRational x, UnitRational y) { return hyperlat::unit_max(x, y); }};
        ConnectivePair<UnitInterval> inner{
            "high-join",
            [](UnitRational x, UnitRational y) { return hyperlat::unit_min(x, y); },
            hyperlat::drastic_tconorm};
        try {
            make_quadruple(unit, outer, inner);
            FAIL("expected OrderViolation");
        } catch (const hyperlat::OrderViolation& e) {
            CHECK(std::string(e.what()).find(
                      "inner t-conorm exceeds outer t-conorm") !=
                  std::string::npos);
        }
    }

    SUBCASE("finite carriers are validated exhaustively") {
        auto c5 = FiniteLattice::chain_grid(5);
        auto q = make_quadruple(c5, builtin_pair<FiniteLattice>("drastic", c5),
                                builtin_pair<FiniteLattice>("lukasiewicz", c5));
        CHECK_FALSE(q.inner_tnorm_is_meet);
        CHECK_THROWS_AS(
            make_quadruple(c5, builtin_pair<FiniteLattice>("lukasiewicz", c5),
                           builtin_pair<FiniteLattice>("drastic", c5)),
            hyperlat::OrderViolation);
    }
}

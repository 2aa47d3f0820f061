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

#include <stdexcept>

#include "hyperlat/rational.hpp"

using hyperlat::UnitRational;

TEST_CASE("default construction is zero") {
    UnitRational r;
    CHECK(r == UnitRational::zero());
    CHECK(r.num() == 0);
    CHECK(r.den() == 1);
    CHECK(r.str() == "0");
}

TEST_CASE("named constants") {
    CHECK(UnitRational::zero().str() == "0");
    CHECK(UnitRational::one().str() == "1");
    CHECK(UnitRational::half().str() == "1/2");
    CHECK(UnitRational::zero() < UnitRational::half());
    CHECK(UnitRational::half() < UnitRational::one());
}

TEST_CASE("construction normalizes to lowest terms") {
    UnitRational r(6, 10);
    CHECK(r.num() == 3);
    CHECK(r.den() == 5);
    CHECK(r.str() == "3/5");
    CHECK(r == UnitRational(3, 5));

    CHECK(UnitRational(4, 4) == UnitRational::one());
    CHECK(UnitRational(0, 7) == UnitRational::zero());
}

TEST_CASE("construction rejects values outside the unit interval") {
    CHECK_THROWS_AS(UnitRational(3, 2), std::domain_error);
    CHECK_THROWS_AS(UnitRational(-1, 2), std::domain_error);
    CHECK_THROWS_AS(UnitRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(UnitRational(2, -4), std::domain_error);
}

TEST_CASE("parse accepts p/q and integer forms inside [0, 1]") {
    auto half = UnitRational::parse("1/2");
    REQUIRE(half.has_value());
    CHECK(*half == UnitRational::half());

    auto zero = UnitRational::parse("0");
    REQUIRE(zero.has_value());
    CHECK(*zero == UnitRational::zero());

    auto one = UnitRational::parse("1");
    REQUIRE(one.has_value());
    CHECK(*one == UnitRational::one());

    auto unreduced = UnitRational::parse("6/10");
    REQUIRE(unreduced.has_value());
    CHECK(unreduced->str() == "3/5");
}

TEST_CASE("parse rejects malformed or out-of-range input") {
    CHECK_FALSE(UnitRational::parse("3/2").has_value());
    CHECK_FALSE(UnitRational::parse("-1/2").has_value());
    CHECK_FALSE(UnitRational::parse("1/0").has_value());
    CHECK_FALSE(UnitRational::parse("0.5").has_value());
    CHECK_FALSE(UnitRational::parse("").has_value());
    CHECK_FALSE(UnitRational::parse("a/b").has_value());
    CHECK_FALSE(UnitRational::parse("1/").has_value());
    CHECK_FALSE(UnitRational::parse("/2").has_value());
    CHECK_FALSE(UnitRational::parse(" 1/2").has_value());
    CHECK_FALSE(UnitRational::parse("1/2 ").has_value());
    CHECK_FALSE(UnitRational::parse("1 /2").has_value());
    CHECK_FALSE(UnitRational::parse("2").has_value());
}

TEST_CASE("comparisons follow rational order") {
    UnitRational a(1, 3);
    UnitRational b(1, 2);
    UnitRational c(2, 6);
    CHECK(a < b);
    CHECK(b > a);
    CHECK(a <= c);
    CHECK(a >= c);
    CHECK(a == c);
    CHECK(a != b);
}

TEST_CASE("unit_min and unit_max pick endpoints of the order") {
    UnitRational a(1, 4);
    UnitRational b(2, 3);
    CHECK(hyperlat::unit_min(a, b) == a);
    CHECK(hyperlat::unit_max(a, b) == b);
    CHECK(hyperlat::unit_min(b, b) == b);
    CHECK(hyperlat::unit_max(a, a) == a);
}

TEST_CASE("unit_complement is the involutive negation 1 - x") {
    UnitRational a(3, 10);
    auto na = hyperlat::unit_complement(a);
    CHECK(na == UnitRational(7, 10));
    CHECK(hyperlat::unit_complement(na) == a);
    CHECK(hyperlat::unit_complement(UnitRational::zero()) == UnitRational::one());
    CHECK(hyperlat::unit_complement(UnitRational::half()) == UnitRational::half());
}

TEST_CASE("str renders lowest terms with no denominator for integers") {
    CHECK(UnitRational(2, 4).str() == "1/2");
    CHECK(UnitRational(10, 10).str() == "1");
    CHECK(UnitRational(0, 3).str() == "0");
    CHECK(UnitRational(7, 21).str() == "1/3");
}

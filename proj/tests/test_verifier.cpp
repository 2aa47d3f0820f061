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

#include <json.hpp>
#include <string>

#include "hyperlat/suites.hpp"

using hyperlat::builtin_pair;
using hyperlat::Check;
using hyperlat::FiniteLattice;
using hyperlat::HyperConnective;
using hyperlat::Report;
using hyperlat::SampleParams;
using hyperlat::UnitInterval;
using hyperlat::UnitRational;
using hyperlat::Verdict;

namespace {

// A small sample budget keeps the dense-carrier tests fast; the canonical
// probes at the front of the stream already cover the interesting corners.
SampleParams quick() {
    SampleParams p;
    p.samples = 400;
    return p;
}

HyperConnective<UnitInterval> unit_pair(const UnitInterval& unit,
                                        const char* name) {
    return HyperConnective<UnitInterval>::from_pair(
        unit, builtin_pair<UnitInterval>(name, unit));
}

HyperConnective<FiniteLattice> finite_pair(const FiniteLattice& l,
                                           const char* name) {
    return HyperConnective<FiniteLattice>::from_pair(
        l, builtin_pair<FiniteLattice>(name, l));
}

}  // namespace

TEST_CASE("carrier descriptions") {
    CHECK(hyperlat::describe_carrier(FiniteLattice::powerset(3)) ==
          "bool:3 (8 elements)");
    CHECK(hyperlat::describe_carrier(FiniteLattice::chain_grid(11)) ==
          "chain:11 (11 elements)");
    CHECK(hyperlat::describe_carrier(UnitInterval{}) ==
          "unit (dense rational chain, sampled)");
}

TEST_CASE("the full regression is green on healthy inputs") {
    SUBCASE("powerset with meet-join") {
        auto b2 = FiniteLattice::powerset(2);
        auto h = finite_pair(b2, "meet-join");
        Report r = run_full_regression(b2, h);
        CHECK(r.suite == "full");
        CHECK(r.all_passed());
        CHECK(r.failures() == 0);
        REQUIRE(r.find("superlattice.a5") != nullptr);
        CHECK(r.find("superlattice.a5")->verdict == Verdict::Pass);
        REQUIRE(r.find("a6a8.coincides-with-carrier") != nullptr);
        CHECK(r.find("a6a8.coincides-with-carrier")->note == "coincides");
    }
    SUBCASE("grid chain with the bounded difference pair") {
        auto c5 = FiniteLattice::chain_grid(5);
        auto h = finite_pair(c5, "lukasiewicz");
        Report r = run_full_regression(c5, h);
        CHECK(r.all_passed());
        // Finite runs are exhaustive, so no sampling parameters are recorded.
        CHECK_FALSE(r.params.has_value());
    }
    SUBCASE("dense unit carrier with the bounded difference pair") {
        UnitInterval unit;
        auto h = unit_pair(unit, "lukasiewicz");
        Report r = run_full_regression(unit, h, quick());
        CHECK(r.all_passed());
        REQUIRE(r.params.has_value());
        CHECK(r.params->samples == 400);
        // A6-A8 need member enumeration, which the dense carrier cannot do.
        REQUIRE(r.find("a6a8.skipped") != nullptr);
        CHECK(r.find("a6a8.skipped")->verdict == Verdict::Skip);
    }
}

TEST_CASE("downstream suites are skipped when the lattice laws fail") {
    // Build the non-distributive five-element diamond without validation.
    auto m3 = FiniteLattice::from_parts(
        "m3", {"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
        {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"c", "c"}, {"1", "0"}});
    auto h = finite_pair(m3, "meet-join");
    Report r = run_full_regression(m3, h);
    CHECK_FALSE(r.all_passed());

    REQUIRE(r.find("lattice.distributive-meet") != nullptr);
    CHECK(r.find("lattice.distributive-meet")->verdict == Verdict::Fail);

    for (const char* anchor : {"hyper.skipped", "superlattice.skipped",
                               "a6a8.skipped", "prop41.skipped"}) {
        const Check* chk = r.find(anchor);
        REQUIRE_MESSAGE(chk != nullptr, anchor);
        CHECK(chk->verdict == Verdict::Skip);
        CHECK(chk->note == "carrier failed the lattice laws");
    }
}

TEST_CASE("broken operations fail with a replayable witness") {
    UnitInterval unit;
    // max is not a t-norm: its unit element is 0, not 1.
    hyperlat::BinaryOp<UnitInterval> max_op = [](UnitRational x, UnitRational y) {
        return hyperlat::unit_max(x, y);
    };
    Report r = check_tnorm(unit, max_op, quick());
    CHECK_FALSE(r.all_passed());
    const Check* chk = r.find("tnorm.unit");
    REQUIRE(chk != nullptr);
    REQUIRE(chk->verdict == Verdict::Fail);
    REQUIRE(chk->witness.has_value());
    REQUIRE(chk->witness->size() == 1);
    // The canonical probes run first, so the witness is deterministic.
    CHECK((*chk->witness)[0] == std::pair<std::string, std::string>{"x", "0"});
}

TEST_CASE("the generalized bounded-difference/product quadruple fails A1 and A5") {
    UnitInterval unit;
    auto q = make_quadruple(unit, builtin_pair<UnitInterval>("lukasiewicz", unit),
                            builtin_pair<UnitInterval>("product", unit));
    auto h = HyperConnective<UnitInterval>::from_quadruple(unit, q);
    Report r = check_superlattice(unit, h, quick());
    CHECK_FALSE(r.all_passed());

    const Check* a1 = r.find("superlattice.a1");
    REQUIRE(a1 != nullptr);
    REQUIRE(a1->verdict == Verdict::Fail);
    REQUIRE(a1->witness.has_value());
    CHECK((*a1->witness)[0] == std::pair<std::string, std::string>{"x", "1/2"});

    const Check* a5 = r.find("superlattice.a5");
    REQUIRE(a5 != nullptr);
    REQUIRE(a5->verdict == Verdict::Fail);
    REQUIRE(a5->witness.has_value());
    CHECK((*a5->witness)[0] == std::pair<std::string, std::string>{"x", "1/2"});
    CHECK((*a5->witness)[1] == std::pair<std::string, std::string>{"y", "1/2"});

    // A3 and A4 cannot be decided without member enumeration here.
    CHECK(r.find("superlattice.a3")->verdict == Verdict::Skip);
    CHECK(r.find("superlattice.a4")->verdict == Verdict::Skip);

    // A2 still holds: both pairs are commutative.
    CHECK(r.find("superlattice.a2")->verdict == Verdict::Pass);
}

TEST_CASE("order extraction is gated on A1 and A6-A8") {
    SUBCASE("extraction succeeds and coincides for a pair-mode chain") {
        auto c5 = FiniteLattice::chain_grid(5);
        auto h = finite_pair(c5, "lukasiewicz");
        auto res = check_a6_a8(c5, h);
        CHECK(res.report.all_passed());
        REQUIRE(res.induced.has_value());
        CHECK(res.induced->partial_order);
        CHECK(res.induced->coincides_with_carrier);
        CHECK(res.report.find("a6a8.coincides-with-carrier")->note ==
              "coincides");
    }
    SUBCASE("extraction is skipped when A1 fails") {
        auto c5 = FiniteLattice::chain_grid(5);
        auto q = make_quadruple(c5, builtin_pair<FiniteLattice>("drastic", c5),
                                builtin_pair<FiniteLattice>("lukasiewicz", c5));
        auto h = HyperConnective<FiniteLattice>::from_quadruple(c5, q);
        auto res = check_a6_a8(c5, h);
        CHECK_FALSE(res.report.all_passed());
        CHECK_FALSE(res.induced.has_value());

        const Check* a1 = res.report.find("a6a8.a1");
        REQUIRE(a1 != nullptr);
        REQUIRE(a1->verdict == Verdict::Fail);
        CHECK((*a1->witness)[0] ==
              std::pair<std::string, std::string>{"x", "1/4"});

        CHECK(res.report.find("a6a8.a6")->verdict == Verdict::Pass);
        CHECK(res.report.find("a6a8.a7")->verdict == Verdict::Pass);
        CHECK(res.report.find("a6a8.a8")->verdict == Verdict::Pass);

        const Check* induced = res.report.find("a6a8.induced-order");
        REQUIRE(induced != nullptr);
        CHECK(induced->verdict == Verdict::Skip);
        CHECK(induced->note.find("a6a8.a1") != std::string::npos);
        CHECK(res.report.find("a6a8.coincides-with-carrier")->verdict ==
              Verdict::Skip);
    }
}

TEST_CASE("the order characterization reports both sides consistently") {
    SUBCASE("pair mode: both sides hold") {
        auto c5 = FiniteLattice::chain_grid(5);
        auto h = finite_pair(c5, "lukasiewicz");
        Report r = check_order_characterization(c5, h);
        CHECK(r.all_passed());
        const Check* meet_side = r.find("prop41.meet-side");
        REQUIRE(meet_side != nullptr);
        CHECK(meet_side->note.find("inner T equals meet: yes") !=
              std::string::npos);
    }
    SUBCASE("generalized mode: both sides fail together, which is consistent") {
        UnitInterval unit;
        auto q = make_quadruple(unit,
                                builtin_pair<UnitInterval>("lukasiewicz", unit),
                                builtin_pair<UnitInterval>("product", unit));
        auto h = HyperConnective<UnitInterval>::from_quadruple(unit, q);
        Report r = check_order_characterization(unit, h, quick());
        CHECK(r.all_passed());
        const Check* meet_side = r.find("prop41.meet-side");
        REQUIRE(meet_side != nullptr);
        CHECK(meet_side->verdict == Verdict::Pass);
        CHECK(meet_side->note.find("inner T equals meet: no (at x=1/2, y=1/2)") !=
              std::string::npos);
        const Check* join_side = r.find("prop41.join-side");
        REQUIRE(join_side != nullptr);
        CHECK(join_side->note.find("inner S equals join: no") !=
              std::string::npos);
    }
}

TEST_CASE("distributivity identities carry the total-order note on chains") {
    auto c5 = FiniteLattice::chain_grid(5);
    auto h = finite_pair(c5, "lukasiewicz");
    Report r = check_cond32_suite(c5, h);
    CHECK(r.all_passed());
    CHECK(r.note.find("totally ordered") != std::string::npos);
}

TEST_CASE("closed forms are trustworthy whenever we may rely on them") {
    UnitInterval unit;
    auto h = unit_pair(unit, "lukasiewicz");
    CHECK(hyperlat::closed_forms_trustworthy(unit, h, quick()));

    auto c5 = FiniteLattice::chain_grid(5);
    CHECK(hyperlat::closed_forms_trustworthy(c5, finite_pair(c5, "drastic")));
}

TEST_CASE("duality and bounds hold for the arithmetic pairs on the unit") {
    UnitInterval unit;
    for (const char* name : {"meet-join", "lukasiewicz", "product", "drastic"}) {
        auto pair = builtin_pair<UnitInterval>(name, unit);
        CHECK_MESSAGE(check_duality(unit, pair, quick()).all_passed(), name);
        CHECK_MESSAGE(check_bounds(unit, pair, quick()).all_passed(), name);
    }
}

TEST_CASE("reports serialize to a stable JSON shape") {
    auto c5 = FiniteLattice::chain_grid(5);
    auto h = finite_pair(c5, "lukasiewicz");
    Report r = check_superlattice(c5, h);
    auto parsed = nlohmann::json::parse(r.to_json());
    CHECK(parsed.at("suite") == "superlattice");
    CHECK(parsed.at("carrier") == "chain:5 (5 elements)");
    CHECK(parsed.at("connectives") == "lukasiewicz");
    CHECK(parsed.at("passed") == true);
    CHECK(parsed.at("params").is_null());
    REQUIRE(parsed.at("checks").is_array());
    CHECK(parsed.at("checks").size() == r.checks.size());
    const auto& first = parsed.at("checks").at(0);
    CHECK(first.at("anchor") == "superlattice.a1");
    CHECK(first.at("verdict") == "pass");
    CHECK(first.at("witness").is_null());
}

TEST_CASE("report text output lists one line per check and a summary") {
    auto b2 = FiniteLattice::powerset(2);
    auto h = finite_pair(b2, "meet-join");
    Report r = check_superlattice(b2, h);
    std::string text = r.to_text();
    CHECK(text.find("superlattice.a1") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);

    UnitInterval unit;
    auto q = make_quadruple(unit, builtin_pair<UnitInterval>("lukasiewicz", unit),
                            builtin_pair<UnitInterval>("product", unit));
    auto hq = HyperConnective<UnitInterval>::from_quadruple(unit, q);
    Report bad = check_superlattice(unit, hq, quick());
    std::string bad_text = bad.to_text();
    CHECK(bad_text.find("FAIL") != std::string::npos);
    CHECK(bad_text.find("x=1/2") != std::string::npos);
    CHECK(bad_text.find("result: FAIL") != std::string::npos);
}

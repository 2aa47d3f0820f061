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

//  End-to-end tests that spawn the real command-line binary and assert on
//  its combined output and exit status.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr, interleaved

    bool contains(const std::string& needle) const {
        return output.find(needle) != std::string::npos;
    }
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERLAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(HYPERLAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("usage errors and help") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("check --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("check --no-such-flag").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check --suite nonsense").exit_code == 2);
    // --pair and --quad are mutually exclusive.
    CHECK(run_cli("check --pair lukasiewicz --quad lukasiewicz,product")
              .exit_code == 2);
}

TEST_CASE("green full regressions exit 0") {
    auto bool3 = run_cli("check --carrier bool:3");
    CHECK(bool3.exit_code == 0);
    CHECK(bool3.contains("result: PASS"));
    CHECK(bool3.contains("bool:3 (8 elements)"));

    auto chain = run_cli("check --carrier chain:11 --pair lukasiewicz");
    CHECK(chain.exit_code == 0);
    CHECK(chain.contains("result: PASS"));

    auto unit = run_cli("check --carrier unit --pair product --samples 2000");
    CHECK(unit.exit_code == 0);
    CHECK(unit.contains("result: PASS"));
}

TEST_CASE("failed checks exit 1 and print the witness") {
    auto r = run_cli(
        "check --carrier unit --quad lukasiewicz,product --suite superlattice "
        "--samples 500");
    CHECK(r.exit_code == 1);
    CHECK(r.contains("superlattice.a5"));
    CHECK(r.contains("FAIL"));
    CHECK(r.contains("x=1/2, y=1/2"));
    CHECK(r.contains("result: FAIL"));
}

TEST_CASE("rejected constructions exit 2 with a diagnostic") {
    SUBCASE("quadruple in the wrong pointwise order") {
        auto r = run_cli(
            "check --carrier unit --quad product,lukasiewicz --samples 500");
        CHECK(r.exit_code == 2);
        CHECK(r.contains("outer t-norm exceeds inner t-norm"));
        CHECK(r.contains("where x = 1/2, y = 1/2"));
    }
    SUBCASE("arithmetic pair that is not closed on the grid") {
        auto r = run_cli("check --carrier chain:11 --pair product");
        CHECK(r.exit_code == 2);
        CHECK(r.contains("not closed on carrier 'chain:11'"));
        CHECK(r.contains("T(1/10, 1/10) = 1/100 is off the grid"));
    }
    SUBCASE("non-distributive lattice document") {
        auto r = run_cli("check --carrier " + fixture("m3.json"));
        CHECK(r.exit_code == 2);
        CHECK(r.contains("not distributive"));
        CHECK(r.contains("where x = a, y = b, z = c"));
    }
    SUBCASE("negation that is not antitone") {
        auto r = run_cli("check --carrier " + fixture("bool2_identity_neg.json"));
        CHECK(r.exit_code == 2);
        CHECK(r.contains("antitone"));
        CHECK(r.contains("where x = 0, y = a"));
    }
    SUBCASE("a6a8 needs member enumeration") {
        auto r = run_cli("check --carrier unit --suite a6a8");
        CHECK(r.exit_code == 2);
        CHECK(r.contains("needs an enumerable carrier"));
    }
    SUBCASE("the element cap is enforced and adjustable") {
        CHECK(run_cli("check --carrier chain:65 --suite lattice").exit_code == 2);
        CHECK(run_cli("check --carrier chain:65 --suite lattice "
                      "--max-elements 70")
                  .exit_code == 0);
    }
    SUBCASE("malformed carrier spellings") {
        CHECK(run_cli("check --carrier chain:1").exit_code == 2);
        CHECK(run_cli("check --carrier chain:x").exit_code == 2);
        CHECK(run_cli("check --carrier bool:6").exit_code == 2);
        CHECK(run_cli("check --carrier bool:0").exit_code == 2);
    }
}

TEST_CASE("check emits machine-readable JSON on request") {
    auto r = run_cli(
        "check --carrier chain:5 --pair lukasiewicz --suite superlattice "
        "--format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("suite") == "superlattice");
    CHECK(j.at("connectives") == "lukasiewicz");
    CHECK(j.at("passed") == true);
    REQUIRE(j.at("checks").is_array());
    for (const auto& chk : j.at("checks")) {
        CHECK(chk.at("verdict") == "pass");
        CHECK(chk.at("witness").is_null());
    }
}

TEST_CASE("eval prints one rendered value") {
    auto r = run_cli("eval --pair lukasiewicz \"hmeet(7/10, [3/10, 6/10])\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[0, 3/5]\n");

    auto grid = run_cli("eval --carrier chain:5 \"neg([0, 1/4])\"");
    CHECK(grid.exit_code == 0);
    CHECK(grid.output == "[3/4, 1]\n");

    auto quad = run_cli(
        "eval --quad lukasiewicz,product --samples 500 \"hmeet(1/2, 1/2)\"");
    CHECK(quad.exit_code == 0);
    CHECK(quad.output == "[0, 1/4]\n");

    auto sets = run_cli("eval --carrier bool:2 \"hjoin({a}, {b})\"");
    CHECK(sets.exit_code == 0);
    CHECK(sets.output == "[{a,b}, {a,b}]\n");
}

TEST_CASE("eval reports parse and element errors with exit 2") {
    auto parse = run_cli("eval \"hmeet(1/2\"");
    CHECK(parse.exit_code == 2);
    CHECK(parse.contains("(at byte "));

    auto foreign = run_cli("eval --carrier chain:5 \"1/3\"");
    CHECK(foreign.exit_code == 2);
    CHECK(foreign.contains("not on the grid"));

    auto mode = run_cli("eval \"hmeet([0, 1/2], [1/2, 1])\"");
    CHECK(mode.exit_code == 2);
    CHECK(mode.contains("at most one operand may be an interval"));
}

TEST_CASE("table prints the full hyperoperation grid") {
    auto text = run_cli("table --carrier chain:3 --pair lukasiewicz");
    CHECK(text.exit_code == 0);
    CHECK(text.contains("hmeet table, carrier chain:3, connectives lukasiewicz"));
    CHECK(text.contains("[0, 1/2]"));

    auto json = run_cli(
        "table --carrier chain:3 --pair lukasiewicz --format json");
    REQUIRE(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.output);
    CHECK(j.at("carrier") == "chain:3");
    CHECK(j.at("op") == "hmeet");
    REQUIRE(j.at("rows").size() == 3);
    // hmeet(1/2, 1/2) = [T(1/2,1/2), min(1/2,1/2)] = [0, 1/2].
    CHECK(j.at("rows").at(1).at(1).at("lo") == "0");
    CHECK(j.at("rows").at(1).at(1).at("hi") == "1/2");

    auto join = run_cli("table --carrier bool:2 --op hjoin");
    CHECK(join.exit_code == 0);
    CHECK(join.contains("hjoin table"));
    CHECK(join.contains("[{a,b}, {a,b}]"));

    auto dense = run_cli("table --carrier unit");
    CHECK(dense.exit_code == 2);
    CHECK(dense.contains("no finite table"));
}

TEST_CASE("suite selection is honored") {
    auto a6a8 = run_cli(
        "check --carrier chain:5 --quad drastic,lukasiewicz --suite a6a8");
    CHECK(a6a8.exit_code == 1);
    CHECK(a6a8.contains("a6a8.a1"));
    CHECK(a6a8.contains("x=1/4"));
    CHECK(a6a8.contains("not extracted"));

    auto prop41 = run_cli(
        "check --carrier unit --quad lukasiewicz,product --suite prop41 "
        "--samples 500");
    CHECK(prop41.exit_code == 0);
    CHECK(prop41.contains("inner T equals meet: no (at x=1/2, y=1/2)"));

    auto lattice = run_cli("check --carrier " + fixture("two_chain.json") +
                           " --suite lattice");
    CHECK(lattice.exit_code == 0);
    CHECK(lattice.contains("result: PASS"));

    auto custom = run_cli("check --carrier " + fixture("custom_pair.json") +
                          " --pair luk3");
    CHECK(custom.exit_code == 0);
    CHECK(custom.contains("result: PASS"));
}

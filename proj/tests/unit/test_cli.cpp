// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/checkers.hpp"
#include "qalg/cli.hpp"

#include "../support/doctest_qalg.hpp"
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qalg;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run
run(std::vector<std::string> const& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int const code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string
tempFile(std::string const& name, std::string const& content)
{
    auto const path = std::filesystem::temp_directory_path() /
                      ("qalg_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

bool
has(std::string const& haystack, std::string const& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("system file parsing")
{
    SystemSpec const s =
        parseSystemSpec(R"({"n": 3, "quorums": [[1,2],[2,3]]})");
    CHECK(s.n == 3);
    REQUIRE(s.quorums);
    CHECK(s.quorums->toString() == "{1,2} {2,3}");
    CHECK_FALSE(s.failProne);

    CHECK_THROWS_AS(parseSystemSpec("{"), InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"quorums": []})"), InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"n": 3, "quorums": [[0]]})"),
                    InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"n": 3, "quorums": [[4]]})"),
                    InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"n": 3, "quorums": [[1],[1]]})"),
                    InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"n": 3, "quorums": [[1,1]]})"),
                    InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"n": 3, "quorum": [[1]]})"),
                    InputError);
    CHECK_THROWS_AS(parseSystemSpec(R"({"n": 0})"), InputError);

    SystemSpec const back = parseSystemSpec(writeSystemSpec(s));
    CHECK(back.quorums == s.quorums);
}

TEST_CASE("check command")
{
    std::string const file = tempFile(
        "two_of_three.json",
        R"({"n": 3, "quorums": [[1,2],[1,3],[2,3]], "fail_prone": [[1],[2],[3]]})");

    Run const c = run({"check", "consistency", "--input", file});
    CHECK(c.code == exit_code::kHolds);
    CHECK(has(c.out, "algebraic: holds (9 = 9)\n"));
    CHECK(has(c.out, "oracle: holds\n"));
    CHECK(has(c.out, "verdict: holds\n"));

    Run const q3 = run({"check", "q3", "--input", file});
    CHECK(q3.code == exit_code::kFails);
    CHECK(has(q3.out, "witness: {1} {2} {3}"));

    Run const oracleOnly =
        run({"check", "dissemination", "--input", file, "--method", "oracle"});
    CHECK(oracleOnly.code == exit_code::kFails);
    CHECK_FALSE(has(oracleOnly.out, "algebraic"));

    Run const algOnly =
        run({"check", "availability", "--input", file, "--method",
             "algebraic"});
    CHECK(algOnly.code == exit_code::kHolds);
    CHECK_FALSE(has(algOnly.out, "oracle"));

    // Deterministic without --timing.
    CHECK(run({"check", "masking", "--input", file}).out ==
          run({"check", "masking", "--input", file}).out);

    Run const json =
        run({"check", "q3", "--input", file, "--format", "json-like"});
    auto const j = nlohmann::ordered_json::parse(json.out);
    CHECK(j["verdict"] == "fails");
    CHECK(j["algebraic"][0]["expected"] == 27);
    CHECK(j["oracle"]["witness"] ==
          nlohmann::ordered_json::parse("[[1],[2],[3]]"));
    std::vector<std::string> keys;
    for (auto const& [k, v] : j.items())
    {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"property", "n", "quorums",
                                           "fail_prone", "algebraic",
                                           "oracle", "verdict"});
}

TEST_CASE("check command errors")
{
    std::string const bad =
        tempFile("bad.json", R"({"n": 3, "quorums": [[0, 1]]})");
    Run const r = run({"check", "consistency", "--input", bad});
    CHECK(r.code == exit_code::kUsage);
    CHECK(has(r.err, "outside 1..3"));

    std::string const noF =
        tempFile("nof.json", R"({"n": 3, "quorums": [[1, 2]]})");
    CHECK(run({"check", "availability", "--input", noF}).code ==
          exit_code::kUsage);
    CHECK(run({"check", "consistency", "--input", "/nonexistent/x.json"})
              .code == exit_code::kUsage);
    CHECK(run({"check", "bogus", "--input", noF}).code == exit_code::kUsage);
    CHECK(run({"check", "consistency"}).code == exit_code::kUsage);
    CHECK(run({}).code == exit_code::kUsage);

    std::string const big = tempFile(
        "big.json",
        R"({"n": 7, "quorums": [[1,2,3,4,5,6]], "fail_prone": [[1]]})");
    Run const budget = run({"check", "masking", "--input", big});
    CHECK(budget.code == exit_code::kUsage);
    CHECK(has(budget.err, "QA_VAR_BUDGET"));
    CHECK(run({"check", "masking", "--input", big, "--method", "oracle"})
              .code == exit_code::kHolds);
}

TEST_CASE("groebner command")
{
    Run const unit = run({"groebner", "--polys", "x1, x1+1"});
    CHECK(unit.code == 0);
    CHECK(has(unit.out, "basis:\n  1\nsm: 0\n"));

    Run const mono = run({"groebner", "--polys", "x1*x2"});
    CHECK(has(mono.out, "basis:\n  x1*x2\nsm: 3\n"));

    Run const empty = run({"groebner", "--polys", "", "--n", "3"});
    CHECK(has(empty.out, "sm: 8\n"));

    std::string const file = tempFile("polys.txt", "x1*y1 + y2\ny1 + x2\n");
    Run const two = run({"groebner", "--polys", file, "--order", "x,y"});
    CHECK(has(two.out, "sm: 4\nsm[y]: 3\n"));

    CHECK(run({"groebner", "--polys", "x1 +"}).code == exit_code::kUsage);
    CHECK(run({"groebner", "--polys", "x3", "--n", "2"}).code ==
          exit_code::kUsage);
    CHECK(run({"groebner", "--polys", "y1", "--order", "x"}).code ==
          exit_code::kUsage);
}

TEST_CASE("gen-threshold command round trip")
{
    for (int n = 3; n <= 6; ++n)
    {
        for (int f = 0; f <= 1; ++f)
        {
            std::string const path =
                (std::filesystem::temp_directory_path() /
                 ("qalg_gen_" + std::to_string(n) + std::to_string(f) +
                  ".json"))
                    .string();
            Run const g =
                run({"gen-threshold", "--n", std::to_string(n), "--f",
                     std::to_string(f), "--kind", "dissemination", "--out",
                     path});
            CHECK(g.code == 0);
            CHECK(has(g.err, "warning") == (3 * f >= n));
            bool const expected = 3 * f < n;
            int const want = expected ? 0 : 1;
            int const cons =
                run({"check", "dissemination", "--input", path}).code;
            int const avail =
                run({"check", "availability", "--input", path}).code;
            int const q3 = run({"check", "q3", "--input", path}).code;
            CHECK(q3 == want);
            CHECK((cons == 0 && avail == 0) == expected);
        }
    }
    Run const none = run({"gen-threshold", "--n", "4", "--f", "2", "--kind",
                          "masking", "--out", "-"});
    CHECK(none.code == exit_code::kFails);
    Run const lit = run({"gen-threshold", "--n", "3", "--f", "1", "--kind",
                         "classical", "--out", "-", "--literal"});
    CHECK(lit.code == 0);
    CHECK(has(lit.out, R"("fail_prone":[[],[1],[2],[3]])"));
    CHECK(run({"gen-threshold", "--n", "3", "--f", "3", "--kind",
               "classical", "--out", "-"})
              .code == exit_code::kUsage);
}

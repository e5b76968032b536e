// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/oracle.hpp"
#include "qalg/set_encoding.hpp"

#include "../support/test_support.hpp"

#include "../support/doctest_qalg.hpp"

#include <stdexcept>

using namespace qalg;
using namespace qalg::testing;

namespace
{

SetSystem
sys(int n, std::vector<std::vector<int>> const& lists)
{
    return SetSystem::fromIndexLists(n, lists);
}

} // namespace

TEST_CASE("set systems")
{
    SetSystem s = sys(3, {{1, 2}, {2, 3}});
    CHECK(s.toString() == "{1,2} {2,3}");
    CHECK(s.isAntichain());
    CHECK_THROWS_AS(s.add(phi({1, 2}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(s.add(phi({1}, 4)), std::invalid_argument);
    s.add(phi({2}, 3));
    CHECK_FALSE(s.isAntichain());
    CHECK(subsetsOfSize(4, 2).size() == 6);
    CHECK(subsetsOfSize(4, 0) == std::vector<ProcessSubset>{phi({}, 4)});
    CHECK_THROWS_AS(ProcessSubset(3, 0b1000), std::invalid_argument);
}

TEST_CASE("classical consistency oracle")
{
    CHECK(oracle::consistencyClassical(kSubsets(3, 2)).holds);
    auto const r = oracle::consistencyClassical(sys(2, {{1}, {2}}));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(*r.witness == std::vector<ProcessSubset>{phi({1}, 2), phi({2}, 2)});
    CHECK(oracle::consistencyClassical(sys(3, {{1, 2}})).holds);
    CHECK_THROWS_AS(oracle::consistencyClassical(SetSystem(3)),
                    std::invalid_argument);
}

TEST_CASE("availability oracle")
{
    CHECK(oracle::availability(kSubsets(3, 2), singletons(3)).holds);
    auto const r = oracle::availability(kSubsets(3, 2), sys(3, {{1, 2}}));
    CHECK_FALSE(r.holds);
    CHECK(*r.witness == std::vector<ProcessSubset>{phi({1, 2}, 3)});
    CHECK(oracle::availability(kSubsets(3, 2), sys(3, {{}})).holds);
}

TEST_CASE("dissemination consistency oracle")
{
    CHECK(oracle::consistencyDissemination(kSubsets(4, 3), singletons(4))
              .holds);
    auto const r =
        oracle::consistencyDissemination(kSubsets(3, 2), singletons(3));
    CHECK_FALSE(r.holds);
    CHECK(oracle::witnessViolates(Property::DisseminationConsistency,
                                  *r.witness));
    std::vector<ProcessSubset> const listed{phi({1, 2}, 3), phi({2, 3}, 3),
                                            phi({2}, 3)};
    CHECK(oracle::witnessViolates(Property::DisseminationConsistency, listed));
    CHECK(oracle::consistencyDissemination(kSubsets(3, 2), sys(3, {{}}))
              .holds);
}

TEST_CASE("masking consistency oracle")
{
    CHECK(oracle::consistencyMasking(kSubsets(5, 4), singletons(5)).holds);
    auto const r = oracle::consistencyMasking(kSubsets(4, 3), singletons(4));
    CHECK_FALSE(r.holds);
    CHECK(oracle::witnessViolates(Property::MaskingConsistency, *r.witness));
    std::vector<ProcessSubset> const listed{phi({1, 2, 3}, 4),
                                            phi({2, 3, 4}, 4), phi({2}, 4),
                                            phi({3}, 4)};
    CHECK(oracle::witnessViolates(Property::MaskingConsistency, listed));
    CHECK(oracle::consistencyMasking(kSubsets(3, 2), sys(3, {{}})).holds);
}

TEST_CASE("Q3 and Q4 oracles")
{
    CHECK(oracle::q3(singletons(4)).holds);
    auto const r = oracle::q3(singletons(3));
    CHECK_FALSE(r.holds);
    CHECK(*r.witness ==
          std::vector<ProcessSubset>{phi({1}, 3), phi({2}, 3), phi({3}, 3)});
    CHECK_FALSE(oracle::q4(singletons(4)).holds);
    CHECK(oracle::q4(singletons(5)).holds);
}

TEST_CASE("downward closure and antichains")
{
    CHECK(oracle::fstarEnumerate(sys(3, {{1}})).size() == 2);
    CHECK(oracle::fstarEnumerate(singletons(3)).size() == 4);
    CHECK(oracle::fstarEnumerate(sys(3, {{1, 2}})).size() == 4);
    CHECK(oracle::fstarEnumerate(sys(3, {{1, 2}, {2, 3}})).toString() ==
          "{} {1} {2} {1,2} {3} {2,3}");
    CHECK(oracle::antichainCheck(singletons(4)));
    CHECK_FALSE(oracle::antichainCheck(sys(3, {{1}, {1, 2}})));
    SetSystem atMostOne(3);
    atMostOne.add(ProcessSubset::empty(3));
    SetSystem const ones = singletons(3);
    for (auto const& s : ones.members())
    {
        atMostOne.add(s);
    }
    CHECK_FALSE(oracle::antichainCheck(atMostOne));
}

TEST_CASE("property: witnesses re-check and holds means no witness")
{
    Rng rng(31337);
    for (int trial = 0; trial < 300; ++trial)
    {
        int const n = uniform(rng, 1, 5);
        SetSystem const q = randomSystem(n, rng, 4);
        SetSystem const f = randomSystem(n, rng, 3);
        std::vector<OracleReport> const reports{
            oracle::consistencyClassical(q),
            oracle::availability(q, f),
            oracle::consistencyDissemination(q, f),
            oracle::consistencyMasking(q, f),
            oracle::q3(f),
            oracle::q4(f)};
        for (auto const& r : reports)
        {
            CHECK(r.holds == !r.witness.has_value());
            if (r.witness)
            {
                CHECK(oracle::witnessViolates(r.property, *r.witness, &q));
            }
        }
        // Q4 implies Q3; dissemination consistency implies classical
        // consistency, since the empty set lies below every fail-prone set.
        if (reports[5].holds)
        {
            CHECK(reports[4].holds);
        }
        if (reports[2].holds)
        {
            CHECK(reports[0].holds);
        }
    }
}

// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Acceptance suite. One line per criterion:
//   PASS|FAIL  <id>  <name>  <detail>  [<seconds> s, limit <seconds> s]
// Exit status is 0 iff every criterion passes. All criteria have zero
// tolerance on counts; the only tolerances are the wall-clock limits below.

#include "qalg/checkers.hpp"
#include "qalg/groebner.hpp"
#include "qalg/oracle.hpp"
#include "qalg/set_encoding.hpp"

#include "../support/appendix_render.hpp"
#include "../support/test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qalg;
using namespace qalg::testing;

namespace
{

constexpr double kLimitWorkedExamples = 1.0;
constexpr double kLimitCounting = 30.0;
constexpr double kLimitElimination = 30.0;
constexpr double kLimitOracle = 300.0;
constexpr double kLimitThreshold = 120.0;
constexpr double kLimitSoundness = 60.0;
constexpr double kLimitAppendix = 60.0;

constexpr int kRandomIdeals = 150;
constexpr int kRandomOracleInstances = 200;
constexpr int kRandomAppendixTriples = 200;

struct Outcome
{
    bool ok = true;
    std::string detail;
};

// Counts mismatches and remembers the first.
struct Tally
{
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void
    expect(bool cond, std::string const& what)
    {
        ++checks;
        if (!cond)
        {
            if (failures++ == 0)
            {
                first = what;
            }
        }
    }

    Outcome
    outcome(std::string const& summary) const
    {
        if (failures == 0)
        {
            return {true, summary + ", " + std::to_string(checks) +
                              " checks, 0 mismatches"};
        }
        return {false, std::to_string(failures) + "/" +
                           std::to_string(checks) +
                           " mismatches; first: " + first};
    }
};

std::string
names(std::vector<Polynomial> const& G)
{
    std::string out;
    for (auto const& g : G)
    {
        out += out.empty() ? "" : ", ";
        out += toString(g);
    }
    return "{" + out + "}";
}

// Random ideals with at most four variables and four generators, split over
// one block (n <= 4) or two blocks (n <= 2).
IdealBasis
randomIdeal(Rng& rng, bool twoBlocks)
{
    PolyRing const ring =
        twoBlocks ? PolyRing(uniform(rng, 1, 2), BlockLexOrder{Block::X,
                                                               Block::Y})
                  : PolyRing(uniform(rng, 1, 4), BlockLexOrder{Block::X});
    return {ring, randomGenerators(ring, rng, 4, 6)};
}

Outcome
workedExamples()
{
    std::string const golden =
        readGolden(QALG_GOLDEN_DIR "/appendix_example.txt");
    std::string const rendered = renderAppendixExample();
    Tally t;
    t.expect(!golden.empty(), "golden file missing or empty");
    t.expect(rendered == golden, "rendered text differs from golden:\n" +
                                     rendered);
    return t.outcome("golden file byte-identical");
}

Outcome
countingIdentity()
{
    Rng rng(1001);
    Tally t;
    for (int k = 0; k < kRandomIdeals; ++k)
    {
        IdealBasis const ideal = randomIdeal(rng, false);
        GroebnerCertificate const c = buchberger(ideal);
        std::size_t const v =
            referenceVariety(ideal.generators, ideal.ring.allVariablesMask())
                .size();
        t.expect(c.smCount == v, "ideal " + names(ideal.generators) +
                                     ": |SM| " + std::to_string(c.smCount) +
                                     " vs |V| " + std::to_string(v));
    }
    return t.outcome(std::to_string(kRandomIdeals) + " random ideals");
}

Outcome
eliminationExtension()
{
    Rng rng(2002);
    Tally t;
    for (int k = 0; k < kRandomIdeals; ++k)
    {
        IdealBasis const ideal = randomIdeal(rng, true);
        PolyRing const& ring = ideal.ring;
        GroebnerCertificate const c = buchberger(ideal);
        Block const keep[] = {Block::Y};
        auto const sub = eliminationSubbasis(c, keep);
        std::uint64_t const y = ring.blockMask(Block::Y);
        auto const full = referenceVariety(ideal.generators,
                                           ring.allVariablesMask());
        std::set<std::uint64_t> projected;
        for (auto pt : full)
        {
            projected.insert(pt & y);
        }
        auto const elim = referenceVariety(sub, y);
        t.expect(elim == projected,
                 "ideal " + names(ideal.generators) +
                     ": elimination variety differs from projection");
        for (auto pt : elim)
        {
            bool extends = false;
            for (auto q : full)
            {
                extends = extends || (q & y) == pt;
            }
            t.expect(extends, "ideal " + names(ideal.generators) +
                                  ": a partial point does not extend");
        }
    }
    return t.outcome(std::to_string(kRandomIdeals) + " two-block ideals");
}

void
compareAll(Tally& t, SetSystem const& q, SetSystem const& f, bool masking)
{
    std::string const tag = "Q=" + q.toString() + " F=" + f.toString();
    bool const oc = oracle::consistencyClassical(q).holds;
    t.expect(checkConsistencyClassical(q, CheckMethod::SmCount).holds == oc,
             "classical sm-count " + tag);
    t.expect(checkConsistencyClassical(q, CheckMethod::TrivialIdeal).holds ==
                 oc,
             "classical trivial-ideal " + tag);
    t.expect(checkAvailability(q, f).holds ==
                 oracle::availability(q, f).holds,
             "availability " + tag);
    t.expect(checkConsistencyDissemination(q, f).holds ==
                 oracle::consistencyDissemination(q, f).holds,
             "dissemination " + tag);
    t.expect(checkQ3(f).holds == oracle::q3(f).holds, "q3 " + tag);
    if (masking)
    {
        t.expect(checkConsistencyMasking(q, f).holds ==
                     oracle::consistencyMasking(q, f).holds,
                 "masking " + tag);
        t.expect(checkQ4(f).holds == oracle::q4(f).holds, "q4 " + tag);
    }
}

Outcome
oracleEquivalence()
{
    Tally t;
    // Exhaustive at n = 3: every antichain quorum system with at most four
    // quorums against every antichain fail-prone system with at most four
    // members.
    auto const family = allAntichains(3, 4);
    for (auto const& q : family)
    {
        for (auto const& f : family)
        {
            compareAll(t, q, f, true);
        }
    }
    std::size_t const exhaustive = family.size() * family.size();
    Rng rng(3003);
    for (int k = 0; k < kRandomOracleInstances; ++k)
    {
        SetSystem const q = randomAntichain(4, rng, 5);
        SetSystem const f = randomAntichain(4, rng, 4);
        compareAll(t, q, f, true);
    }
    return t.outcome(std::to_string(exhaustive) + " exhaustive n=3 pairs (" +
                     std::to_string(family.size()) + " antichains) + " +
                     std::to_string(kRandomOracleInstances) +
                     " random n=4, all six properties");
}

Outcome
thresholdSweep()
{
    Tally t;
    for (int n = 3; n <= 6; ++n)
    {
        for (int f = 0; f <= 1; ++f)
        {
            std::string const tag =
                "n=" + std::to_string(n) + " f=" + std::to_string(f);
            ThresholdSystem const s =
                thresholdSystem(n, f, SystemKind::Dissemination);
            bool const q3 = checkQ3(s.failProne).holds;
            bool const both =
                checkConsistencyDissemination(s.quorums, s.failProne).holds &&
                checkAvailability(s.quorums, s.failProne).holds;
            t.expect(q3 == (3 * f < n), "Q3 verdict " + tag);
            t.expect(both == (3 * f < n), "consistency+availability " + tag);
        }
    }
    return t.outcome("n in 3..6, f in 0..1");
}

Outcome
buchbergerSoundness()
{
    Tally t;
    Rng rng(4004);
    for (int k = 0; k < kRandomIdeals; ++k)
    {
        IdealBasis const ideal = randomIdeal(rng, k % 2 == 1);
        GroebnerCertificate const on = buchberger(ideal);
        GroebnerCertificate const off =
            buchberger(ideal, BuchbergerOptions{false, false});
        t.expect(isGroebnerBasis(on.withFieldPolynomials()),
                 "s-polynomial not reducing to 0 for " +
                     names(ideal.generators));
        t.expect(on.basis == off.basis,
                 "criteria on/off differ for " + names(ideal.generators) +
                     ": " + names(on.basis) + " vs " + names(off.basis));
    }
    return t.outcome(std::to_string(kRandomIdeals) + " random ideals");
}

Outcome
appendixAlgebra()
{
    Tally t;
    Rng rng(5005);
    for (int k = 0; k < kRandomAppendixTriples; ++k)
    {
        int const n = uniform(rng, 1, 6);
        PolyRing const ring(n, BlockLexOrder{Block::Y});
        ProcessSubset const qs = randomSubset(n, rng);
        ProcessSubset const rs = randomSubset(n, rng);
        ProcessSubset const fs = randomSubset(n, rng);
        CharPoly const q = charPoly(qs, Block::Y);
        CharPoly const r = charPoly(rs, Block::Y);
        CharPoly const f = charPoly(fs, Block::Y);
        std::string const tag = "Q=" + qs.setString() + " R=" +
                                rs.setString() + " F=" + fs.setString();

        t.expect(expand(ring, charIntersection(q, r).factored(), Block::Y) ==
                     expandCharPoly(ring, intersect(qs, rs), Block::Y),
                 "intersection " + tag);
        t.expect(expand(ring, charUnion(q, r).factored(), Block::Y) ==
                     expandCharPoly(ring, unite(qs, rs), Block::Y),
                 "union " + tag);
        t.expect(expand(ring, charDifference(q, r, f).factored(), Block::Y) ==
                     expandCharPoly(ring, difference(intersect(qs, rs), fs),
                                    Block::Y),
                 "difference " + tag);

        Polynomial const lhs =
            polyMul(expand(ring, charComplement(q)), expand(ring, q), false);
        Polynomial const rhs =
            polyMul(expandCharPoly(ring, ProcessSubset::empty(n), Block::Y),
                    expandCharPoly(ring, ProcessSubset::full(n), Block::Y),
                    false);
        t.expect(lhs == rhs, "complement quotient identity " + tag);
        t.expect(booleanReduce(lhs) == booleanReduce(rhs),
                 "complement identity after reduction " + tag);

        CharPoly const zero = charPoly(ProcessSubset::empty(n), Block::Y);
        CharPoly const unit = charPoly(ProcessSubset::full(n), Block::Y);
        t.expect(charRingAdd(q, r) == charRingAdd(r, q), "star commutes " + tag);
        t.expect(charRingMul(q, r) == charRingMul(r, q),
                 "diamond commutes " + tag);
        t.expect(charRingAdd(charRingAdd(q, r), f) ==
                     charRingAdd(q, charRingAdd(r, f)),
                 "star associative " + tag);
        t.expect(charRingMul(charRingMul(q, r), f) ==
                     charRingMul(q, charRingMul(r, f)),
                 "diamond associative " + tag);
        t.expect(charRingMul(q, charRingAdd(r, f)) ==
                     charRingAdd(charRingMul(q, r), charRingMul(q, f)),
                 "distributive " + tag);
        t.expect(charRingAdd(q, zero) == q, "star identity " + tag);
        t.expect(charRingAdd(q, q) == zero, "star inverse " + tag);
        t.expect(charRingMul(q, unit) == q, "diamond identity " + tag);
        t.expect(charRingMul(q, q) == q, "diamond idempotent " + tag);
    }
    return t.outcome(std::to_string(kRandomAppendixTriples) +
                     " random triples, n <= 6");
}

struct Criterion
{
    char const* id;
    char const* name;
    double limitSeconds;
    std::function<Outcome()> run;
};

} // namespace

int
main()
{
    std::vector<Criterion> const criteria{
        {"AC1", "worked examples", kLimitWorkedExamples, workedExamples},
        {"AC2", "counting identity |SM| = |V|", kLimitCounting,
         countingIdentity},
        {"AC3", "elimination and extension", kLimitElimination,
         eliminationExtension},
        {"AC4", "oracle equivalence", kLimitOracle, oracleEquivalence},
        {"AC5", "threshold sweep vs Q3", kLimitThreshold, thresholdSweep},
        {"AC6", "Buchberger soundness and criteria neutrality",
         kLimitSoundness, buchbergerSoundness},
        {"AC7", "characteristic polynomial algebra", kLimitAppendix,
         appendixAlgebra},
    };
    int failed = 0;
    for (auto const& c : criteria)
    {
        auto const start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (std::exception const& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        double const secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        bool const inTime = secs < c.limitSeconds;
        bool const pass = o.ok && inTime;
        if (!inTime)
        {
            o.detail += "; over the time limit";
        }
        std::printf("%s  %s  %s: %s  [%.3f s, limit %.0f s]\n",
                    pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs, c.limitSeconds);
        std::fflush(stdout);
        failed += pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

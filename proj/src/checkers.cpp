// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/checkers.hpp"

#include "qalg/set_encoding.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qalg
{

std::string
toString(CheckMethod m)
{
    return m == CheckMethod::SmCount ? "sm-count" : "trivial-ideal";
}

CheckOptions
CheckOptions::fromEnvironment()
{
    CheckOptions opts;
    if (char const* env = std::getenv("QA_VAR_BUDGET"))
    {
        char* end = nullptr;
        long const v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > kMaxVariables)
        {
            throw std::invalid_argument(
                std::string("QA_VAR_BUDGET must be an integer in 1..64, got '") +
                env + "'");
        }
        opts.variableBudget = static_cast<int>(v);
    }
    return opts;
}

namespace
{

void
requireSystem(SetSystem const& s, char const* what)
{
    if (s.empty())
    {
        throw std::invalid_argument(std::string(what) + " must be nonempty");
    }
}

void
requireSameN(SetSystem const& a, SetSystem const& b)
{
    if (a.n() != b.n())
    {
        throw std::invalid_argument("quorum and fail-prone systems disagree "
                                    "on n");
    }
}

PolyRing
makeRing(int n, BlockLexOrder order, int budget)
{
    int const vars = n * static_cast<int>(order.size());
    if (vars > budget)
    {
        throw BudgetExceeded("check needs " + std::to_string(vars) +
                             " variables (" + std::to_string(order.size()) +
                             " blocks x n=" + std::to_string(n) +
                             "), budget is " + std::to_string(budget));
    }
    return PolyRing(n, order);
}

SetSystem
complements(SetSystem const& s)
{
    SetSystem out(s.n());
    for (auto const& m : s.members())
    {
        out.add(m.complement());
    }
    return out;
}

std::uint64_t
power(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i)
    {
        r *= base;
    }
    return r;
}

Verdict
countVerdict(Property p, IdealBasis const& ideal, std::uint64_t expected,
             CheckOptions const& options)
{
    Verdict v;
    v.property = p;
    v.method = CheckMethod::SmCount;
    v.expectedCount = expected;
    v.certificate = buchberger(ideal, options.buchberger);
    v.observedCount = v.certificate.smCount;
    v.holds = *v.observedCount == expected;
    return v;
}

IdealBasis
classicalIdealIn(PolyRing const& ring, SetSystem const& quorums,
                 CheckMethod method)
{
    Polynomial sigma = sigmaPoly(ring, Block::X, Block::Y);
    if (method == CheckMethod::TrivialIdeal)
    {
        sigma += Polynomial::one(ring);
    }
    return {ring,
            {systemCharPoly(ring, quorums, Block::X),
             systemCharPoly(ring, quorums, Block::Y), std::move(sigma)}};
}

IdealBasis
availabilityIdealIn(PolyRing const& ring, SetSystem const& quorums,
                    SetSystem const& failProne)
{
    return {ring,
            {systemCharPoly(ring, failProne, Block::X),
             systemCharPoly(ring, quorums, Block::Y),
             sigmaPoly(ring, Block::X, Block::Y) + Polynomial::one(ring)}};
}

IdealBasis
disseminationIdealIn(PolyRing const& ring, SetSystem const& quorums,
                     SetSystem const& failProne)
{
    Block const meet[] = {Block::X, Block::Y};
    return {ring,
            {systemCharPoly(ring, quorums, Block::X),
             systemCharPoly(ring, quorums, Block::Y),
             lambdaPoly(ring, failProne, Block::T),
             deltaPoly(ring, meet, Block::T)}};
}

IdealBasis
maskingIdealIn(PolyRing const& ring, SetSystem const& quorums,
               SetSystem const& failProne)
{
    Block const meet[] = {Block::X, Block::Y, Block::Z};
    return {ring,
            {systemCharPoly(ring, quorums, Block::X),
             systemCharPoly(ring, quorums, Block::Y),
             systemCharPoly(ring, complements(failProne), Block::Z),
             lambdaPoly(ring, failProne, Block::T),
             deltaPoly(ring, meet, Block::T)}};
}

IdealBasis
coverIdealIn(PolyRing const& ring, SetSystem const& failProne)
{
    IdealBasis ideal{ring, {}};
    for (auto b : ring.order().blocks())
    {
        ideal.generators.push_back(systemCharPoly(ring, failProne, b));
    }
    ideal.generators.push_back(omegaPoly(ring, ring.order().blocks()));
    return ideal;
}

BlockLexOrder const kClassicalOrder{Block::X, Block::Y};
BlockLexOrder const kAvailabilityOrder{Block::Y, Block::X};
BlockLexOrder const kDisseminationOrder{Block::X, Block::Y, Block::T};
BlockLexOrder const kMaskingOrder{Block::X, Block::Y, Block::Z, Block::T};
BlockLexOrder const kQ3Order{Block::X, Block::Y, Block::T};
BlockLexOrder const kQ4Order{Block::X, Block::Y, Block::Z, Block::T};

} // namespace

IdealBasis
classicalConsistencyIdeal(SetSystem const& quorums, CheckMethod method)
{
    requireSystem(quorums, "quorum system");
    return classicalIdealIn(PolyRing(quorums.n(), kClassicalOrder), quorums,
                            method);
}

IdealBasis
availabilityIdeal(SetSystem const& quorums, SetSystem const& failProne)
{
    requireSystem(quorums, "quorum system");
    requireSystem(failProne, "fail-prone system");
    requireSameN(quorums, failProne);
    return availabilityIdealIn(PolyRing(quorums.n(), kAvailabilityOrder),
                               quorums, failProne);
}

IdealBasis
disseminationConsistencyIdeal(SetSystem const& quorums,
                              SetSystem const& failProne)
{
    requireSystem(quorums, "quorum system");
    requireSystem(failProne, "fail-prone system");
    requireSameN(quorums, failProne);
    return disseminationIdealIn(PolyRing(quorums.n(), kDisseminationOrder),
                                quorums, failProne);
}

IdealBasis
maskingConsistencyIdeal(SetSystem const& quorums, SetSystem const& failProne)
{
    requireSystem(quorums, "quorum system");
    requireSystem(failProne, "fail-prone system");
    requireSameN(quorums, failProne);
    return maskingIdealIn(PolyRing(quorums.n(), kMaskingOrder), quorums,
                          failProne);
}

IdealBasis
q3Ideal(SetSystem const& failProne)
{
    requireSystem(failProne, "fail-prone system");
    return coverIdealIn(PolyRing(failProne.n(), kQ3Order), failProne);
}

IdealBasis
q4Ideal(SetSystem const& failProne)
{
    requireSystem(failProne, "fail-prone system");
    return coverIdealIn(PolyRing(failProne.n(), kQ4Order), failProne);
}

Verdict
checkConsistencyClassical(SetSystem const& quorums, CheckMethod method,
                          CheckOptions const& options)
{
    requireSystem(quorums, "quorum system");
    PolyRing const ring =
        makeRing(quorums.n(), kClassicalOrder, options.variableBudget);
    IdealBasis const ideal = classicalIdealIn(ring, quorums, method);
    std::uint64_t const expected = power(quorums.size(), 2);
    if (method == CheckMethod::SmCount)
    {
        return countVerdict(Property::ClassicalConsistency, ideal, expected,
                            options);
    }
    Verdict v;
    v.property = Property::ClassicalConsistency;
    v.method = CheckMethod::TrivialIdeal;
    v.expectedCount = expected;
    v.certificate = buchberger(ideal, options.buchberger);
    v.holds = v.certificate.isUnitIdeal();
    return v;
}

Verdict
checkAvailability(SetSystem const& quorums, SetSystem const& failProne,
                  CheckOptions const& options)
{
    requireSystem(quorums, "quorum system");
    requireSystem(failProne, "fail-prone system");
    requireSameN(quorums, failProne);
    PolyRing const ring =
        makeRing(quorums.n(), kAvailabilityOrder, options.variableBudget);
    IdealBasis const ideal = availabilityIdealIn(ring, quorums, failProne);

    Verdict v;
    v.property = Property::Availability;
    v.method = CheckMethod::SmCount;
    v.expectedCount = failProne.size();
    v.certificate = buchberger(ideal, options.buchberger);
    Block const keep[] = {Block::X};
    auto const sub = eliminationSubbasis(v.certificate, keep);
    v.observedCount = standardMonomialCount(sub, ring.blockMask(Block::X));
    v.holds = *v.observedCount == v.expectedCount;
    return v;
}

Verdict
checkConsistencyDissemination(SetSystem const& quorums,
                              SetSystem const& failProne,
                              CheckOptions const& options)
{
    requireSystem(quorums, "quorum system");
    requireSystem(failProne, "fail-prone system");
    requireSameN(quorums, failProne);
    PolyRing const ring =
        makeRing(quorums.n(), kDisseminationOrder, options.variableBudget);
    std::uint64_t const fstar = oracle::fstarEnumerate(failProne).size();
    return countVerdict(Property::DisseminationConsistency,
                        disseminationIdealIn(ring, quorums, failProne),
                        power(quorums.size(), 2) * fstar, options);
}

Verdict
checkConsistencyMasking(SetSystem const& quorums, SetSystem const& failProne,
                        CheckOptions const& options)
{
    requireSystem(quorums, "quorum system");
    requireSystem(failProne, "fail-prone system");
    requireSameN(quorums, failProne);
    PolyRing const ring =
        makeRing(quorums.n(), kMaskingOrder, options.variableBudget);
    std::uint64_t const fstar = oracle::fstarEnumerate(failProne).size();
    return countVerdict(Property::MaskingConsistency,
                        maskingIdealIn(ring, quorums, failProne),
                        power(quorums.size(), 2) * failProne.size() * fstar,
                        options);
}

Verdict
checkQ3(SetSystem const& failProne, CheckOptions const& options)
{
    requireSystem(failProne, "fail-prone system");
    PolyRing const ring =
        makeRing(failProne.n(), kQ3Order, options.variableBudget);
    return countVerdict(Property::Q3, coverIdealIn(ring, failProne),
                        power(failProne.size(), 3), options);
}

Verdict
checkQ4(SetSystem const& failProne, CheckOptions const& options)
{
    requireSystem(failProne, "fail-prone system");
    PolyRing const ring =
        makeRing(failProne.n(), kQ4Order, options.variableBudget);
    return countVerdict(Property::Q4, coverIdealIn(ring, failProne),
                        power(failProne.size(), 4), options);
}

SystemKind
systemKindFromString(std::string_view s)
{
    if (s == "classical")
    {
        return SystemKind::Classical;
    }
    if (s == "dissemination")
    {
        return SystemKind::Dissemination;
    }
    if (s == "masking")
    {
        return SystemKind::Masking;
    }
    throw std::invalid_argument("unknown system kind '" + std::string(s) +
                                "' (classical|dissemination|masking)");
}

std::string
toString(SystemKind k)
{
    switch (k)
    {
    case SystemKind::Classical:
        return "classical";
    case SystemKind::Dissemination:
        return "dissemination";
    case SystemKind::Masking:
        return "masking";
    }
    return "?";
}

int
thresholdQuorumSize(int n, int f, SystemKind kind)
{
    int const faults = kind == SystemKind::Masking ? 2 * f : f;
    // ceil((n + faults + 1) / 2)
    return (n + faults + 2) / 2;
}

ThresholdSystem
thresholdSystem(int n, int f, SystemKind kind, bool literal)
{
    if (n < 1 || n > kMaxProcesses)
    {
        throw std::invalid_argument("n must be in 1..64");
    }
    if (f < 0 || f >= n)
    {
        throw std::invalid_argument("need 0 <= f < n");
    }
    int const q = thresholdQuorumSize(n, f, kind);
    if (q > n)
    {
        throw std::domain_error("no " + toString(kind) + " threshold system: "
                                "quorum size " + std::to_string(q) +
                                " exceeds n = " + std::to_string(n));
    }
    ThresholdSystem out{SetSystem(n), SetSystem(n)};
    for (int size = q; size <= (literal ? n : q); ++size)
    {
        for (auto const& s : subsetsOfSize(n, size))
        {
            out.quorums.add(s);
        }
    }
    for (int size = literal ? 0 : f; size <= f; ++size)
    {
        for (auto const& s : subsetsOfSize(n, size))
        {
            out.failProne.add(s);
        }
    }
    return out;
}

} // namespace qalg

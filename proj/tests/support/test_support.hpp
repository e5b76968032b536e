// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Seeded generators and independent reference helpers shared by the unit
// and acceptance tests. The reference helpers deliberately avoid the library
// code paths they are used to check.

#include "qalg/polynomial.hpp"
#include "qalg/set_system.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace qalg::testing
{

using Rng = std::mt19937_64;

inline int
uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random squarefree polynomial over the variables in `vars`.
inline Polynomial
randomPolynomial(PolyRing const& ring, std::uint64_t vars, Rng& rng,
                 int maxTerms)
{
    std::vector<std::uint64_t> bits;
    for (std::uint64_t v = vars; v != 0; v &= v - 1)
    {
        bits.push_back(v & (~v + 1));
    }
    int const terms = uniform(rng, 1, maxTerms);
    std::vector<Monomial> out;
    for (int k = 0; k < terms; ++k)
    {
        std::uint64_t m = 0;
        for (auto b : bits)
        {
            if (uniform(rng, 0, 1) == 1)
            {
                m |= b;
            }
        }
        out.push_back(Monomial::squarefree(m));
    }
    return Polynomial(ring, out);
}

inline std::vector<Polynomial>
randomGenerators(PolyRing const& ring, Rng& rng, int maxGenerators,
                 int maxTerms)
{
    std::vector<Polynomial> gens;
    int const count = uniform(rng, 1, maxGenerators);
    for (int k = 0; k < count; ++k)
    {
        gens.push_back(
            randomPolynomial(ring, ring.allVariablesMask(), rng, maxTerms));
    }
    return gens;
}

// Value of f at `point` computed term by term from exponents; no use of the
// library's evaluate().
inline bool
referenceEvaluate(Polynomial const& f, std::uint64_t point)
{
    bool value = false;
    for (auto const& t : f.terms())
    {
        bool termValue = true;
        for (int bit = 0; bit < 64; ++bit)
        {
            if (t.exponentAtBit(bit) > 0 && ((point >> bit) & 1U) == 0)
            {
                termValue = false;
            }
        }
        value ^= termValue;
    }
    return value;
}

// All assignments of `vars` (others zero) where every generator vanishes.
inline std::set<std::uint64_t>
referenceVariety(std::vector<Polynomial> const& gens, std::uint64_t vars)
{
    std::set<std::uint64_t> out;
    std::uint64_t sub = 0;
    do
    {
        bool zero = true;
        for (auto const& g : gens)
        {
            if (referenceEvaluate(g, sub))
            {
                zero = false;
                break;
            }
        }
        if (zero)
        {
            out.insert(sub);
        }
        sub = (sub - vars) & vars;
    } while (sub != 0);
    return out;
}

inline ProcessSubset
randomSubset(int n, Rng& rng)
{
    std::uint64_t const mask = (std::uint64_t{1} << n) - 1;
    return ProcessSubset(n, rng() & mask);
}

// Random set system with between 1 and maxMembers distinct members.
inline SetSystem
randomSystem(int n, Rng& rng, int maxMembers)
{
    SetSystem out(n);
    int const want = uniform(rng, 1, maxMembers);
    for (int tries = 0; static_cast<int>(out.size()) < want && tries < 100;
         ++tries)
    {
        ProcessSubset const s = randomSubset(n, rng);
        if (!out.contains(s))
        {
            out.add(s);
        }
    }
    return out;
}

// Random antichain: members added only if incomparable with those present.
inline SetSystem
randomAntichain(int n, Rng& rng, int maxMembers)
{
    SetSystem out(n);
    int const want = uniform(rng, 1, maxMembers);
    for (int tries = 0; static_cast<int>(out.size()) < want && tries < 200;
         ++tries)
    {
        ProcessSubset const s = randomSubset(n, rng);
        bool ok = true;
        for (auto const& m : out.members())
        {
            ok = ok && !s.isSubsetOf(m) && !m.isSubsetOf(s);
        }
        if (ok)
        {
            out.add(s);
        }
    }
    return out;
}

// Every nonempty antichain of subsets of {1..n} with at most maxMembers
// members, each listed once in increasing-bits member order.
inline std::vector<SetSystem>
allAntichains(int n, int maxMembers)
{
    std::vector<SetSystem> out;
    int const universe = 1 << n;
    std::vector<std::uint64_t> chosen;
    std::function<void(int)> extend = [&](int next) {
        if (!chosen.empty())
        {
            SetSystem s(n);
            for (auto b : chosen)
            {
                s.add(ProcessSubset(n, b));
            }
            out.push_back(s);
        }
        if (static_cast<int>(chosen.size()) == maxMembers)
        {
            return;
        }
        for (int b = next; b < universe; ++b)
        {
            auto const cand = static_cast<std::uint64_t>(b);
            bool ok = true;
            for (auto c : chosen)
            {
                ok = ok && (cand & ~c) != 0 && (c & ~cand) != 0;
            }
            if (ok)
            {
                chosen.push_back(cand);
                extend(b + 1);
                chosen.pop_back();
            }
        }
    };
    extend(0);
    return out;
}

inline SetSystem
singletons(int n)
{
    SetSystem out(n);
    for (int i = 0; i < n; ++i)
    {
        out.add(ProcessSubset(n, std::uint64_t{1} << i));
    }
    return out;
}

inline SetSystem
kSubsets(int n, int k)
{
    SetSystem out(n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
    {
        if (std::popcount(b) == k)
        {
            out.add(ProcessSubset(n, b));
        }
    }
    return out;
}

} // namespace qalg::testing
